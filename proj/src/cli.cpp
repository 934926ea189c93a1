#include "anomaly/cli.hpp"

#include "anomaly/pushforward.hpp"
#include "anomaly/theta.hpp"
#include "anomaly/witten_series.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace anomaly::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct Options {
	std::string theorem;
	std::optional<int> k, d, n;
	int qorder = 0;
	bool xi_trivial = false;
	std::string v_config = "tm";
	std::string format = "json";
	std::string out_path;
	bool large = false;
	bool full = false;
	std::vector<std::string> overrides;
	std::string series;
	std::string which;
	int dim = 0;
};

// Largest ring the drivers accept without --large.
constexpr int kDefaultMaxK = 1;
constexpr int kDefaultMaxD = 8;

Json param_value(const ParamValue &v)
{
	if (auto p = std::get_if<long>(&v))
		return *p;
	if (auto b = std::get_if<bool>(&v))
		return *b;
	return std::get<std::string>(v);
}

Json report_object(const VerificationReport &r)
{
	Json params = Json::object();
	for (const auto &[k, v] : r.params)
		params[k] = param_value(v);
	Json h = Json::array();
	if (r.h)
		for (std::size_t i = 0; i < r.h->h.size(); ++i) {
			Json combo = Json::array();
			for (std::size_t j = 0; j < r.h->combo[i].size(); ++j)
				if (!r.h->combo[i][j].is_zero())
					combo.push_back({{"j", j}, {"c", fraction(r.h->combo[i][j])}});
			h.push_back({{"r", i}, {"form", render_form(r.h->h[i])}, {"combo", combo}});
		}
	Json checks = Json::array();
	for (const auto &c : r.checks) {
		Json one = {{"name", c.name}, {"pass", c.pass}};
		if (!c.detail.empty())
			one["detail"] = c.detail;
		checks.push_back(one);
	}
	return Json{{"theorem", r.theorem},
	            {"params", params},
	            {"status", r.passed() ? "pass" : "fail"},
	            {"lhs", render_form(r.lhs)},
	            {"rhs", render_form(r.rhs)},
	            {"difference", render_form(r.difference)},
	            {"h", h},
	            {"residual_max_order_checked", fraction(Rational(r.q_cap, kLatticePerUnit))},
	            {"notes", r.notes},
	            {"checks", checks}};
}

std::string param_text(const ParamValue &v)
{
	if (auto p = std::get_if<long>(&v))
		return std::to_string(*p);
	if (auto b = std::get_if<bool>(&v))
		return *b ? "true" : "false";
	return std::get<std::string>(v);
}

Constants constants_from(const std::vector<std::string> &overrides)
{
	Constants c;
	for (const auto &o : overrides) {
		auto eq = o.find('=');
		if (eq == std::string::npos)
			throw UsageError("--set expects NAME=VALUE, got " + o);
		int value;
		try {
			value = std::stoi(o.substr(eq + 1));
		} catch (const std::exception &) {
			throw UsageError("--set value is not an integer: " + o);
		}
		if (!set_constant(c, o.substr(0, eq), value))
			throw UsageError("unknown constant " + o.substr(0, eq));
	}
	return c;
}

int require_param(const std::optional<int> &v, const char *flag, const std::string &theorem)
{
	if (!v)
		throw UsageError(theorem + " needs " + flag);
	if (*v < 0)
		throw UsageError(std::string(flag) + " must be nonnegative");
	return *v;
}

int parse_v_config(const std::string &v)
{
	if (v == "tm")
		return 0;
	const std::string prefix = "tm-plus-trivial:";
	if (v.rfind(prefix, 0) == 0) {
		int rank;
		try {
			rank = std::stoi(v.substr(prefix.size()));
		} catch (const std::exception &) {
			throw UsageError("bad --v-config " + v);
		}
		if (rank < 0 || rank % 2 != 0)
			throw UsageError("--v-config trivial rank must be even and nonnegative");
		return rank / 2;
	}
	throw UsageError("bad --v-config " + v + " (expected tm or tm-plus-trivial:S)");
}

int q_cap_of(const Options &o) { return o.qorder * kHalf; }

void check_q_cap(const Options &o, int weight)
{
	if (o.qorder < 0)
		throw UsageError("--qorder must be nonnegative");
	int cap = q_cap_of(o);
	if (cap > 0 && cap < required_q_cap(weight))
		throw UsageError("--qorder " + std::to_string(o.qorder) + " does not cover the pivots plus two orders; need at least " +
		                 std::to_string(required_q_cap(weight) / kHalf));
}

void check_k(const Options &o, int k)
{
	if (k > kDefaultMaxK && !o.large)
		throw UsageError("k > " + std::to_string(kDefaultMaxK) + " needs --large");
}

void check_variables(int count)
{
	if (count > kMaxVariables)
		throw UsageError("ring would need " + std::to_string(count) + " variables; the limit is " +
		                 std::to_string(kMaxVariables));
}

VerificationReport dispatch_verify(const Options &o, const Constants &c)
{
	const std::string &t = o.theorem;
	const int cap = q_cap_of(o);
	if (t == "agw")
		return verify_agw(c);
	if (t == "liu" || t == "han-zhang" || t == "thm31" || t == "thm32" || t == "fiber-31") {
		int k = o.k ? require_param(o.k, "--k", t) : 0;
		check_q_cap(o, t == "thm32" ? 4 * k + 4 : 4 * k + 2);
		check_k(o, k);
		check_variables(t == "thm32" ? 4 * k + 4 : 4 * k + 3);
		if (t == "liu")
			return verify_liu(k, cap, c);
		if (t == "han-zhang")
			return verify_han_zhang(k, parse_v_config(o.v_config), o.xi_trivial, cap, c);
		if (t == "thm31")
			return verify_thm31(k, cap, c);
		if (t == "thm32")
			return verify_thm32(k, cap, c);
		return verify_fiber_to_31(k, cap, c);
	}
	if (t == "thm33" || t == "degenerate" || t == "fiber-reduce") {
		int d = require_param(o.d, "--d", t), n = require_param(o.n, "--n", t);
		if (d < 1)
			throw UsageError("--d must be at least 1");
		if (d > kDefaultMaxD && !o.large)
			throw UsageError("d > " + std::to_string(kDefaultMaxD) + " needs --large");
		check_variables(d + 2);
		int w = thm33_weight(d, n);
		if (t == "degenerate") {
			if (w > 0)
				throw UsageError("degenerate needs d <= 2n + (d mod 2)");
			return verify_degenerate(d, n);
		}
		if (t == "fiber-reduce" && w <= 0)
			throw UsageError("fiber-reduce needs a source with positive weight");
		if (w > 0)
			check_q_cap(o, w);
		return t == "thm33" ? verify_thm33(d, n, cap, c) : verify_fiber_reduction(d, n, cap, c);
	}
	throw UsageError("unknown theorem " + t);
}

void emit(const Options &o, const std::string &body, std::ostream &out)
{
	if (o.out_path.empty()) {
		out << body;
		return;
	}
	std::ofstream f(o.out_path);
	if (!f)
		throw UsageError("cannot open " + o.out_path);
	f << body;
}

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

// --- expand ------------------------------------------------------------------

struct Expansion {
	Json params = Json::object();
	QSeries series;
};

ThetaConfig hz_config(ThetaVariant v, const RingSpec &s, int extra, bool trivial, int cap)
{
	ThetaConfig cfg;
	cfg.variant = v;
	cfg.tangent = BundleExpr::tangent(s);
	cfg.aux = BundleExpr::tangent(s) + BundleExpr::trivial(2 * extra);
	cfg.xi = trivial ? BundleExpr::trivial(2) : BundleExpr::euler(s);
	cfg.q_cap = cap;
	return cfg;
}

Expansion expand_series(const Options &o)
{
	const int cap = o.qorder > 0 ? q_cap_of(o) : 4 * kHalf;
	Expansion e;
	const std::string &s = o.series;
	if (s == "delta1" || s == "eps1" || s == "delta2" || s == "eps2") {
		auto g = modular_generators(cap);
		e.series = s == "delta1" ? g.delta1 : s == "eps1" ? g.eps1 : s == "delta2" ? g.delta2 : g.eps2;
		return e;
	}
	if (s == "theta-null-1" || s == "theta-null-2" || s == "theta-null-3") {
		ThetaKind kind = s.back() == '1' ? ThetaKind::Theta1 : s.back() == '2' ? ThetaKind::Theta2 : ThetaKind::Theta3;
		e.series = theta_null(kind, cap);
		return e;
	}
	if (s == "theta1" || s == "theta2") {
		int k = o.k ? require_param(o.k, "--k", s) : 0;
		check_k(o, k);
		int extra = parse_v_config(o.v_config);
		RingSpec spec = RingSpec::manifold(4 * k + 2, !o.xi_trivial);
		e.params = {{"k", k}, {"dim", 8 * k + 4}, {"v", o.v_config}, {"xi_trivial", o.xi_trivial}};
		e.series = build_theta(hz_config(s == "theta1" ? ThetaVariant::HZ1 : ThetaVariant::HZ2, spec, extra, o.xi_trivial, cap),
		                       spec);
		return e;
	}
	if (s == "thetaB1" || s == "thetaB2") {
		int k = o.k ? require_param(o.k, "--k", s) : 0;
		check_k(o, k);
		RingSpec spec = RingSpec::manifold(4 * k + 1, true);
		ThetaConfig cfg;
		cfg.variant = s == "thetaB1" ? ThetaVariant::TB1 : ThetaVariant::TB2;
		cfg.tangent = BundleExpr::tangent(spec) + BundleExpr::euler(spec);
		cfg.xi = o.xi_trivial ? BundleExpr::trivial(2) : BundleExpr::euler(spec);
		cfg.q_cap = cap;
		e.params = {{"k", k}, {"dim", 8 * k + 2}, {"xi_trivial", o.xi_trivial}};
		e.series = build_theta(cfg, spec);
		return e;
	}
	if (s == "prime1" || s == "prime2") {
		int d = require_param(o.d, "--d", s), n = require_param(o.n, "--n", s);
		if (d < 1 || (d > kDefaultMaxD && !o.large))
			throw UsageError("--d out of range");
		int power = thm33_power(d, n);
		RingSpec spec = RingSpec::manifold(d, true);
		ThetaConfig cfg;
		cfg.variant = s == "prime1" ? ThetaVariant::Prime1 : ThetaVariant::Prime2;
		cfg.tangent = BundleExpr::tangent(spec);
		cfg.xi = BundleExpr::euler(spec);
		cfg.multiplicity = power;
		cfg.q_cap = cap;
		e.params = {{"d", d}, {"n", n}, {"power", power}};
		e.series = build_theta(cfg, spec);
		return e;
	}
	throw UsageError("unknown series " + s);
}

std::string expansion_body(const Options &o, const Expansion &e)
{
	if (o.format == "text") {
		std::ostringstream t;
		t << "series: " << o.series << "\n";
		for (int x : e.series.support())
			t << "q^" << lattice_str(x) << ": " << render_form(e.series.coeff(x)) << "\n";
		return t.str();
	}
	Json coeffs = Json::array();
	for (int x : e.series.support())
		coeffs.push_back({{"q", lattice_str(x)}, {"value", render_form(e.series.coeff(x))}});
	Json j = {{"series", o.series},
	          {"params", e.params},
	          {"q_cap", lattice_str(e.series.q_cap())},
	          {"coefficients", coeffs}};
	return j.dump(2) + "\n";
}

// --- suite -------------------------------------------------------------------

std::string suite_body(const Options &o, const std::vector<CriterionResult> &results, double total_ms)
{
	bool all = true;
	for (const auto &r : results)
		all = all && r.pass;
	if (o.format == "text") {
		std::ostringstream t;
		for (const auto &r : results) {
			t << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << ": " << r.name << " [" << r.summary << "]\n";
			for (const auto &f : r.failures)
				t << "    " << f << "\n";
		}
		t << (all ? "all criteria passed" : "some criteria failed") << "\n";
		return t.str();
	}
	Json criteria = Json::array();
	Json times = Json::array();
	for (const auto &r : results) {
		criteria.push_back({{"id", r.id},
		                    {"name", r.name},
		                    {"status", r.pass ? "pass" : "fail"},
		                    {"summary", r.summary},
		                    {"failures", r.failures}});
		times.push_back({{"id", r.id}, {"wall_time_ms", r.wall_ms}});
	}
	Json j = {{"envelope", {{"wall_time_ms", total_ms}, {"criteria", times}}},
	          {"report", {{"suite", o.full ? "full" : "quick"}, {"status", all ? "pass" : "fail"}, {"criteria", criteria}}}};
	return j.dump(2) + "\n";
}

void add_output_flags(CLI::App *cmd, Options &o)
{
	cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
	cmd->add_option("--out", o.out_path, "write to this file instead of stdout");
}

} // namespace

std::string fraction(const Rational &x) { return x.numerator() + "/" + x.denominator(); }

std::string report_body_json(const VerificationReport &r) { return report_object(r).dump(2) + "\n"; }

std::string report_json(const VerificationReport &r, double wall_ms)
{
	Json j = {{"envelope", {{"wall_time_ms", wall_ms}}}, {"report", report_object(r)}};
	return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport &r)
{
	std::ostringstream t;
	t << "theorem: " << r.theorem << "\n";
	t << "params:";
	for (const auto &[k, v] : r.params)
		t << " " << k << "=" << param_text(v);
	t << "\nstatus: " << (r.passed() ? "pass" : "fail") << "\n";
	t << "lhs: " << render_form(r.lhs) << "\n";
	t << "rhs: " << render_form(r.rhs) << "\n";
	t << "difference: " << render_form(r.difference) << "\n";
	if (r.h)
		for (std::size_t i = 0; i < r.h->h.size(); ++i) {
			t << "h" << i << ": " << render_form(r.h->h[i]) << "\n";
			t << "  combo:";
			for (std::size_t j = 0; j < r.h->combo[i].size(); ++j)
				if (!r.h->combo[i][j].is_zero())
					t << " " << fraction(r.h->combo[i][j]) << "*P" << j;
			t << "\n";
		}
	t << "residual checked through q^" << lattice_str(r.q_cap) << "\n";
	for (const auto &c : r.checks)
		t << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
	for (const auto &n : r.notes)
		t << "note: " << n << "\n";
	return t.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	Options o;
	CLI::App app{"Exact verification of anomaly cancellation formulas", "anomaly"};
	app.require_subcommand(1);

	auto *verify = app.add_subcommand("verify", "verify one identity");
	verify->add_option("theorem", o.theorem, "agw | liu | han-zhang | thm31 | thm32 | thm33 | degenerate | fiber-31 | fiber-reduce")
	    ->required();
	verify->add_option("--k", o.k, "dimension parameter k");
	verify->add_option("--d", o.d, "half dimension d");
	verify->add_option("--n", o.n, "twisting parameter n");
	verify->add_option("--qorder", o.qorder, "q cap in half-integer orders (default: pivots plus four)");
	verify->add_flag("--xi-trivial", o.xi_trivial, "take the rank-2 bundle trivial");
	verify->add_option("--v-config", o.v_config, "tm or tm-plus-trivial:S");
	verify->add_flag("--large", o.large, "allow k >= 2 and d > 8");
	verify->add_option("--set", o.overrides, "override a quoted constant, NAME=VALUE");
	add_output_flags(verify, o);

	auto *expand = app.add_subcommand("expand", "print a q-expansion");
	expand->add_option("--series", o.series,
	                   "delta1 | eps1 | delta2 | eps2 | theta-null-1..3 | theta1 | theta2 | thetaB1 | thetaB2 | prime1 | prime2")
	    ->required();
	expand->add_option("--k", o.k, "dimension parameter k");
	expand->add_option("--d", o.d, "half dimension d");
	expand->add_option("--n", o.n, "twisting parameter n");
	expand->add_option("--qorder", o.qorder, "q cap in half-integer orders (default 4)");
	expand->add_flag("--xi-trivial", o.xi_trivial, "take the rank-2 bundle trivial");
	expand->add_option("--v-config", o.v_config, "tm or tm-plus-trivial:S");
	expand->add_flag("--large", o.large, "allow k >= 2 and d > 8");
	add_output_flags(expand, o);

	auto *genus = app.add_subcommand("genus", "print a genus form in the Pontryagin basis");
	genus->add_option("--which", o.which, "ahat or lhat")->required()->check(CLI::IsMember({"ahat", "lhat"}));
	genus->add_option("--dim", o.dim, "manifold dimension 2d")->required();
	add_output_flags(genus, o);

	auto *suite = app.add_subcommand("suite", "run every acceptance criterion");
	suite->add_flag("--full", o.full, "add the k = 2 instances");
	suite->add_option("--set", o.overrides, "override a quoted constant, NAME=VALUE");
	add_output_flags(suite, o);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? kExitPass : kExitUsage;
	}

	try {
		const auto t0 = Clock::now();
		if (verify->parsed()) {
			Constants c = constants_from(o.overrides);
			VerificationReport r = dispatch_verify(o, c);
			emit(o, o.format == "text" ? report_text(r) : report_json(r, ms_since(t0)), out);
			if (!r.passed())
				err << "verification failed: " << r.theorem << "\n";
			return r.passed() ? kExitPass : kExitFail;
		}
		if (expand->parsed()) {
			emit(o, expansion_body(o, expand_series(o)), out);
			return kExitPass;
		}
		if (genus->parsed()) {
			if (o.dim < 0 || o.dim % 2 != 0)
				throw UsageError("--dim must be even and nonnegative");
			check_variables(o.dim / 2);
			RingSpec spec{o.dim / 2, false, 0, o.dim};
			std::string form = render_form(genus_form(o.which == "ahat" ? GenusKind::AHat : GenusKind::LHat, spec));
			if (o.format == "text")
				emit(o, form + "\n", out);
			else
				emit(o, Json{{"genus", o.which}, {"dim", o.dim}, {"form", form}}.dump(2) + "\n", out);
			return kExitPass;
		}
		Constants c = constants_from(o.overrides);
		auto results = run_acceptance(o.full, c);
		emit(o, suite_body(o, results, ms_since(t0)), out);
		bool all = true;
		for (const auto &r : results)
			if (!r.pass) {
				all = false;
				err << "failed: criterion " << r.id << " (" << r.name << ")";
				if (!r.failures.empty())
					err << ": " << r.failures.front();
				err << "\n";
			}
		return all ? kExitPass : kExitFail;
	} catch (const std::invalid_argument &e) {
		err << "usage error: " << e.what() << "\n" << app.help();
		return kExitUsage;
	}
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
	std::vector<std::string> args;
	for (int i = 1; i < argc; ++i)
		args.emplace_back(argv[i]);
	return run(args, out, err);
}

} // namespace anomaly::cli
