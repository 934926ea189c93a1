#include "anomaly/theorems.hpp"

#include "anomaly/witten_series.hpp"

#include <numeric>
#include <stdexcept>

namespace anomaly {

namespace {

Rational power(int base, int e)
{
	Rational b(base);
	return e >= 0 ? b.pow(e) : b.pow(-e).inverse();
}

FormPoly one(const RingSpec &spec) { return FormPoly::constant(spec, 1); }

/// Degree-deg part, re-homed in a ring capped at deg.
FormPoly top_in(const FormPoly &f, int deg) { return truncate(top_component(f, deg), deg); }

std::vector<int> roots_of(const RingSpec &spec)
{
	std::vector<int> r(spec.num_roots);
	std::iota(r.begin(), r.end(), 0);
	return r;
}

FormPoly ch_n_reduced(const RingSpec &spec) { return ch_bundle(BundleExpr::euler(spec), spec) - FormPoly::constant(spec, 2); }

int resolve_q_cap(int weight, int q_cap)
{
	if (q_cap <= 0)
		return default_q_cap(weight);
	if (q_cap < required_q_cap(weight))
		throw std::invalid_argument("q cap " + lattice_str(q_cap) + " is below the " + lattice_str(required_q_cap(weight)) +
		                            " needed at weight " + std::to_string(weight));
	return q_cap;
}

void finish(VerificationReport &r, FormPoly lhs, FormPoly rhs)
{
	r.difference = lhs - rhs;
	r.lhs = std::move(lhs);
	r.rhs = std::move(rhs);
	r.check("difference is zero", r.difference.is_zero());
}

void solution_checks(VerificationReport &r, const DualCheck &dual, bool integral)
{
	r.check("residual is zero", dual.upper.residual_zero(), "through q^" + lattice_str(r.q_cap));
	r.check("dual basis agreement", dual.agree);
	if (integral)
		r.check("combination is integral", dual.upper.combo_integral());
	r.h = dual.upper;
}

ThetaConfig tb_config(ThetaVariant variant, const RingSpec &spec, bool xi_is_n, int q_cap)
{
	ThetaConfig cfg;
	cfg.variant = variant;
	cfg.tangent = BundleExpr::tangent(spec) + BundleExpr::euler(spec);
	cfg.xi = xi_is_n ? BundleExpr::euler(spec) : BundleExpr::trivial(2);
	cfg.q_cap = q_cap;
	return cfg;
}

/// Shared driver of the (8k+2)- and (8k+6)-dimensional identities.
VerificationReport verify_tangent_bundle(const std::string &id, int k, int d_b, int factor, int q_cap, const Constants &c)
{
	if (k < 0)
		throw std::invalid_argument(id + ": k must be nonnegative");
	const int w = d_b + 1, deg = 2 * d_b;
	VerificationReport r;
	r.theorem = id;
	r.q_cap = resolve_q_cap(w, q_cap);
	r.params = {{"k", long(k)}, {"dim", long(deg)}, {"weight", long(w)}, {"q_cap", lattice_str(r.q_cap)}};

	const RingSpec spec = RingSpec::manifold(d_b, true, 2);
	QSeries p2 = top_components(q2_bundle(spec, r.q_cap), deg);
	QSeries p1 = top_components(q1_bundle(spec, r.q_cap), deg);
	DualCheck dual = dual_basis_check(p1, p2, w, Rational::pow2(d_b + 1));

	FormPoly lhs = top_in(genus_form(GenusKind::LHat, spec) * euler_hyperbolic(Hyperbolic::Tanh, 1, spec), deg);
	FormPoly rhs(lhs.spec());
	for (int i = 0; i < int(dual.upper.h.size()); ++i)
		rhs += dual.upper.h[i] * (power(c.weight_base, 6 * k - 6 * i) * factor);
	finish(r, lhs, rhs);
	solution_checks(r, dual, true);

	const FormPoly ahat = genus_form(GenusKind::AHat, lhs.spec());
	const FormPoly cosh = euler_hyperbolic(Hyperbolic::Cosh, 1, spec);
	const FormPoly two_sinh = euler_hyperbolic(Hyperbolic::Sinh, 1, spec) * Rational(2);
	auto over_two_sinh = [&](const FormPoly &num) { return top_in(ahat * divide_exact(num, two_sinh), deg); };

	if (id == "thm31") {
		FormPoly h0 = -over_two_sinh(one(spec) - cosh);
		r.check("h0 closed form", dual.upper.h[0] == h0);
		if (dual.upper.h.size() > 1) {
			FormPoly b1_c2 = build_theta(tb_config(ThetaVariant::TB2, spec, false, kHalf), spec).coeff(kHalf);
			FormPoly b1_n = build_theta(tb_config(ThetaVariant::TB2, spec, true, kHalf), spec).coeff(kHalf);
			FormPoly num = b1_c2 - cosh * b1_n - (one(spec) - cosh) * Rational(c.h1_shift * (2 * k + 1));
			r.check("h1 closed form", dual.upper.h[1] == -over_two_sinh(num),
			        "shift " + std::to_string(c.h1_shift * (2 * k + 1)));
		}
	}
	if (dual.upper.h.size() > std::size_t(k + 1))
		r.notes.push_back("h_" + std::to_string(k + 1) + " = " + render_form(dual.upper.h[k + 1]));
	return r;
}

ThetaConfig prime_config(ThetaVariant variant, const RingSpec &spec, int power, int q_cap)
{
	ThetaConfig cfg;
	cfg.variant = variant;
	cfg.tangent = BundleExpr::tangent(spec);
	cfg.xi = power > 0 ? BundleExpr::euler(spec) : BundleExpr::trivial(2);
	cfg.multiplicity = power;
	cfg.q_cap = q_cap;
	return cfg;
}

FormPoly euler_power(Hyperbolic kind, int p, const RingSpec &spec)
{
	return p == 0 ? one(spec) : euler_hyperbolic(kind, p, spec);
}

struct PrimeSides {
	RingSpec spec;
	int power = 0;
	FormPoly lhs;
	FormPoly sinh_power;
};

PrimeSides prime_sides(int d, int n)
{
	PrimeSides s;
	s.power = thm33_power(d, n);
	s.spec = RingSpec::manifold(d, s.power > 0);
	s.sinh_power = euler_power(Hyperbolic::Sinh, s.power, s.spec);
	s.lhs = top_in(genus_form(GenusKind::LHat, s.spec) * euler_power(Hyperbolic::Tanh, s.power, s.spec), 2 * d);
	return s;
}

std::vector<std::pair<std::string, ParamValue>> prime_params(int d, int n)
{
	return {{"d", long(d)},
	        {"n", long(n)},
	        {"dim", long(2 * d)},
	        {"power", long(thm33_power(d, n))},
	        {"weight", long(thm33_weight(d, n))}};
}

using ConstantField = int Constants::*;

const std::vector<std::pair<std::string, ConstantField>> &constant_fields()
{
	static const std::vector<std::pair<std::string, ConstantField>> fields{
	    {"agw_ch", &Constants::agw_ch},
	    {"agw_a", &Constants::agw_a},
	    {"eq14_ch", &Constants::eq14_ch},
	    {"eq14_a", &Constants::eq14_a},
	    {"eq14_n", &Constants::eq14_n},
	    {"thm31_factor", &Constants::thm31_factor},
	    {"thm32_factor", &Constants::thm32_factor},
	    {"h1_shift", &Constants::h1_shift},
	    {"weight_base", &Constants::weight_base},
	    {"cor_d6n1_ch", &Constants::cor_d6n1_ch},
	    {"cor_d6n1_a", &Constants::cor_d6n1_a},
	    {"cor_d6n1_n", &Constants::cor_d6n1_n},
	    {"cor_d6n2", &Constants::cor_d6n2},
	    {"cor_d5n0_ch", &Constants::cor_d5n0_ch},
	    {"cor_d5n0_a", &Constants::cor_d5n0_a},
	    {"cor_d5n0_n", &Constants::cor_d5n0_n},
	    {"cor_d5n1", &Constants::cor_d5n1},
	};
	return fields;
}

} // namespace

std::vector<std::string> constant_names()
{
	std::vector<std::string> out;
	for (const auto &[name, field] : constant_fields())
		out.push_back(name);
	return out;
}

bool set_constant(Constants &c, const std::string &name, int value)
{
	for (const auto &[n, field] : constant_fields())
		if (n == name) {
			c.*field = value;
			return true;
		}
	return false;
}

int get_constant(const Constants &c, const std::string &name)
{
	for (const auto &[n, field] : constant_fields())
		if (n == name)
			return c.*field;
	throw std::invalid_argument("unknown constant " + name);
}

bool VerificationReport::passed() const
{
	if (checks.empty())
		return false;
	for (const auto &c : checks)
		if (!c.pass)
			return false;
	return true;
}

void VerificationReport::check(std::string name, bool pass, std::string detail)
{
	checks.push_back({std::move(name), pass, std::move(detail)});
}

const SubCheck *VerificationReport::find(const std::string &name) const
{
	for (const auto &c : checks)
		if (c.name == name)
			return &c;
	return nullptr;
}

std::string render_form(const FormPoly &f)
{
	try {
		return to_pontryagin(f).str();
	} catch (const NotSymmetricError &) {
		return f.str();
	}
}

int required_q_cap(int weight) { return (weight / 4) * kLatticePerUnit + 2 * kHalf; }

int default_q_cap(int weight) { return (weight / 4) * kLatticePerUnit + 4 * kHalf; }

int thm33_power(int d, int n) { return 2 * n + (d % 2); }

int thm33_weight(int d, int n) { return d - thm33_power(d, n); }

int thm33_log_constant(int d, int n) { return (3 * d - d % 2) / 2 - n; }

VerificationReport verify_agw(const Constants &c)
{
	VerificationReport r;
	r.theorem = "agw";
	r.params = {{"dim", 12L}};
	const RingSpec spec = RingSpec::manifold(6, false);
	const FormPoly ahat = genus_form(GenusKind::AHat, spec);
	const FormPoly ch_t = ch_bundle(BundleExpr::tangent(spec), spec);
	finish(r, top_in(genus_form(GenusKind::LHat, spec), 12),
	       top_in(ahat * ch_t * Rational(c.agw_ch) - ahat * Rational(c.agw_a), 12));
	return r;
}

VerificationReport verify_han_zhang(int k, int s, bool xi_trivial, int q_cap, const Constants &c)
{
	if (k < 0 || s < 0)
		throw std::invalid_argument("han-zhang: k and s must be nonnegative");
	const int d = 4 * k + 2, w = d, l = d + s, deg = 2 * d;
	VerificationReport r;
	r.theorem = "han-zhang";
	r.q_cap = resolve_q_cap(w, q_cap);
	r.params = {{"k", long(k)},
	            {"dim", long(deg)},
	            {"v", s == 0 ? std::string("tm") : "tm-plus-trivial:" + std::to_string(2 * s)},
	            {"xi_trivial", xi_trivial},
	            {"q_cap", lattice_str(r.q_cap)}};

	const RingSpec spec = RingSpec::manifold(d, !xi_trivial);
	ThetaConfig cfg;
	cfg.tangent = BundleExpr::tangent(spec);
	cfg.aux = BundleExpr::tangent(spec) + BundleExpr::trivial(2 * s);
	cfg.xi = xi_trivial ? BundleExpr::trivial(2) : BundleExpr::euler(spec);
	cfg.q_cap = r.q_cap;

	const FormPoly ahat = genus_form(GenusKind::AHat, spec);
	const FormPoly cosh = xi_trivial ? one(spec) : euler_hyperbolic(Hyperbolic::Cosh, 1, spec);
	const FormPoly inv_cosh2 = xi_trivial ? one(spec) : euler_hyperbolic(Hyperbolic::Cosh, -2, spec);
	const FormPoly det = det_half_2cosh(spec, roots_of(spec)) * Rational::pow2(s);

	cfg.variant = ThetaVariant::HZ2;
	QSeries theta2 = build_theta(cfg, spec);
	QSeries p2 = top_components(theta2 * (ahat * cosh), deg);
	cfg.variant = ThetaVariant::HZ1;
	QSeries p1 = top_components(build_theta(cfg, spec) * (ahat * det * inv_cosh2), deg);
	DualCheck dual = dual_basis_check(p1, p2, w, Rational::pow2(l));

	FormPoly lhs = top_in(ahat * det * inv_cosh2, deg);
	FormPoly rhs(lhs.spec());
	for (int i = 0; i < int(dual.upper.h.size()); ++i)
		rhs += dual.upper.h[i] * (Rational::pow2(l + 2 * k + 1) * power(c.weight_base, -6 * i));
	finish(r, lhs, rhs);
	solution_checks(r, dual, true);

	if (k == 1 && s == 0 && xi_trivial) {
		const FormPoly ch_t = ch_bundle(BundleExpr::tangent(spec), spec);
		r.check("dimension-12 closed form", lhs == top_in(ahat * ch_t * Rational(c.agw_ch) - ahat * Rational(c.agw_a), deg));
	}
	if (k == 1 && s == 0 && !xi_trivial) {
		// RHS = c0 B0 + c1 B1 with B1 = -(ch T - 2d) + 3 (ch N - 2).
		const FormPoly ch_t = ch_bundle(BundleExpr::tangent(spec), spec);
		const FormPoly ch_n = ch_n_reduced(spec);
		const FormPoly b1 = theta2.coeff(kHalf);
		r.check("q^{1/2} layer", b1 == FormPoly::constant(spec, 2 * d) - ch_t + ch_n * Rational(3));
		Rational layer[2];
		for (int j = 0; j < 2; ++j)
			for (int i = 0; i < int(dual.upper.h.size()); ++i)
				layer[j] += dual.upper.combo[i][j] * Rational::pow2(l + 2 * k + 1) * power(c.weight_base, -6 * i);
		Rational on_t = -layer[1], on_one = layer[0] + layer[1] * Rational(2 * d), on_n = layer[1] * Rational(3);
		r.notes.push_back("layer coefficients: " + on_t.str() + " A ch(T), " + on_one.str() + " A, " + on_n.str() +
		                  " A (ch(N) - 2)");
		r.check("layer coefficients", on_t == c.eq14_ch && on_one == -c.eq14_a && on_n == -c.eq14_n);
		FormPoly twisted = (ch_t * Rational(c.eq14_ch) - FormPoly::constant(spec, c.eq14_a) - ch_n * Rational(c.eq14_n)) *
		                   ahat * cosh;
		r.check("twisted dimension-12 closed form", lhs == top_in(twisted, deg));
	}
	return r;
}

VerificationReport verify_liu(int k, int q_cap, const Constants &c)
{
	VerificationReport r = verify_han_zhang(k, 0, true, q_cap, c);
	r.theorem = "liu";
	return r;
}

VerificationReport verify_thm31(int k, int q_cap, const Constants &c)
{
	return verify_tangent_bundle("thm31", k, 4 * k + 1, c.thm31_factor, q_cap, c);
}

VerificationReport verify_thm32(int k, int q_cap, const Constants &c)
{
	return verify_tangent_bundle("thm32", k, 4 * k + 3, c.thm32_factor, q_cap, c);
}

VerificationReport verify_thm33(int d, int n, int q_cap, const Constants &c)
{
	if (d < 1 || n < 0)
		throw std::invalid_argument("thm33: need d >= 1 and n >= 0");
	const int w = thm33_weight(d, n), deg = 2 * d;
	if (w <= 0)
		return verify_degenerate(d, n);
	VerificationReport r;
	r.theorem = "thm33";
	r.q_cap = resolve_q_cap(w, q_cap);
	r.params = prime_params(d, n);
	r.params.emplace_back("q_cap", lattice_str(r.q_cap));

	PrimeSides s = prime_sides(d, n);
	const FormPoly ahat = genus_form(GenusKind::AHat, s.spec);
	QSeries th2 = build_theta(prime_config(ThetaVariant::Prime2, s.spec, s.power, r.q_cap), s.spec);
	QSeries th1 = build_theta(prime_config(ThetaVariant::Prime1, s.spec, s.power, r.q_cap), s.spec);
	QSeries p2 = top_components(th2 * (ahat * s.sinh_power), deg);
	QSeries p1 = top_components(th1 * (genus_form(GenusKind::LHat, s.spec) * euler_power(Hyperbolic::Tanh, s.power, s.spec)),
	                            deg);
	DualCheck dual = dual_basis_check(p1, p2, w, Rational::pow2(d));

	FormPoly rhs(s.lhs.spec());
	for (int i = 0; i < int(dual.upper.h.size()); ++i)
		rhs += truncate(dual.upper.h[i], deg) * (Rational::pow2(thm33_log_constant(d, n)) * power(c.weight_base, -6 * i));
	finish(r, s.lhs, rhs);
	solution_checks(r, dual, false);
	r.notes.push_back("constant 2^" + std::to_string(thm33_log_constant(d, n)) + ", m = " + std::to_string(w / 4));

	auto twisted = [&](int on_ch, int on_one, int on_n) {
		const FormPoly ch_t = ch_bundle(BundleExpr::tangent(s.spec), s.spec);
		FormPoly f = ch_t * Rational(on_ch) + FormPoly::constant(s.spec, on_one) + ch_n_reduced(s.spec) * Rational(on_n);
		return top_in(f * ahat * s.sinh_power, deg);
	};
	if (d == 6 && n == 0) {
		const FormPoly ch_t = ch_bundle(BundleExpr::tangent(s.spec), s.spec);
		r.check("dimension-12 closed form", s.lhs == top_in(ahat * ch_t * Rational(c.agw_ch) - ahat * Rational(c.agw_a), deg));
	}
	if (d == 6 && n == 1)
		r.check("sinh^2 closed form", s.lhs == twisted(c.cor_d6n1_ch, c.cor_d6n1_a, c.cor_d6n1_n));
	if (d == 6 && n == 2)
		r.check("sinh^4 closed form", s.lhs == top_in(ahat * s.sinh_power, deg) * Rational(c.cor_d6n2));
	if (d == 5 && n == 0)
		r.check("sinh closed form", s.lhs == twisted(c.cor_d5n0_ch, c.cor_d5n0_a, c.cor_d5n0_n));
	if (d == 5 && n == 1)
		r.check("sinh^3 closed form", s.lhs == top_in(ahat * s.sinh_power, deg) * Rational(c.cor_d5n1));
	return r;
}

VerificationReport verify_degenerate(int d, int n)
{
	if (d < 1 || n < 0)
		throw std::invalid_argument("degenerate: need d >= 1 and n >= 0");
	const int w = thm33_weight(d, n), deg = 2 * d;
	if (w > 0)
		throw std::invalid_argument("degenerate: weight " + std::to_string(w) + " is positive");
	VerificationReport r;
	r.theorem = "degenerate";
	r.params = prime_params(d, n);
	PrimeSides s = prime_sides(d, n);
	const FormPoly a_sinh = top_in(genus_form(GenusKind::AHat, s.spec) * s.sinh_power, deg);
	if (w < 0) {
		// sinh^N with 2N > 2d has no component in degree 2d.
		finish(r, s.lhs, a_sinh);
		r.check("left side is zero", s.lhs.is_zero());
		r.check("right side is zero", a_sinh.is_zero());
		r.notes.push_back("both sides zero");
		return r;
	}
	// Weight 0: the modular form is constant, h0 = {A sinh^N}.
	r.q_cap = default_q_cap(0);
	QSeries th2 = build_theta(prime_config(ThetaVariant::Prime2, s.spec, s.power, r.q_cap), s.spec);
	QSeries p2 = top_components(th2 * (genus_form(GenusKind::AHat, s.spec) * s.sinh_power), deg);
	HSolution sol = solve_in_basis(p2, build_basis(0, BasisSide::Upper, r.q_cap));
	FormPoly rhs = truncate(sol.h[0], deg) * Rational::pow2(thm33_log_constant(d, n));
	finish(r, s.lhs, rhs);
	r.check("residual is zero", sol.residual_zero(), "through q^" + lattice_str(r.q_cap));
	r.h = sol;
	r.notes.push_back("common value / 2^" + std::to_string(thm33_log_constant(d, n)) + " = " +
	                  render_form(s.lhs * Rational::pow2(-thm33_log_constant(d, n))));
	return r;
}

} // namespace anomaly
