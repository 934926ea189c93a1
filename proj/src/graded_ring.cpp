#include "anomaly/graded_ring.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_map>

namespace anomaly {

RingSpec RingSpec::manifold(int d, bool euler, int extra_degree)
{
	RingSpec s{d, euler, 0, 2 * d + extra_degree};
	s.validate();
	return s;
}

int RingSpec::root(int j) const
{
	if (j < 0 || j >= num_roots)
		throw std::out_of_range("root index");
	return j;
}

int RingSpec::euler() const
{
	if (!has_euler)
		throw std::out_of_range("ring has no Euler variable");
	return num_roots;
}

int RingSpec::aux(int i) const
{
	if (i < 0 || i >= extra_roots)
		throw std::out_of_range("aux root index");
	return num_roots + (has_euler ? 1 : 0) + i;
}

std::string RingSpec::variable_name(int var) const
{
	if (var < num_roots)
		return "x" + std::to_string(var + 1);
	if (has_euler && var == num_roots)
		return "u";
	return "v" + std::to_string(var - num_roots - (has_euler ? 1 : 0) + 1);
}

RingSpec RingSpec::with_cap(int cap) const
{
	RingSpec s = *this;
	s.degree_cap = cap;
	s.validate();
	return s;
}

void RingSpec::validate() const
{
	if (num_roots < 0 || extra_roots < 0 || variable_count() > kMaxVariables)
		throw std::invalid_argument("ring spec: bad variable count");
	if (degree_cap < 0 || degree_cap % 2 != 0 || degree_cap > 250)
		throw std::invalid_argument("ring spec: degree cap must be even and in [0, 250]");
}

bool Monomial::divides(const Monomial &o) const
{
	for (int i = 0; i < kMaxVariables; ++i)
		if (exp[i] > o.exp[i])
			return false;
	return true;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	Monomial r;
	for (int i = 0; i < kMaxVariables; ++i)
		r.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
	return r;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept
{
	std::uint64_t lo, hi;
	std::memcpy(&lo, m.exp.data(), 8);
	std::memcpy(&hi, m.exp.data() + 8, 8);
	std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
	h ^= (hi + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
	h *= 0xBF58476D1CE4E5B9ull;
	return static_cast<std::size_t>(h ^ (h >> 31));
}

bool graded_lex_less(const Monomial &a, const Monomial &b)
{
	int wa = a.weight(), wb = b.weight();
	if (wa != wb)
		return wa < wb;
	for (int i = 0; i < kMaxVariables; ++i)
		if (a.exp[i] != b.exp[i])
			return a.exp[i] > b.exp[i];
	return false;
}

namespace {

bool term_less(const FormPoly::Term &a, const FormPoly::Term &b) { return graded_lex_less(a.first, b.first); }

void require_same(const RingSpec &a, const RingSpec &b, const char *op)
{
	if (!(a == b))
		throw SpecMismatch(std::string(op) + ": ring spec mismatch");
}

std::string render(std::span<const FormPoly::Term> terms, auto &&name_of)
{
	if (terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[m, c] : terms) {
		Rational a = c.sign() < 0 ? -c : c;
		if (first)
			os << (c.sign() < 0 ? "-" : "");
		else
			os << (c.sign() < 0 ? " - " : " + ");
		first = false;
		std::string mono;
		for (int v = 0; v < kMaxVariables; ++v) {
			if (m.exp[v] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += name_of(v);
			if (m.exp[v] > 1)
				mono += "^" + std::to_string(m.exp[v]);
		}
		if (mono.empty())
			os << a.str();
		else if (a.is_one())
			os << mono;
		else
			os << a.str() << "*" << mono;
	}
	return os.str();
}

} // namespace

FormPoly FormPoly::constant(const RingSpec &spec, const Rational &c)
{
	FormPoly p(spec);
	if (!c.is_zero())
		p.terms_.emplace_back(Monomial{}, c);
	return p;
}

FormPoly FormPoly::variable(const RingSpec &spec, int var, const Rational &coeff)
{
	if (var < 0 || var >= spec.variable_count())
		throw std::out_of_range("variable index");
	Monomial m;
	m.exp[var] = 1;
	return monomial(spec, m, coeff);
}

FormPoly FormPoly::monomial(const RingSpec &spec, const Monomial &m, const Rational &coeff)
{
	FormPoly p(spec);
	if (!coeff.is_zero() && m.degree() <= spec.degree_cap)
		p.terms_.emplace_back(m, coeff);
	return p;
}

FormPoly FormPoly::from_terms(const RingSpec &spec, std::vector<Term> terms)
{
	FormPoly p(spec);
	std::sort(terms.begin(), terms.end(), term_less);
	for (auto &t : terms) {
		if (t.first.degree() > spec.degree_cap)
			continue;
		if (!p.terms_.empty() && p.terms_.back().first == t.first)
			p.terms_.back().second += t.second;
		else
			p.terms_.push_back(std::move(t));
	}
	std::erase_if(p.terms_, [](const Term &t) { return t.second.is_zero(); });
	return p;
}

Rational FormPoly::constant_term() const
{
	if (!terms_.empty() && terms_.front().first.weight() == 0)
		return terms_.front().second;
	return 0;
}

Rational FormPoly::coefficient(const Monomial &m) const
{
	auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
	                           [](const Term &t, const Monomial &k) { return graded_lex_less(t.first, k); });
	if (it != terms_.end() && it->first == m)
		return it->second;
	return 0;
}

std::string FormPoly::str() const
{
	return render(terms_, [this](int v) { return spec_.variable_name(v); });
}

FormPoly &FormPoly::operator+=(const FormPoly &o)
{
	require_same(spec_, o.spec_, "poly_add");
	std::vector<Term> out;
	out.reserve(terms_.size() + o.terms_.size());
	auto a = terms_.begin(), ae = terms_.end();
	auto b = o.terms_.begin(), be = o.terms_.end();
	while (a != ae || b != be) {
		if (b == be || (a != ae && graded_lex_less(a->first, b->first))) {
			out.push_back(std::move(*a++));
		} else if (a == ae || graded_lex_less(b->first, a->first)) {
			out.push_back(*b++);
		} else {
			Rational s = a->second + b->second;
			if (!s.is_zero())
				out.emplace_back(a->first, std::move(s));
			++a;
			++b;
		}
	}
	terms_ = std::move(out);
	return *this;
}

FormPoly &FormPoly::operator-=(const FormPoly &o) { return *this += -o; }

FormPoly &FormPoly::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &t : terms_)
		t.second *= c;
	return *this;
}

FormPoly &FormPoly::operator*=(const FormPoly &o)
{
	*this = *this * o;
	return *this;
}

FormPoly operator*(const FormPoly &a, const FormPoly &b)
{
	require_same(a.spec_, b.spec_, "poly_mul");
	FormPoly r(a.spec_);
	if (a.is_zero() || b.is_zero())
		return r;
	const int cap_weight = a.spec_.degree_cap / 2;
	const FormPoly &big = a.size() >= b.size() ? a : b;
	const FormPoly &small = a.size() >= b.size() ? b : a;
	std::vector<int> big_w(big.size());
	for (std::size_t i = 0; i < big.size(); ++i)
		big_w[i] = big.terms_[i].first.weight();

	std::unordered_map<Monomial, Rational, MonomialHash> acc;
	acc.reserve(big.size() * 2);
	for (const auto &[ms, cs] : small.terms_) {
		int ws = ms.weight();
		if (ws > cap_weight)
			break;
		for (std::size_t i = 0; i < big.size() && big_w[i] + ws <= cap_weight; ++i)
			acc[ms * big.terms_[i].first].add_product(cs, big.terms_[i].second);
	}
	r.terms_.reserve(acc.size());
	for (auto &[m, c] : acc)
		if (!c.is_zero())
			r.terms_.emplace_back(m, std::move(c));
	std::sort(r.terms_.begin(), r.terms_.end(), term_less);
	return r;
}

FormPoly poly_add(const FormPoly &a, const FormPoly &b) { return a + b; }
FormPoly poly_mul(const FormPoly &a, const FormPoly &b) { return a * b; }

FormPoly poly_pow(const FormPoly &f, int e)
{
	if (e < 0)
		return poly_pow(poly_invert(f), -e);
	FormPoly r = FormPoly::constant(f.spec(), 1);
	FormPoly base = f;
	while (e > 0) {
		if (e & 1)
			r *= base;
		e >>= 1;
		if (e)
			base *= base;
	}
	return r;
}

FormPoly truncate(const FormPoly &f, int cap)
{
	RingSpec s = f.spec().with_cap(std::min(cap, f.spec().degree_cap));
	std::vector<FormPoly::Term> t(f.terms().begin(), f.terms().end());
	return FormPoly::from_terms(s, std::move(t));
}

FormPoly recap(const FormPoly &f, int cap)
{
	if (f.max_degree() > cap)
		throw std::invalid_argument("recap: form exceeds new cap");
	std::vector<FormPoly::Term> t(f.terms().begin(), f.terms().end());
	return FormPoly::from_terms(f.spec().with_cap(cap), std::move(t));
}

FormPoly apply_univariate_series(std::span<const Rational> coeffs, const FormPoly &f)
{
	if (!f.constant_term().is_zero())
		throw std::domain_error("apply_univariate_series: argument has nonzero constant term");
	const RingSpec &s = f.spec();
	if (coeffs.empty())
		return FormPoly(s);
	if (f.is_zero())
		return FormPoly::constant(s, coeffs[0]);
	// f^k vanishes once 2k exceeds the cap (every term of f has degree >= 2).
	int top = std::min<int>(static_cast<int>(coeffs.size()) - 1, s.degree_cap / f.min_degree());
	FormPoly r = FormPoly::constant(s, coeffs[top]);
	for (int k = top - 1; k >= 0; --k) {
		r *= f;
		r += FormPoly::constant(s, coeffs[k]);
	}
	return r;
}

FormPoly poly_invert(const FormPoly &f)
{
	Rational c = f.constant_term();
	if (c.is_zero())
		throw std::domain_error("poly_invert: zero constant term");
	Rational ci = c.inverse();
	FormPoly g = f * ci - FormPoly::constant(f.spec(), 1);
	int n = f.spec().degree_cap / 2 + 1;
	std::vector<Rational> geo(n);
	for (int k = 0; k < n; ++k)
		geo[k] = (k % 2 == 0) ? ci : -ci;
	return apply_univariate_series(geo, g);
}

FormPoly divide_exact(const FormPoly &f, const FormPoly &g)
{
	require_same(f.spec(), g.spec(), "divide_exact");
	if (g.is_zero())
		throw std::domain_error("divide_exact: division by zero");
	Monomial content = g.terms().front().first;
	for (const auto &[m, c] : g.terms())
		for (int i = 0; i < kMaxVariables; ++i)
			content.exp[i] = std::min(content.exp[i], m.exp[i]);
	const int shift = content.degree();
	const RingSpec reduced = f.spec().with_cap(f.spec().degree_cap - shift);

	auto strip = [&](const FormPoly &p, const char *what) {
		std::vector<FormPoly::Term> out;
		for (const auto &[m, c] : p.terms()) {
			if (!content.divides(m))
				throw DivisibilityError(std::string("divide_exact: ") + what + " not divisible by the monomial part of the divisor (term " +
				                        FormPoly::monomial(p.spec(), m, c).str() + ")");
			Monomial q;
			for (int i = 0; i < kMaxVariables; ++i)
				q.exp[i] = static_cast<std::uint8_t>(m.exp[i] - content.exp[i]);
			out.emplace_back(q, c);
		}
		return FormPoly::from_terms(reduced, std::move(out));
	};
	FormPoly unit = strip(g, "divisor");
	if (unit.constant_term().is_zero())
		throw std::domain_error("divide_exact: divisor is not a monomial times a unit");
	return strip(f, "dividend") * poly_invert(unit);
}

FormPoly top_component(const FormPoly &f, int deg)
{
	if (deg > f.spec().degree_cap)
		throw std::invalid_argument("top_component: degree above cap");
	std::vector<FormPoly::Term> out;
	for (const auto &t : f.terms())
		if (t.first.degree() == deg)
			out.push_back(t);
	return FormPoly::from_terms(f.spec(), std::move(out));
}

FormPoly substitute_zero(const FormPoly &f, int var)
{
	std::vector<FormPoly::Term> out;
	for (const auto &t : f.terms())
		if (t.first.exp[var] == 0)
			out.push_back(t);
	return FormPoly::from_terms(f.spec(), std::move(out));
}

FormPoly swap_variables(const FormPoly &f, int a, int b)
{
	std::vector<FormPoly::Term> out(f.terms().begin(), f.terms().end());
	for (auto &t : out)
		std::swap(t.first.exp[a], t.first.exp[b]);
	return FormPoly::from_terms(f.spec(), std::move(out));
}

// --- Pontryagin basis -------------------------------------------------------

PontryaginForm::PontryaginForm(int num_p, bool has_e, std::vector<FormPoly::Term> terms)
    : num_p_(num_p), has_e_(has_e)
{
	auto weighted = [num_p](const Monomial &m) {
		int w = 0;
		for (int i = 0; i < num_p; ++i)
			w += 2 * (i + 1) * m.exp[i];
		return w + m.exp[num_p];
	};
	std::sort(terms.begin(), terms.end(), [&](const auto &a, const auto &b) {
		int wa = weighted(a.first), wb = weighted(b.first);
		if (wa != wb)
			return wa < wb;
		for (int i = 0; i < kMaxVariables; ++i)
			if (a.first.exp[i] != b.first.exp[i])
				return a.first.exp[i] > b.first.exp[i];
		return false;
	});
	for (auto &t : terms)
		if (!t.second.is_zero())
			terms_.push_back(std::move(t));
}

std::string PontryaginForm::str() const
{
	const int np = num_p_;
	return render(terms_, [np](int v) { return v < np ? "p" + std::to_string(v + 1) : std::string("e"); });
}

FormPoly pontryagin_class(const RingSpec &spec, int i)
{
	// e_i of the squares via the generating product prod_j (1 + x_j^2 t).
	const int d = spec.num_roots;
	if (i < 0 || i > d)
		return FormPoly(spec);
	std::vector<std::vector<Monomial>> level(d + 1);
	level[0].push_back(Monomial{});
	for (int j = 0; j < d; ++j)
		for (int k = std::min(j + 1, i); k >= 1; --k)
			for (Monomial m : level[k - 1]) {
				m.exp[j] += 2;
				level[k].push_back(m);
			}
	std::vector<FormPoly::Term> terms;
	for (const auto &m : level[i])
		terms.emplace_back(m, Rational(1));
	return FormPoly::from_terms(spec, std::move(terms));
}

namespace {

struct LexGreater {
	bool operator()(const Monomial &a, const Monomial &b) const
	{
		for (int i = 0; i < kMaxVariables; ++i)
			if (a.exp[i] != b.exp[i])
				return a.exp[i] > b.exp[i];
		return false;
	}
};

} // namespace

PontryaginForm to_pontryagin(const FormPoly &f)
{
	const RingSpec &s = f.spec();
	const int d = s.num_roots;
	for (const auto &[m, c] : f.terms()) {
		for (int a = 0; a < s.extra_roots; ++a)
			if (m.exp[s.aux(a)] != 0)
				throw NotSymmetricError("to_pontryagin: auxiliary roots present", FormPoly::monomial(s, m, c).str(), "");
		for (int j = 0; j < d; ++j)
			if (m.exp[j] % 2 != 0)
				throw NotSymmetricError("to_pontryagin: odd in " + s.variable_name(j), FormPoly::monomial(s, m, c).str(),
				                        FormPoly::monomial(s, m, -c).str());
	}

	std::map<Monomial, Rational, LexGreater> rest;
	for (const auto &[m, c] : f.terms())
		rest.emplace(m, c);

	std::map<std::vector<int>, FormPoly> expansions;
	std::vector<FormPoly> pclass;
	for (int i = 0; i <= d; ++i)
		pclass.push_back(pontryagin_class(s, i));

	std::vector<FormPoly::Term> out;
	while (!rest.empty()) {
		auto [lead, c] = *rest.begin();
		std::vector<int> alpha(d + 1, 0);
		for (int j = 0; j < d; ++j)
			alpha[j] = lead.exp[j] / 2;
		if (!std::is_sorted(alpha.begin(), alpha.begin() + d, std::greater<int>())) {
			Monomial sorted = lead;
			std::sort(sorted.exp.begin(), sorted.exp.begin() + d, std::greater<int>());
			throw NotSymmetricError("to_pontryagin: not symmetric in the roots", FormPoly::monomial(s, lead, c).str(),
			                        FormPoly::monomial(s, sorted, rest.count(sorted) ? rest[sorted] : Rational(0)).str());
		}
		std::vector<int> beta(d, 0);
		for (int i = 0; i < d; ++i)
			beta[i] = alpha[i] - alpha[i + 1];

		auto it = expansions.find(beta);
		if (it == expansions.end()) {
			FormPoly e = FormPoly::constant(s, 1);
			for (int i = 0; i < d; ++i)
				for (int k = 0; k < beta[i]; ++k)
					e *= pclass[i + 1];
			it = expansions.emplace(beta, std::move(e)).first;
		}

		Monomial pm;
		for (int i = 0; i < d; ++i)
			pm.exp[i] = static_cast<std::uint8_t>(beta[i]);
		int ue = s.has_euler ? lead.exp[s.euler()] : 0;
		pm.exp[d] = static_cast<std::uint8_t>(ue);
		out.emplace_back(pm, c);

		for (const auto &[em, ec] : it->second.terms()) {
			Monomial m = em;
			if (s.has_euler)
				m.exp[s.euler()] = static_cast<std::uint8_t>(ue);
			auto [pos, inserted] = rest.try_emplace(m, Rational(0));
			pos->second -= c * ec;
			if (pos->second.is_zero())
				rest.erase(pos);
		}
	}
	return PontryaginForm(d, s.has_euler, std::move(out));
}

FormPoly from_pontryagin(const PontryaginForm &p, const RingSpec &spec)
{
	if (p.num_p() != spec.num_roots)
		throw SpecMismatch("from_pontryagin: root count mismatch");
	const int d = spec.num_roots;
	std::vector<FormPoly> pclass;
	for (int i = 0; i <= d; ++i)
		pclass.push_back(pontryagin_class(spec, i));
	FormPoly r(spec);
	for (const auto &[m, c] : p.terms()) {
		FormPoly t = FormPoly::constant(spec, c);
		for (int i = 0; i < d; ++i)
			for (int k = 0; k < m.exp[i]; ++k)
				t *= pclass[i + 1];
		if (m.exp[d] != 0) {
			if (!spec.has_euler)
				throw SpecMismatch("from_pontryagin: ring has no Euler variable");
			t *= poly_pow(FormPoly::variable(spec, spec.euler()), m.exp[d]);
		}
		r += t;
	}
	return r;
}

} // namespace anomaly
