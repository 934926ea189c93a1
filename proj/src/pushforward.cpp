#include "anomaly/pushforward.hpp"

#include "anomaly/witten_series.hpp"

#include <stdexcept>

namespace anomaly {

namespace {

FormPoly top_in(const FormPoly &f, int deg) { return truncate(top_component(f, deg), deg); }

Rational power(int base, int e)
{
	Rational b(base);
	return e >= 0 ? b.pow(e) : b.pow(-e).inverse();
}

/// Moves a form with no Euler terms into the same ring without the Euler slot.
FormPoly drop_euler(const FormPoly &f)
{
	const RingSpec &s = f.spec();
	if (!s.has_euler || s.extra_roots != 0)
		return f;
	for (const auto &[m, c] : f.terms())
		if (m.exp[s.euler()] != 0)
			throw SpecMismatch("drop_euler: form depends on the Euler variable");
	RingSpec target{s.num_roots, false, 0, s.degree_cap};
	return FormPoly::from_terms(target, std::vector<FormPoly::Term>(f.terms().begin(), f.terms().end()));
}

/// Matches the ring of `like` when the image carries no e.
FormPoly align(const FormPoly &f, const FormPoly &like)
{
	return like.spec().has_euler ? f : drop_euler(f);
}

std::string eq_detail(const FormPoly &a, const FormPoly &b)
{
	return a == b ? std::string() : render_form(a) + " vs " + render_form(b);
}

void set_sides(VerificationReport &r, FormPoly lhs, FormPoly rhs)
{
	r.difference = lhs - rhs;
	r.lhs = std::move(lhs);
	r.rhs = std::move(rhs);
	r.check("difference is zero", r.difference.is_zero());
}

} // namespace

FormPoly pi_star(const FormPoly &f)
{
	const RingSpec &s = f.spec();
	const int u = s.euler();
	if (s.degree_cap < 2)
		throw std::invalid_argument("pi_star: cap below the fibre degree");
	std::vector<FormPoly::Term> out;
	for (const auto &[m, c] : f.terms()) {
		if (m.exp[u] == 0)
			continue;
		Monomial lowered = m;
		--lowered.exp[u];
		out.emplace_back(lowered, c);
	}
	return FormPoly::from_terms(s.with_cap(s.degree_cap - 2), std::move(out));
}

VerificationReport verify_fiber_to_31(int k, int q_cap, const Constants &c)
{
	if (k < 0)
		throw std::invalid_argument("fiber-31: k must be nonnegative");
	VerificationReport base = verify_thm31(k, q_cap, c);
	const int d_b = 4 * k + 1, w = 4 * k + 2, deg = 2 * d_b + 2;
	VerificationReport r;
	r.theorem = "fiber-31";
	r.q_cap = base.q_cap;
	r.params = {{"k", long(k)}, {"dim", long(2 * d_b)}, {"total_dim", long(deg)}, {"q_cap", lattice_str(r.q_cap)}};

	// Total space of N: tangent roots x and u, xi = N pulled back (Euler class u).
	const RingSpec spec = RingSpec::manifold(d_b, true, 2);
	const BundleExpr tangent = BundleExpr::tangent(spec) + BundleExpr::euler(spec);
	const FormPoly ahat = genus_form(GenusKind::AHat, spec) * genus_form(GenusKind::AHat, spec, std::vector<int>{spec.euler()});
	const FormPoly cosh = euler_hyperbolic(Hyperbolic::Cosh, 1, spec);

	ThetaConfig cfg;
	cfg.variant = ThetaVariant::HZ2;
	cfg.tangent = tangent;
	cfg.aux = tangent;
	cfg.q_cap = r.q_cap;
	cfg.xi = BundleExpr::trivial(2);
	HSolution trivial = solve_in_basis(top_components(build_theta(cfg, spec) * ahat, deg), build_basis(w, BasisSide::Upper, r.q_cap));
	cfg.xi = BundleExpr::euler(spec);
	HSolution twisted =
	    solve_in_basis(top_components(build_theta(cfg, spec) * (ahat * cosh), deg), build_basis(w, BasisSide::Upper, r.q_cap));
	r.check("total-space residuals are zero", trivial.residual_zero() && twisted.residual_zero(),
	        "through q^" + lattice_str(r.q_cap));

	// L(TN) (1 - 1/cosh^2(u/2)) = 8 sum 2^{6k-6r} A(TN) (ch b_r(C^2) - cosh(u/2) ch b_r(N)).
	const FormPoly lhat = genus_form(GenusKind::LHat, spec) * genus_form(GenusKind::LHat, spec, std::vector<int>{spec.euler()});
	FormPoly one = FormPoly::constant(spec, 1);
	FormPoly lhs_total = top_in(lhat * (one - euler_hyperbolic(Hyperbolic::Cosh, -2, spec)), deg);
	FormPoly rhs_total(lhs_total.spec());
	std::vector<FormPoly> pushed;
	for (int i = 0; i < int(trivial.h.size()); ++i) {
		FormPoly h = truncate(trivial.h[i] - twisted.h[i], deg);
		rhs_total += h * (power(c.weight_base, 6 * k - 6 * i) * c.thm31_factor);
		pushed.push_back(pi_star(h));
	}
	r.check("total-space identity", lhs_total == rhs_total, eq_detail(lhs_total, rhs_total));

	FormPoly lhs = pi_star(lhs_total), rhs = pi_star(rhs_total);
	r.check("pushforward of the L-hat side", lhs == base.lhs, eq_detail(lhs, base.lhs));
	bool same_h = base.h && base.h->h.size() == pushed.size();
	for (std::size_t i = 0; same_h && i < pushed.size(); ++i)
		same_h = pushed[i] == base.h->h[i];
	r.check("pushforward of each h_r", same_h);
	set_sides(r, lhs, rhs);
	r.check("base identity holds", base.passed());
	r.h = std::move(trivial);
	return r;
}

VerificationReport verify_fiber_reduction(int d, int n, int q_cap, const Constants &c)
{
	if (d < 1 || n < 0)
		throw std::invalid_argument("fiber-reduce: need d >= 1 and n >= 0");
	const int w = thm33_weight(d, n);
	if (w <= 0)
		throw std::invalid_argument("fiber-reduce: source (" + std::to_string(d + 1) + ", " + std::to_string(n + d % 2) +
		                            ") has nonpositive weight");
	VerificationReport base = verify_thm33(d, n, q_cap, c);
	const int n_src = n + d % 2, power_src = thm33_power(d + 1, n_src), deg = 2 * d + 2;
	VerificationReport r;
	r.theorem = "fiber-reduce";
	r.q_cap = base.q_cap;
	r.params = {{"d", long(d)},      {"n", long(n)},
	            {"source_d", long(d + 1)}, {"source_n", long(n_src)},
	            {"weight", long(w)}, {"q_cap", lattice_str(r.q_cap)}};

	// Total space of N over B: tangent roots x and u, the line bundle pulled back.
	const RingSpec spec = RingSpec::manifold(d, true, 2);
	const std::vector<int> fibre{spec.euler()};
	ThetaConfig cfg;
	cfg.variant = ThetaVariant::Prime2;
	cfg.tangent = BundleExpr::tangent(spec) + BundleExpr::euler(spec);
	cfg.xi = BundleExpr::euler(spec);
	cfg.multiplicity = power_src;
	cfg.q_cap = r.q_cap;
	const FormPoly ahat = genus_form(GenusKind::AHat, spec) * genus_form(GenusKind::AHat, spec, fibre);
	const FormPoly lhat = genus_form(GenusKind::LHat, spec) * genus_form(GenusKind::LHat, spec, fibre);
	QSeries p2 = top_components(build_theta(cfg, spec) * (ahat * euler_hyperbolic(Hyperbolic::Sinh, power_src, spec)), deg);
	HSolution sol = solve_in_basis(p2, build_basis(w, BasisSide::Upper, r.q_cap));
	r.check("total-space residual is zero", sol.residual_zero(), "through q^" + lattice_str(r.q_cap));

	FormPoly lhs_total = top_in(lhat * euler_hyperbolic(Hyperbolic::Tanh, power_src, spec), deg);
	FormPoly rhs_total(lhs_total.spec());
	const Rational scale = Rational::pow2(thm33_log_constant(d + 1, n_src));
	for (int i = 0; i < int(sol.h.size()); ++i)
		rhs_total += truncate(sol.h[i], deg) * (scale * power(c.weight_base, -6 * i));
	r.check("total-space identity", lhs_total == rhs_total, eq_detail(lhs_total, rhs_total));

	FormPoly lhs = align(pi_star(lhs_total), base.lhs), rhs = align(pi_star(rhs_total), base.rhs);
	r.check("matches the direct left side", lhs == base.lhs, eq_detail(lhs, base.lhs));
	r.check("matches the direct right side", rhs == base.rhs, eq_detail(rhs, base.rhs));
	bool halves = base.h && base.h->h.size() == sol.h.size();
	for (std::size_t i = 0; halves && i < sol.h.size(); ++i)
		halves = align(pi_star(truncate(sol.h[i], deg)), base.h->h[i]) * Rational(2) == base.h->h[i];
	r.check("each coefficient pushes to half its base value", halves);
	set_sides(r, lhs, rhs);
	r.check("base identity holds", base.passed());
	r.h = std::move(sol);
	return r;
}

} // namespace anomaly
