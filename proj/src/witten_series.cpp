#include "anomaly/witten_series.hpp"

#include "anomaly/theta.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace anomaly {

namespace {

RingSpec one_variable(const RingSpec &spec) { return RingSpec{1, false, 0, spec.degree_cap}; }

QSeries embed_series(const QSeries &s, const RingSpec &target, int var)
{
	return qs_map(s, target, [&](const FormPoly &f) { return embed_variable(f, target, var); });
}

// prod_n of the normalized pair factor of one slot, in the one-variable ring.
QSeries slot_prototype(const ThetaSlot &slot, const RingSpec &r1, int q_cap)
{
	BundleExpr pair = BundleExpr::root_pair(0).tilde();
	int sign = slot.symmetric ? -1 : slot.sign;
	QSeries p = qs_product(r1, q_cap, [&](int n) {
		int e = slot.start + (n - 1) * kLatticePerUnit;
		return ProductFactor{ch_lambda(pair, r1, sign, e, q_cap), e};
	});
	return slot.symmetric ? qs_invert(p) : p;
}

} // namespace

void validate(const ThetaConfig &cfg)
{
	if (cfg.q_cap < 0)
		throw std::invalid_argument("theta config: negative q cap");
	switch (cfg.variant) {
	case ThetaVariant::HZ1:
	case ThetaVariant::HZ2:
		if (cfg.aux.rank() % 2 != 0)
			throw std::invalid_argument("theta config: auxiliary bundle must have even rank");
		break;
	case ThetaVariant::TB1:
	case ThetaVariant::TB2:
		break;
	case ThetaVariant::Prime1:
	case ThetaVariant::Prime2:
		if (cfg.multiplicity < 0)
			throw std::invalid_argument("theta config: multiplicity must be nonnegative");
		break;
	}
}

std::vector<ThetaSlot> theta_slots(const ThetaConfig &cfg)
{
	validate(cfg);
	const BundleExpr t = cfg.tangent.tilde();
	const BundleExpr xi = cfg.xi.tilde();
	const BundleExpr v = (cfg.variant == ThetaVariant::TB1 || cfg.variant == ThetaVariant::TB2) ? t : cfg.aux.tilde();
	const int one = kLatticePerUnit, half = kHalf;
	switch (cfg.variant) {
	case ThetaVariant::HZ1:
	case ThetaVariant::TB1:
		return {{true, 1, one, t}, {false, 1, one, v - 2 * xi}, {false, 1, half, xi}, {false, -1, half, xi}};
	case ThetaVariant::HZ2:
	case ThetaVariant::TB2:
		return {{true, 1, one, t}, {false, -1, half, v - 2 * xi}, {false, 1, half, xi}, {false, 1, one, xi}};
	case ThetaVariant::Prime1: {
		BundleExpr w = t - cfg.multiplicity * xi;
		return {{true, 1, one, w}, {false, 1, one, w}};
	}
	case ThetaVariant::Prime2: {
		BundleExpr w = t - cfg.multiplicity * xi;
		return {{true, 1, one, w}, {false, -1, half, w}};
	}
	}
	throw std::logic_error("theta_slots: bad variant");
}

FormPoly embed_variable(const FormPoly &f, const RingSpec &target, int var)
{
	std::vector<FormPoly::Term> out;
	out.reserve(f.size());
	for (const auto &[m, c] : f.terms()) {
		Monomial n;
		n.exp[var] = m.exp[0];
		out.emplace_back(n, c);
	}
	return FormPoly::from_terms(target, std::move(out));
}

QSeries build_theta(const ThetaConfig &cfg, const RingSpec &spec)
{
	auto slots = theta_slots(cfg);
	const RingSpec r1 = one_variable(spec);

	// Power of each slot's prototype in the factor of every variable.
	std::map<int, std::vector<int>> signature;
	for (std::size_t i = 0; i < slots.size(); ++i)
		for (auto [var, mult] : slots[i].bundle.pairs()) {
			auto &sig = signature[var];
			sig.resize(slots.size());
			sig[i] = mult;
		}

	std::vector<std::optional<QSeries>> prototypes(slots.size());
	std::map<std::vector<int>, QSeries> per_variable;
	QSeries r = QSeries::one(spec, cfg.q_cap);
	for (const auto &[var, sig] : signature) {
		auto it = per_variable.find(sig);
		if (it == per_variable.end()) {
			QSeries f = QSeries::one(r1, cfg.q_cap);
			for (std::size_t i = 0; i < slots.size(); ++i) {
				if (sig[i] == 0)
					continue;
				if (!prototypes[i])
					prototypes[i] = slot_prototype(slots[i], r1, cfg.q_cap);
				f = f * qs_pow(*prototypes[i], sig[i]);
			}
			it = per_variable.emplace(sig, f).first;
		}
		r = r * embed_series(it->second, spec, var);
	}
	return r;
}

QSeries build_theta_direct(const ThetaConfig &cfg, const RingSpec &spec)
{
	QSeries r = QSeries::one(spec, cfg.q_cap);
	for (const auto &slot : theta_slots(cfg)) {
		r = r * qs_product(spec, cfg.q_cap, [&](int n) {
			int e = slot.start + (n - 1) * kLatticePerUnit;
			QSeries f = slot.symmetric ? ch_symmetric(slot.bundle, spec, e, cfg.q_cap)
			                           : ch_lambda(slot.bundle, spec, slot.sign, e, cfg.q_cap);
			return ProductFactor{f, e};
		});
	}
	return r;
}

std::vector<FormPoly> fourier_coefficients(const QSeries &series, int j_max)
{
	if (j_max * kHalf > series.q_cap())
		throw std::out_of_range("fourier_coefficients: requested order above the q cap");
	std::vector<FormPoly> out;
	for (int j = 0; j <= j_max; ++j)
		out.push_back(series.coeff(j * kHalf));
	return out;
}

bool on_half_lattice(const QSeries &series)
{
	for (int e : series.support())
		if (e % kHalf != 0)
			return false;
	return true;
}

QSeries top_components(const QSeries &series, int deg)
{
	return qs_map(series, series.spec(), [deg](const FormPoly &f) { return top_component(f, deg); });
}

namespace {

ThetaConfig tb_config(ThetaVariant variant, const RingSpec &spec, bool xi_is_n, int q_cap)
{
	ThetaConfig cfg;
	cfg.variant = variant;
	cfg.tangent = BundleExpr::tangent(spec) + BundleExpr::euler(spec);
	cfg.xi = xi_is_n ? BundleExpr::euler(spec) : BundleExpr::trivial(2);
	cfg.q_cap = q_cap;
	return cfg;
}

ThetaConfig prime_config(ThetaVariant variant, const RingSpec &spec, int m, int q_cap)
{
	ThetaConfig cfg;
	cfg.variant = variant;
	cfg.tangent = BundleExpr::tangent(spec);
	cfg.xi = BundleExpr::euler(spec);
	cfg.multiplicity = m;
	cfg.q_cap = q_cap;
	return cfg;
}

FormPoly euler_variable(const RingSpec &spec) { return FormPoly::variable(spec, spec.euler()); }

// prod_j ratio_a(x_j) ratio_b(x_j) over the roots of spec.
QSeries root_ratios(ThetaKind a, ThetaKind b, const RingSpec &spec, int q_cap)
{
	const RingSpec r1 = one_variable(spec);
	QSeries proto = theta_ratio(a, r1, 0, q_cap) * theta_ratio(b, r1, 0, q_cap);
	QSeries r = QSeries::one(spec, q_cap);
	for (int j = 0; j < spec.num_roots; ++j)
		r = r * embed_series(proto, spec, spec.root(j));
	return r;
}

QSeries divide_each(const QSeries &s, const FormPoly &g)
{
	RingSpec reduced = s.spec().with_cap(s.spec().degree_cap - g.min_degree());
	return qs_map(s, reduced, [&](const FormPoly &f) { return divide_exact(f, g); });
}

} // namespace

QSeries q2_bundle(const RingSpec &spec, int q_cap)
{
	QSeries c2 = build_theta(tb_config(ThetaVariant::TB2, spec, false, q_cap), spec);
	QSeries n = build_theta(tb_config(ThetaVariant::TB2, spec, true, q_cap), spec);
	QSeries num = c2 - n * euler_hyperbolic(Hyperbolic::Cosh, 1, spec);
	QSeries q = divide_each(num, euler_hyperbolic(Hyperbolic::Sinh, 1, spec) * Rational(2));
	return q * genus_form(GenusKind::AHat, q.spec());
}

QSeries q1_bundle(const RingSpec &spec, int q_cap)
{
	QSeries c2 = build_theta(tb_config(ThetaVariant::TB1, spec, false, q_cap), spec);
	QSeries n = build_theta(tb_config(ThetaVariant::TB1, spec, true, q_cap), spec);
	QSeries num = c2 - n * euler_hyperbolic(Hyperbolic::Cosh, -2, spec);
	QSeries q = divide_each(num, euler_hyperbolic(Hyperbolic::Sinh, 1, spec));
	return q * (genus_form(GenusKind::LHat, q.spec()) * euler_hyperbolic(Hyperbolic::Cosh, 1, q.spec()));
}

QSeries q2_prime_bundle(const RingSpec &spec, int m, int q_cap)
{
	QSeries th = build_theta(prime_config(ThetaVariant::Prime2, spec, m, q_cap), spec);
	return th * (genus_form(GenusKind::AHat, spec) * euler_hyperbolic(Hyperbolic::Sinh, m, spec));
}

QSeries q1_prime_bundle(const RingSpec &spec, int m, int q_cap)
{
	QSeries th = build_theta(prime_config(ThetaVariant::Prime1, spec, m, q_cap), spec);
	return th * (genus_form(GenusKind::LHat, spec) * euler_hyperbolic(Hyperbolic::Tanh, m, spec));
}

QSeries q2_theta(const RingSpec &spec, int q_cap)
{
	const int u = spec.euler();
	QSeries t = theta_ratio(ThetaKind::Theta, spec, u, q_cap);
	QSeries r1 = theta_ratio(ThetaKind::Theta1, spec, u, q_cap);
	QSeries r2 = theta_ratio(ThetaKind::Theta2, spec, u, q_cap);
	QSeries r3 = theta_ratio(ThetaKind::Theta3, spec, u, q_cap);
	QSeries diff = r2 - qs_invert(r2) * r3 * r1;
	QSeries q = root_ratios(ThetaKind::Theta, ThetaKind::Theta2, spec, q_cap) * t * diff;
	return divide_each(q, euler_variable(spec));
}

QSeries q1_theta(const RingSpec &spec, int q_cap)
{
	const int u = spec.euler();
	QSeries t = theta_ratio(ThetaKind::Theta, spec, u, q_cap);
	QSeries r1 = theta_ratio(ThetaKind::Theta1, spec, u, q_cap);
	QSeries r2 = theta_ratio(ThetaKind::Theta2, spec, u, q_cap);
	QSeries r3 = theta_ratio(ThetaKind::Theta3, spec, u, q_cap);
	QSeries diff = r1 - qs_invert(r1) * r3 * r2;
	QSeries q = root_ratios(ThetaKind::Theta, ThetaKind::Theta1, spec, q_cap) * t * diff;
	return divide_each(q, euler_variable(spec)) * Rational::pow2(spec.num_roots + 1);
}

QSeries q2_prime_theta(const RingSpec &spec, int m, int q_cap)
{
	const int u = spec.euler();
	QSeries t = theta_ratio(ThetaKind::Theta, spec, u, q_cap);
	QSeries r2 = theta_ratio(ThetaKind::Theta2, spec, u, q_cap);
	QSeries q = root_ratios(ThetaKind::Theta, ThetaKind::Theta2, spec, q_cap) * qs_pow(t * r2, -m);
	return q * (poly_pow(euler_variable(spec), m) * Rational::pow2(-m));
}

QSeries q1_prime_theta(const RingSpec &spec, int m, int q_cap)
{
	const int u = spec.euler();
	QSeries t = theta_ratio(ThetaKind::Theta, spec, u, q_cap);
	QSeries r1 = theta_ratio(ThetaKind::Theta1, spec, u, q_cap);
	QSeries q = root_ratios(ThetaKind::Theta, ThetaKind::Theta1, spec, q_cap) * qs_pow(t * r1, -m);
	return q * (poly_pow(euler_variable(spec), m) * Rational::pow2(spec.num_roots - m));
}

} // namespace anomaly
