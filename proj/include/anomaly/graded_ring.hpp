#pragma once

#include "anomaly/rational.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Truncated graded polynomial ring in formal Chern roots x1..xd, the Euler
// variable u and optional auxiliary roots v1..vl. Every variable has
// cohomological degree 2.
//
// Roots are scaled so that every characteristic form has rational
// coefficients: A-hat = prod (x/2)/sinh(x/2), L-hat = prod x/tanh(x/2).
// Identities between top components are invariant under this rescaling.
namespace anomaly {

inline constexpr int kMaxVariables = 16;

struct RingSpec {
	int num_roots = 0;
	bool has_euler = false;
	int extra_roots = 0;
	int degree_cap = 0;

	/// d roots plus the Euler variable, capped at the top degree 2d.
	static RingSpec manifold(int d, bool euler = true, int extra_degree = 0);
	static RingSpec scalar() { return {}; }

	int variable_count() const { return num_roots + (has_euler ? 1 : 0) + extra_roots; }
	int root(int j) const;
	int euler() const;
	int aux(int i) const;
	bool is_root(int var) const { return var >= 0 && var < num_roots; }
	std::string variable_name(int var) const;
	RingSpec with_cap(int cap) const;
	void validate() const;

	friend bool operator==(const RingSpec &, const RingSpec &) = default;
};

struct SpecMismatch : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/// Raised when a quotient that should exist does not; a verification failure.
struct DivisibilityError : std::domain_error {
	using std::domain_error::domain_error;
};

struct NotSymmetricError : std::domain_error {
	NotSymmetricError(const std::string &what, std::string first, std::string second)
	    : std::domain_error(what), witness{std::move(first), std::move(second)}
	{
	}
	std::pair<std::string, std::string> witness;
};

struct Monomial {
	std::array<std::uint8_t, kMaxVariables> exp{};

	int weight() const
	{
		int w = 0;
		for (auto e : exp)
			w += e;
		return w;
	}
	int degree() const { return 2 * weight(); }
	bool divides(const Monomial &o) const;

	friend Monomial operator*(const Monomial &a, const Monomial &b);
	friend bool operator==(const Monomial &, const Monomial &) = default;
};

struct MonomialHash {
	std::size_t operator()(const Monomial &m) const noexcept;
};

/// Canonical order: ascending degree, then lexicographically descending exponents.
bool graded_lex_less(const Monomial &a, const Monomial &b);

class FormPoly {
public:
	using Term = std::pair<Monomial, Rational>;

	FormPoly() = default;
	explicit FormPoly(const RingSpec &spec) : spec_(spec) {}

	static FormPoly constant(const RingSpec &spec, const Rational &c);
	static FormPoly variable(const RingSpec &spec, int var, const Rational &coeff = 1);
	static FormPoly monomial(const RingSpec &spec, const Monomial &m, const Rational &coeff);
	/// Merges duplicates, drops zeros and anything above the cap.
	static FormPoly from_terms(const RingSpec &spec, std::vector<Term> terms);

	const RingSpec &spec() const { return spec_; }
	std::span<const Term> terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	Rational constant_term() const;
	Rational coefficient(const Monomial &m) const;
	/// Lowest degree of a stored term; -1 for zero.
	int min_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
	int max_degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }

	/// Root-basis rendering, e.g. "1 + x1^2*u - 1/2*u^2".
	std::string str() const;

	FormPoly &operator+=(const FormPoly &o);
	FormPoly &operator-=(const FormPoly &o);
	FormPoly &operator*=(const FormPoly &o);
	FormPoly &operator*=(const Rational &c);

	friend FormPoly operator+(FormPoly a, const FormPoly &b) { return a += b; }
	friend FormPoly operator-(FormPoly a, const FormPoly &b) { return a -= b; }
	friend FormPoly operator*(const FormPoly &a, const FormPoly &b);
	friend FormPoly operator*(FormPoly a, const Rational &c) { return a *= c; }
	friend FormPoly operator*(const Rational &c, FormPoly a) { return a *= c; }
	friend FormPoly operator-(FormPoly a) { return a *= Rational(-1); }
	friend bool operator==(const FormPoly &, const FormPoly &) = default;

private:
	RingSpec spec_;
	std::vector<Term> terms_;
};

FormPoly poly_add(const FormPoly &a, const FormPoly &b);
FormPoly poly_mul(const FormPoly &a, const FormPoly &b);
FormPoly poly_pow(const FormPoly &f, int e);

/// Drops every term above `cap`; the result carries the smaller cap.
FormPoly truncate(const FormPoly &f, int cap);
/// Re-homes f in a spec with the same variables and a cap >= its max degree.
FormPoly recap(const FormPoly &f, int cap);

/// sum_k coeffs[k] * f^k, truncated; f must have zero constant term.
FormPoly apply_univariate_series(std::span<const Rational> coeffs, const FormPoly &f);
FormPoly poly_invert(const FormPoly &f);
/// Unique q with f = g*q where g = (monomial) * (unit). The quotient is valid to
/// cap - deg(monomial) and carries that reduced cap.
FormPoly divide_exact(const FormPoly &f, const FormPoly &g);
FormPoly top_component(const FormPoly &f, int deg);
FormPoly substitute_zero(const FormPoly &f, int var);
/// Exchanges variables a and b.
FormPoly swap_variables(const FormPoly &f, int a, int b);

/// Polynomial in p1..pd (p_i of degree 4i) and e (degree 2).
class PontryaginForm {
public:
	PontryaginForm() = default;
	PontryaginForm(int num_p, bool has_e, std::vector<FormPoly::Term> terms);

	int num_p() const { return num_p_; }
	bool has_e() const { return has_e_; }
	std::span<const FormPoly::Term> terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// e.g. "1 - 1/24*p1 + 7/5760*p1^2 - 1/1440*p2".
	std::string str() const;

	friend bool operator==(const PontryaginForm &, const PontryaginForm &) = default;

private:
	int num_p_ = 0;
	bool has_e_ = false;
	std::vector<FormPoly::Term> terms_;
};

/// Rewrites a form symmetric and even in the roots in terms of p_i = e_i(x^2) and e = u.
PontryaginForm to_pontryagin(const FormPoly &f);
FormPoly from_pontryagin(const PontryaginForm &p, const RingSpec &spec);
/// e_i(x1^2, ..., xd^2) as a form.
FormPoly pontryagin_class(const RingSpec &spec, int i);

} // namespace anomaly
