#pragma once

#include "anomaly/modular_solve.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace anomaly {

/// Every numeric constant the identities quote. Verifiers read them from here so
/// a single mutated value can be shown to break the matching check.
struct Constants {
	// {L} = {agw_ch A ch(T) - agw_a A} in dimension 12.
	int agw_ch = 8;
	int agw_a = 32;
	// Twisted dimension-12 formula: agw terms plus -eq14_n A (ch(N) - 2), times cosh(e/2).
	int eq14_ch = 8;
	int eq14_a = 32;
	int eq14_n = 24;
	// Overall factors of the (8k+2)- and (8k+6)-dimensional formulas.
	int thm31_factor = 8;
	int thm32_factor = 64;
	// Shift in the closed form of h_1: shift * (2k+1) * (1 - cosh(e/2)).
	int h1_shift = 24;
	// Base of the 2^{6k-6r} weights.
	int weight_base = 2;
	// Dimension-12 formulas with sinh^2 and sinh^4.
	int cor_d6n1_ch = -4;
	int cor_d6n1_a = 112;
	int cor_d6n1_n = 8;
	int cor_d6n2 = -128;
	// Dimension-10 formulas with sinh and sinh^3.
	int cor_d5n0_ch = -2;
	int cor_d5n0_a = 52;
	int cor_d5n0_n = 2;
	int cor_d5n1 = -64;
};

/// Names accepted by set_constant, in declaration order.
std::vector<std::string> constant_names();
/// Overrides one field by name; false for an unknown name.
bool set_constant(Constants &c, const std::string &name, int value);
int get_constant(const Constants &c, const std::string &name);

struct SubCheck {
	std::string name;
	bool pass = false;
	std::string detail;
};

using ParamValue = std::variant<long, bool, std::string>;

struct VerificationReport {
	std::string theorem;
	std::vector<std::pair<std::string, ParamValue>> params;
	/// Top components of both sides and their difference.
	FormPoly lhs;
	FormPoly rhs;
	FormPoly difference;
	std::optional<HSolution> h;
	/// Highest q exponent (lattice units) at which the residual was checked.
	int q_cap = 0;
	std::vector<SubCheck> checks;
	std::vector<std::string> notes;

	bool passed() const;
	void check(std::string name, bool pass, std::string detail = {});
	const SubCheck *find(const std::string &name) const;
};

/// Pontryagin-basis rendering when f is symmetric and even in the roots,
/// the root-basis rendering otherwise.
std::string render_form(const FormPoly &f);

/// Smallest q cap accepted for a solve at this weight: every pivot of both
/// bases plus two extra half-integer orders.
int required_q_cap(int weight);
/// Default q cap: every pivot plus four extra half-integer orders.
int default_q_cap(int weight);

// q_cap <= 0 selects default_q_cap; a positive cap below required_q_cap
// throws std::invalid_argument.

VerificationReport verify_agw(const Constants &c = {});
/// 8k+4 dimensions, V = TM + C^{2s}, xi trivial or the Euler bundle.
VerificationReport verify_han_zhang(int k, int s, bool xi_trivial, int q_cap = 0, const Constants &c = {});
/// The untwisted instance V = TM, xi trivial.
VerificationReport verify_liu(int k, int q_cap = 0, const Constants &c = {});
/// (8k+2)-dimensional base with a rank-2 bundle N.
VerificationReport verify_thm31(int k, int q_cap = 0, const Constants &c = {});
/// (8k+6)-dimensional base with a rank-2 bundle N.
VerificationReport verify_thm32(int k, int q_cap = 0, const Constants &c = {});
/// 2d-dimensional base, power 2n + (d mod 2) of tanh(e/2). Routes to
/// verify_degenerate when the weight is not positive.
VerificationReport verify_thm33(int d, int n, int q_cap = 0, const Constants &c = {});
VerificationReport verify_degenerate(int d, int n);

/// Power of tanh(e/2) and modular weight of the (d, n) identity.
int thm33_power(int d, int n);
int thm33_weight(int d, int n);
/// log2 of the constant dividing the L-hat side.
int thm33_log_constant(int d, int n);

} // namespace anomaly
