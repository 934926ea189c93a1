#pragma once

#include "anomaly/qseries.hpp"

// Jacobi theta functions as truncated q-products. The variable v of the
// classical functions enters through e^{2 pi i v} -> e^w for a ring variable w,
// and sin(pi v)/pi -> sinh(w/2), so every ratio below has rational
// coefficients.
namespace anomaly {

enum class ThetaKind { Theta, Theta1, Theta2, Theta3 };

/// theta_k(0, tau) on the 1/8 lattice; Theta1 carries its 2q^{1/8} prefactor.
/// Throws std::invalid_argument for Theta, which vanishes at 0.
QSeries theta_null(ThetaKind kind, int q_cap);

/// A scalar series times pi^{pi_power}.
struct PiTagged {
	int pi_power = 0;
	QSeries series;
	friend bool operator==(const PiTagged &, const PiTagged &) = default;
};

/// theta'(0, tau) = pi * 2q^{1/8} prod (1 - q^j)^3.
PiTagged theta_prime_null(int q_cap);
/// pi * theta1(0) theta2(0) theta3(0), the other side of the Jacobi identity.
PiTagged jacobi_triple_product(int q_cap);

struct ModularGenerators {
	QSeries delta1, eps1, delta2, eps2;
};

/// delta1 = (theta2^4 + theta3^4)/8, eps1 = theta2^4 theta3^4/16,
/// delta2 = -(theta1^4 + theta3^4)/8, eps2 = theta1^4 theta3^4/16.
/// Checks the known leading terms and the integrality of 4 delta1 and
/// 16 eps1, throwing std::logic_error if either fails.
ModularGenerators modular_generators(int q_cap);

/// Normalized ratio in the ring variable `var`:
///   Theta:  w theta'(0)/theta(w) = (w/2)/sinh(w/2) prod (1-q^j)^2 / ((1-q^j e^w)(1-q^j e^-w))
///   Theta1: theta1(w)/theta1(0) = cosh(w/2) prod (1+q^j e^w)(1+q^j e^-w) / (1+q^j)^2
///   Theta2: theta2(w)/theta2(0) = prod (1-q^{j-1/2} e^w)(1-q^{j-1/2} e^-w) / (1-q^{j-1/2})^2
///   Theta3: theta3(w)/theta3(0) = prod (1+q^{j-1/2} e^w)(1+q^{j-1/2} e^-w) / (1+q^{j-1/2})^2
QSeries theta_ratio(ThetaKind kind, const RingSpec &spec, int var, int q_cap);

} // namespace anomaly
