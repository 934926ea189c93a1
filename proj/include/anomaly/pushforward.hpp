#pragma once

#include "anomaly/theorems.hpp"

namespace anomaly {

/// Integration along the fibre of a rank-2 bundle. The source ring has the base
/// roots plus the fibre variable u (its Euler slot); in the target the same slot
/// holds the base Euler class e. u^k x^a maps to e^{k-1} x^a for k >= 1 and to 0
/// for k = 0; the degree cap drops by 2.
FormPoly pi_star(const FormPoly &f);

/// Pushes both sides of the 8k+4 twisted identity on the total space of N over an
/// (8k+2)-dimensional base down to the base and compares with verify_thm31.
VerificationReport verify_fiber_to_31(int k, int q_cap = 0, const Constants &c = {});

/// Runs the (d+1, n + d mod 2) identity on the total space of N over a
/// 2d-dimensional base, pushes it down and compares with verify_thm33(d, n).
VerificationReport verify_fiber_reduction(int d, int n, int q_cap = 0, const Constants &c = {});

} // namespace anomaly
