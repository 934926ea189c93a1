#pragma once

#include "anomaly/acceptance.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace anomaly::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, dispatches, writes the result to `out` (or --out) and
/// diagnostics to `err`. Returns 0 on pass, 1 on a failed verification and
/// 2 on a usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// {"envelope": {"wall_time_ms": ...}, "report": {...}}; the report body does
/// not depend on timing.
std::string report_json(const VerificationReport &r, double wall_ms);
/// The report body alone, pretty-printed.
std::string report_body_json(const VerificationReport &r);
std::string report_text(const VerificationReport &r);

/// "num/den" with an explicit denominator.
std::string fraction(const Rational &x);

} // namespace anomaly::cli
