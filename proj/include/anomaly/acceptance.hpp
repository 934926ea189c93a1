#pragma once

#include "anomaly/theorems.hpp"

#include <functional>
#include <string>
#include <vector>

namespace anomaly {

struct CriterionResult {
	int id = 0;
	std::string name;
	bool pass = false;
	double wall_ms = 0;
	/// Short description of what ran, e.g. "12 instances".
	std::string summary;
	/// One line per failing instance or check.
	std::vector<std::string> failures;
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion `id` (1..12). `full` adds the k = 2 instances. Constants are
/// passed to every theorem driver; criterion 12 always mutates its own copy.
CriterionResult run_criterion(int id, bool full, const Constants &c = {});
std::vector<CriterionResult> run_acceptance(bool full, const Constants &c = {},
                                            const std::function<void(const CriterionResult &)> &on_done = {});

struct MutationOutcome {
	int quoted = 0;
	std::string field;
	int mutated_to = 0;
	std::string verification;
	bool baseline_pass = false;
	bool mutated_pass = true;
};

/// Changes one quoted constant at a time and reruns the verification that uses it.
std::vector<MutationOutcome> mutation_harness();

struct PropertyOutcome {
	std::string name;
	int cases = 0;
	int failures = 0;
};

/// Randomized identity checks, `cases` each, seeded deterministically.
std::vector<PropertyOutcome> property_suites(int cases, unsigned seed = 20260101u);

} // namespace anomaly
