#pragma once

// Invariant suites run by `pod2 checks`: exact q-series identities,
// multiplier vs. Dedekind sums, Kloosterman cross-forms, and the
// transformation-law residuals.

#include <string>
#include <vector>

namespace pod2::checks {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double ms = 0;
};

enum class Suite { identities, multipliers, kloosterman, transforms, all };

/// "identities" | "multipliers" | "kloosterman" | "transforms" | "all".
Suite parse_suite(const std::string& text);

std::vector<CheckResult> run_identities(std::size_t order = 200);
std::vector<CheckResult> run_multipliers(std::int64_t k_max = 60);
std::vector<CheckResult> run_kloosterman(std::int64_t k_max = 36);
std::vector<CheckResult> run_transforms();

std::vector<CheckResult> run_suite(Suite s);

}  // namespace pod2::checks
