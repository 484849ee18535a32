#pragma once

// Verification sweeps behind `spf oracle-check`: each suite compares an
// engine against the character oracle (or an algebraic identity) over every
// partition up to a maximum degree.

#include <string>
#include <string_view>
#include <vector>

namespace spf {

struct SuiteResult {
    std::string suite;
    bool passed = true;
    /// (degree, number of cases checked at that degree)
    std::vector<std::pair<int, long>> checked;
    /// First failing case, empty when the suite passed.
    std::string counterexample;

    long total_checked() const;
};

inline constexpr int kDefaultOracleMaxDegree = 8;

/// kron, fast, lr, dims, weyl, contingency, jt, ortho; "all" runs each.
std::vector<std::string> suite_names();

/// Runs one named suite over degrees 0..max_d. Throws InputError for unknown
/// suite names.
SuiteResult run_suite(std::string_view suite, int max_d);

std::string format_result(const SuiteResult& r);

}  // namespace spf
