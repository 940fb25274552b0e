#pragma once

#include <string>
#include <vector>

namespace equichar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // expected-vs-got diff on failure, extra notes on pass
};

struct SuiteReport {
    std::string suite;
    std::string note;  // suite-level remarks (e.g. selected conventions)
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
};

/// Suites, with their default ranges:
///   appendix-a (n<=11), appendix-b (n<=11), table2-quotients (n<=11),
///   table3-cuspidal (n<=8), table1-corollary52 (n<=12), degreewise (n<=10),
///   localization (n<=9, m in {2,3,4}), identities (n<=10), duality (n<=11),
///   trees-count (n<=11).
const std::vector<std::string>& suite_names();

/// Runs one suite; max_n <= 0 selects the suite default. Throws
/// std::invalid_argument for unknown suite names.
SuiteReport run_suite(const std::string& suite, int max_n = 0);

}  // namespace equichar
