// Acceptance gate: every criterion prints exactly one PASS/FAIL line and
// the binary exits nonzero if any fails. Expected wall time is a few
// seconds; nothing here is tunable, thresholds are exact equality.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "equichar/moduli.hpp"
#include "equichar/permrep.hpp"
#include "equichar/serialize.hpp"
#include "equichar/verify.hpp"

using namespace equichar;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& extra = "") {
    std::cout << "CRITERION " << criterion << " (" << label << "): " << (pass ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " -- " << extra;
    std::cout << "\n";
    std::cout.flush();
    if (!pass) ++g_failures;
}

std::string count_label(const SuiteReport& r) {
    return std::to_string(r.checks.size() - r.failures()) + "/" +
           std::to_string(r.checks.size()) + " checks";
}

void criterion_from_suite(int criterion, const std::string& label, const std::string& suite,
                          int max_n) {
    const SuiteReport r = run_suite(suite, max_n);
    std::string extra = count_label(r);
    if (!r.note.empty()) extra += "; " + r.note;
    for (const auto& check : r.checks)
        if (!check.pass) extra += "; FAILED " + check.name + ": " + check.detail;
    report(criterion, label, r.passed(), extra);
}

void criterion_closed_form() {
    std::size_t checks = 0, failed = 0;
    std::string detail;
    for (int n = 3; n <= 10; ++n)
        for (int k = 0; k <= n - 3; ++k) {
            ++checks;
            if (!(closed_form_P(n, k) == to_schur(P_poly(n).coeff(unsigned(k))))) {
                ++failed;
                detail += " n=" + std::to_string(n) + ",k=" + std::to_string(k);
            }
        }
    report(6, "closed-form equivalence, n <= 10", failed == 0,
           std::to_string(checks - failed) + "/" + std::to_string(checks) + " coefficients" +
               detail);
}

void criterion_identity_suite() {
    const SuiteReport identities = run_suite("identities", 10);
    const SuiteReport degreewise = run_suite("degreewise", 10);
    const SuiteReport duality = run_suite("duality", 11);
    const SuiteReport trees = run_suite("trees-count", 11);
    std::size_t total = 0, bad = 0;
    std::string detail;
    for (const auto* r : {&identities, &degreewise, &duality, &trees}) {
        total += r->checks.size();
        bad += r->failures();
        for (const auto& check : r->checks)
            if (!check.pass) detail += "; FAILED " + r->suite + "/" + check.name;
    }
    report(8, "identity suite", bad == 0,
           std::to_string(total - bad) + "/" + std::to_string(total) + " checks" + detail);
}

void criterion_necessity() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 11; ++n)
        for (int k = 0; k <= n - 3; ++k) {
            const auto r = perm_necessary_report(to_schur(P_poly(n).coeff(unsigned(k))));
            if (!r.passed()) {
                pass = false;
                detail += " n=" + std::to_string(n) + ",k=" + std::to_string(k);
            }
        }
    // the virtual difference of the degree-2 and degree-1 pieces at n = 7
    // is not a permutation representation; the audit must reject it, and it
    // does so on the square condition alone (trace 2 at class (5,2) against
    // trace 0 at its square class), so no decomposition search is needed
    // for this particular character. passing every necessary condition
    // still would not certify a permutation representation; the searches
    // in the decomposition module stay best-effort for that reason.
    SchurExpansion virtual_char = to_schur(P_poly(7).coeff(2) + P_poly(7).coeff(1).scaled(-1));
    const auto vr = perm_necessary_report(virtual_char);
    if (!(vr.integral && vr.nonneg && !vr.square_monotone)) {
        pass = false;
        detail += " n=7 virtual difference not rejected as expected";
    }
    report(9, "necessary-condition audit, n <= 11", pass,
           pass ? "all genuine coefficients pass; the n=7 virtual difference is rejected "
                  "by the square condition (necessity checks are not sufficiency checks)"
                : detail);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    try {
        criterion_from_suite(1, "appendix A reproduction, 4 <= n <= 11", "appendix-a", 11);
        criterion_from_suite(2, "appendix B reproduction, 3 <= n <= 11", "appendix-b", 11);
        criterion_from_suite(3, "quotient Poincare polynomials, 3 <= n <= 11",
                             "table2-quotients", 11);
        criterion_from_suite(4, "cuspidal blocks, 4 <= n <= 8", "table3-cuspidal", 8);
        criterion_from_suite(5, "degree 1..3 closed forms, 6 <= n <= 12",
                             "table1-corollary52", 12);
        criterion_closed_form();
        criterion_from_suite(7, "localization cross-check, n <= 9, m in {2,3,4}",
                             "localization", 9);
        criterion_identity_suite();
        criterion_necessity();
    } catch (const std::exception& e) {
        std::cout << "FATAL: " << e.what() << "\n";
        return 1;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " ("
              << elapsed.count() / 1000.0 << "s)\n";
    return g_failures == 0 ? 0 : 1;
}
