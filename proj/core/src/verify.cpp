#include "equichar/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "equichar/golden.hpp"
#include "equichar/moduli.hpp"
#include "equichar/permrep.hpp"
#include "equichar/serialize.hpp"
#include "equichar/trees.hpp"

namespace equichar {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

namespace {

void check_eq(SuiteReport& report, const std::string& name, const SchurExpansion& got,
              const SchurExpansion& expected) {
    CheckResult r{name, got == expected, ""};
    if (!r.pass) r.detail = "expected " + render_text(expected) + ", got " + render_text(got);
    report.checks.push_back(std::move(r));
}

void check_true(SuiteReport& report, const std::string& name, bool pass,
                const std::string& detail = "") {
    report.checks.push_back({name, pass, pass ? "" : detail});
}

// expected row of a reflective table: degree 0 is the trivial character,
// rows past the middle repeat by the stated duality
SchurExpansion golden_row(const std::vector<GoldenCharacterRow>& rows, int n, int k, int dim) {
    const int kk = std::min(k, dim - k);
    if (kk == 0) {
        SchurExpansion trivial;
        trivial.add_term(Partition({static_cast<unsigned>(n)}), 1);
        return trivial;
    }
    for (const auto& row : rows)
        if (row.n == n && row.k == kk) return row.terms;
    throw std::runtime_error("golden table misses row n=" + std::to_string(n) +
                             " k=" + std::to_string(kk));
}

SuiteReport suite_appendix_a(int max_n) {
    SuiteReport report;
    report.suite = "appendix-a";
    const auto rows = load_golden_characters("appendix_a");
    for (int n = 4; n <= max_n; ++n)
        for (int k = 0; k <= n - 3; ++k)
            check_eq(report, "m0n n=" + std::to_string(n) + " k=" + std::to_string(k),
                     to_schur(P_poly(n).coeff(static_cast<unsigned>(k))),
                     golden_row(rows, n, k, n - 3));
    return report;
}

SuiteReport suite_appendix_b(int max_n) {
    SuiteReport report;
    report.suite = "appendix-b";
    const auto rows = load_golden_characters("appendix_b");
    for (int n = 3; n <= max_n; ++n) {
        const CharPoly maps = stable_maps_poly(n, 2);
        for (int k = 0; k <= n; ++k)
            check_eq(report, "p1n n=" + std::to_string(n) + " k=" + std::to_string(k),
                     to_schur(maps.coeff(static_cast<unsigned>(k))), golden_row(rows, n, k, n));
    }
    return report;
}

SuiteReport suite_table2(int max_n) {
    SuiteReport report;
    report.suite = "table2-quotients";
    const auto rows = load_golden_quotients();
    for (int n = 3; n <= max_n; ++n) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [n](const auto& r) { return r.n == n; });
        if (it == rows.end()) {
            check_true(report, "quotient n=" + std::to_string(n), false, "no golden row");
            continue;
        }
        const TPoly got = quotient_poincare(n);  // both routes compared internally
        check_true(report, "quotient n=" + std::to_string(n), got == it->poly,
                   "expected " + tp_to_string(it->poly) + ", got " + tp_to_string(got));
    }
    return report;
}

SuiteReport suite_table3(int max_n) {
    SuiteReport report;
    report.suite = "table3-cuspidal";
    for (const auto& row : load_golden_cuspidal()) {
        if (row.n > max_n) continue;
        SymFunc expected;
        for (const auto& [spec, mult] : row.components)
            expected += char_of_spec(spec).scaled(mult);
        const SchurExpansion got = cuspidal_char(row.n);
        CheckResult r{"cuspidal n=" + std::to_string(row.n), got == to_schur(expected), ""};
        if (!r.pass)
            r.detail = "expected " + render_text(to_schur(expected)) + ", got " + render_text(got);
        else if (!row.note.empty())
            r.detail = row.note;
        report.checks.push_back(std::move(r));
        check_eq(report, "cuspidal closed form n=" + std::to_string(row.n),
                 cuspidal_closed(row.n), got);
    }
    return report;
}

SuiteReport suite_table1(int max_n) {
    SuiteReport report;
    report.suite = "table1-corollary52";
    for (int n = 6; n <= max_n; ++n) {
        check_eq(report, "A1 n=" + std::to_string(n), formula_A1(n),
                 to_schur(P_poly(n).coeff(1)));
        check_eq(report, "A2 n=" + std::to_string(n), formula_A2(n),
                 to_schur(P_poly(n).coeff(2)));
        check_eq(report, "A3 n=" + std::to_string(n), formula_A3(n),
                 to_schur(P_poly(n).coeff(3)));
    }
    return report;
}

SuiteReport suite_degreewise(int max_n) {
    SuiteReport report;
    report.suite = "degreewise";
    for (int n = 4; n <= max_n; ++n)
        for (int k = 0; k <= n - 2; ++k)
            check_true(report, "n=" + std::to_string(n) + " k=" + std::to_string(k),
                       degreewise_identity_check(n, k), "identity fails");
    return report;
}

SuiteReport suite_localization(int max_n) {
    SuiteReport report;
    report.suite = "localization";
    report.note = "selected fixed-locus factor: " + p_factor_rule_name(selected_p_factor_rule());
    for (int m = 2; m <= 4; ++m)
        for (int n = 3; n <= max_n; ++n)
            check_true(report, "n=" + std::to_string(n) + " m=" + std::to_string(m),
                       stable_maps_localization(n, m) == stable_maps_poly(n, m),
                       "localization differs from closed formula");
    return report;
}

SymFunc random_symfunc(std::mt19937& rng, unsigned max_deg, bool allow_rational) {
    std::uniform_int_distribution<unsigned> deg_dist(1, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    const unsigned d = deg_dist(rng);
    const auto& parts = partitions_of(d);
    std::uniform_int_distribution<std::size_t> part_dist(0, parts.size() - 1);
    SymFunc f;
    const unsigned terms = 1 + (rng() % 3);
    for (unsigned i = 0; i < terms; ++i) {
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        Rational coeff(c);
        if (allow_rational && rng() % 3 == 0) coeff /= 2;
        f.add_term(parts[part_dist(rng)], coeff);
    }
    return f;
}

SuiteReport suite_identities(int max_n) {
    SuiteReport report;
    report.suite = "identities";
    std::mt19937 rng(20240715);

    bool ax1 = true, ax2 = true, ax3 = true, ax4 = true, antisym = true, sqmul = true;
    for (int trial = 0; trial < 12; ++trial) {
        const SymFunc f = random_symfunc(rng, 6, true);
        const SymFunc g = random_symfunc(rng, 6, true);
        const SymFunc h = random_symfunc(rng, 6, true);
        ax1 = ax1 && (plethysm(f + g, h) == plethysm(f, h) + plethysm(g, h));
        ax2 = ax2 && (plethysm(f * g, h) == plethysm(f, h) * plethysm(g, h));
        for (unsigned n = 1; n <= 4; ++n)
            ax3 = ax3 && (plethysm(p_gen(n), f) == plethysm(f, p_gen(n)));
        antisym = antisym && (plethysm(e_gen(2), f + g) ==
                              f * g + plethysm(e_gen(2), f) + plethysm(e_gen(2), g));
        const SymFunc v = random_symfunc(rng, 5, false);
        sqmul = sqmul && (plethysm(h_gen(2), v * p_gen(1)) ==
                          plethysm(h_gen(2), v) * h_gen(2) + plethysm(e_gen(2), v) * e_gen(2));
    }
    for (int trial = 0; trial < 8; ++trial) {
        const SymFunc f = random_symfunc(rng, 4, false);
        const SymFunc g = random_symfunc(rng, 4, false);
        const SymFunc h = random_symfunc(rng, 4, false);
        ax4 = ax4 && (plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)));
    }
    check_true(report, "plethysm left linearity", ax1);
    check_true(report, "plethysm multiplicativity", ax2);
    check_true(report, "plethysm power-sum symmetry", ax3);
    check_true(report, "plethysm associativity", ax4);
    check_true(report, "antisymmetric square of a sum", antisym);
    check_true(report, "symmetric square of V.p1", sqmul);

    // the two tree-pair relations, as plethystic identities applied to the
    // characters of the component trees with at most 4 inputs
    {
        bool rel1 = true, rel2 = true;
        std::vector<SymFunc> samples;
        for (unsigned n = 3; n <= 4; ++n)
            for (unsigned k = 1; k + 2 <= n; ++k)
                for (const auto& t : enumerate_component_trees(n, k))
                    samples.push_back(char_U_T(t));
        for (const SymFunc& f : samples) {
            const SymFunc lhs1 =
                plethysm(plethysm(h_gen(2) + e_gen(2), h_gen(2)), f) + plethysm(h_gen(4), f);
            const SymFunc rhs1 =
                plethysm(h_gen(3) * p_gen(1), f) + plethysm(plethysm(h_gen(2), h_gen(2)), f);
            rel1 = rel1 && (lhs1 == rhs1);
            const SymFunc fp = f * p_gen(1);
            const SymFunc lhs2 = fp * fp + (plethysm(h_gen(2), f) * h_gen(2)).scaled(2);
            const SymFunc rhs2 = plethysm(h_gen(2), f) * p_gen(1) * p_gen(1) + f * f * h_gen(2) +
                                 plethysm(h_gen(2), fp);
            rel2 = rel2 && (lhs2 == rhs2);
        }
        check_true(report, "paired-tree relation (equal components)", rel1);
        check_true(report, "paired-tree relation (component and input)", rel2);
    }

    // even/odd two-block identity
    for (int n = 4; n <= 12; n += 2) {
        SymFunc lhs, rhs = plethysm(h_gen(2), h_gen(unsigned(n / 2)));
        for (int a = 0; a <= n / 2; a += 2) lhs += h_gen(unsigned(a)) * h_gen(unsigned(n - a));
        for (int a = n / 2 + 1; a <= n; ++a)
            if (a % 2 == 1) rhs += h_gen(unsigned(a)) * h_gen(unsigned(n - a));
        check_true(report, "two-block even/odd identity n=" + std::to_string(n), lhs == rhs);
    }

    // wall-crossing assembly of Q_n from the small-stability model
    for (int n = 3; n <= std::min(max_n, 10); ++n) {
        CharPoly rhs = delta0_poly(n, 1);
        CharPoly pairs;
        for (int h = 2; h <= (n - 1) / 2; ++h) pairs += Q_poly(h) * Q_poly(n - h);
        rhs += pairs.shifted(1);
        check_true(report, "Q assembly n=" + std::to_string(n), Q_poly(n) == rhs);
    }

    // blowup-tail composition for the stable-map spaces, cross-multiplied
    // so no geometric series is expanded on this side
    for (int n = 3; n <= std::min(max_n, 8); ++n)
        for (int m = 2; m <= 3; ++m) {
            const TPoly one_minus_t{{0, 1}, {1, -1}};
            const unsigned um = unsigned(m);
            const CharPoly diff = stable_maps_poly(n, m) + delta0_poly(n, m).scaled(-1);
            const CharPoly lhs = diff.times(tp_mul(one_minus_t, one_minus_t));
            CharPoly pairs;
            for (int h = 2; h <= (n - 1) / 2; ++h) pairs += Q_poly(h) * Q_poly(n - h);
            // t - t^{m-1} vanishes at m = 2; assemble by addition so the
            // exponent collision cancels instead of clobbering
            const TPoly t_to_m_minus_1 = tp_add(TPoly{{1, 1}}, TPoly{{um - 1, -1}});
            CharPoly rhs = Q_poly(n).times(t_to_m_minus_1) +
                           (CharPoly::constant(p_gen(1)) * Q_poly(n - 1))
                               .times(TPoly{{1, 1}, {um, -1}}) +
                           pairs.times(TPoly{{1, 1}, {um + 1, -1}});
            rhs = rhs.times(TPoly{{0, 1}, {um, -1}});
            check_true(report,
                       "blowup tail n=" + std::to_string(n) + " m=" + std::to_string(m),
                       lhs == rhs);
        }

    // the closed signed-sum form of each coefficient against the quotient
    // of the wall-crossing recursion
    for (int n = 3; n <= std::min(max_n, 10); ++n)
        for (int k = 0; k <= n - 3; ++k)
            check_eq(report,
                     "closed form n=" + std::to_string(n) + " k=" + std::to_string(k),
                     closed_form_P(n, k), to_schur(P_poly(n).coeff(unsigned(k))));

    // exactness of every (1+t) division, witnessed multiplicatively
    for (int n = 3; n <= max_n; ++n) {
        CharPoly tail;
        for (int h = 2; h <= (n - 1) / 2; ++h) tail += Q_poly(h) * Q_poly(n - h);
        if (n % 2 == 0) tail += cp_plethysm(e_gen(2), Q_poly(n / 2));
        const CharPoly lhs = P_poly(n).times(TPoly{{0, 1}, {1, 1}}) + tail.shifted(1);
        check_true(report, "division exactness n=" + std::to_string(n), lhs == Q_poly(n));
    }
    return report;
}

SuiteReport suite_duality(int max_n) {
    SuiteReport report;
    report.suite = "duality";
    for (int n = 3; n <= max_n; ++n) {
        bool sym = true;
        for (int k = 0; k <= n - 3; ++k)
            sym = sym && (P_poly(n).coeff(unsigned(k)) == P_poly(n).coeff(unsigned(n - 3 - k)));
        check_true(report, "m0n coefficient symmetry n=" + std::to_string(n), sym);
    }
    for (int n = 3; n <= std::min(max_n, 9); ++n) {
        bool sym = true;
        const CharPoly maps = stable_maps_poly(n, 2);
        for (int k = 0; k <= n; ++k)
            sym = sym && (maps.coeff(unsigned(k)) == maps.coeff(unsigned(n - k)));
        check_true(report, "p1n coefficient symmetry n=" + std::to_string(n), sym);
    }
    {
        bool involutive = true, weight_flip = true, char_preserving = true;
        for (unsigned k = 0; k <= 7; ++k)
            for (const auto& t : enumerate_trees(9, k)) {
                const auto dual = duality_involution(t);
                involutive = involutive && (duality_involution(dual) == t);
                weight_flip = weight_flip && (dual.weight_total() == 7 - k);
                char_preserving = char_preserving && (char_U_T(dual) == char_U_T(t));
            }
        check_true(report, "involution on the 9-input classes", involutive);
        check_true(report, "involution flips weight to n-2-k", weight_flip);
        check_true(report, "involution preserves the class character", char_preserving);
    }
    for (int n = 2; n <= max_n; ++n) {
        bool sym = true;
        for (int k = 0; k <= n - 2; ++k)
            sym = sym && (count_trees(unsigned(n), unsigned(k)) ==
                          count_trees(unsigned(n), unsigned(n - 2 - k)));
        check_true(report, "class count symmetry n=" + std::to_string(n), sym);
    }
    return report;
}

SuiteReport suite_trees_count(int max_n) {
    SuiteReport report;
    report.suite = "trees-count";
    for (int n = 2; n <= max_n; ++n) {
        check_true(report, "extreme coefficients are trivial n=" + std::to_string(n),
                   Q_poly(n).coeff(0) == h_gen(unsigned(n)) &&
                       Q_poly(n).coeff(unsigned(n - 2)) == h_gen(unsigned(n)));
        check_true(report, "invariant polynomial counts classes n=" + std::to_string(n),
                   invariant_poly(Q_poly(n)) == tree_count_poly(n));
    }
    {
        bool all_one = true;
        for (unsigned n = 2; n <= 9; ++n)
            for (unsigned k = 0; k + 2 <= n; ++k)
                for (const auto& t : enumerate_trees(n, k))
                    all_one = all_one && (invariant_dim(char_U_T(t)) == 1);
        check_true(report, "every class character is transitive (n<=9)", all_one);
    }
    // counting recursion against the published quotient polynomials
    {
        const auto rows = load_golden_quotients();
        for (const auto& row : rows) {
            if (row.n > max_n) continue;
            TPoly s;
            for (int h = 2; h <= row.n - 2; ++h)
                s = tp_add(s, tp_mul(tree_count_poly(h), tree_count_poly(row.n - h)));
            if (row.n % 2 == 0)
                s = tp_add(s, tp_scale(tp_stretch(tree_count_poly(row.n / 2), 2), -1));
            TPoly rhs = tp_mul(row.poly, TPoly{{0, 1}, {1, 1}});
            bool halves = true;
            for (const auto& [k, c] : s) {
                if (c % 2 != 0) { halves = false; break; }
                rhs = tp_add(rhs, TPoly{{k + 1, c / 2}});
            }
            check_true(report, "count recursion n=" + std::to_string(row.n),
                       halves && rhs == tree_count_poly(row.n),
                       "expected " + tp_to_string(tree_count_poly(row.n)) + ", got " +
                           tp_to_string(rhs));
        }
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "appendix-a",  "appendix-b", "table2-quotients", "table3-cuspidal",
        "table1-corollary52", "degreewise", "localization", "identities",
        "duality", "trees-count"};
    return names;
}

SuiteReport run_suite(const std::string& suite, int max_n) {
    if (suite == "appendix-a") return suite_appendix_a(max_n > 0 ? max_n : 11);
    if (suite == "appendix-b") return suite_appendix_b(max_n > 0 ? max_n : 11);
    if (suite == "table2-quotients") return suite_table2(max_n > 0 ? max_n : 11);
    if (suite == "table3-cuspidal") return suite_table3(max_n > 0 ? max_n : 8);
    if (suite == "table1-corollary52") return suite_table1(max_n > 0 ? max_n : 12);
    if (suite == "degreewise") return suite_degreewise(max_n > 0 ? max_n : 10);
    if (suite == "localization") return suite_localization(max_n > 0 ? max_n : 9);
    if (suite == "identities") return suite_identities(max_n > 0 ? max_n : 10);
    if (suite == "duality") return suite_duality(max_n > 0 ? max_n : 11);
    if (suite == "trees-count") return suite_trees_count(max_n > 0 ? max_n : 11);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace equichar
