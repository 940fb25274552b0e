#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "equichar/symfunc.hpp"

using namespace equichar;

namespace {

SchurExpansion schur_of(std::initializer_list<std::pair<std::vector<unsigned>, long long>> terms) {
    SchurExpansion x;
    for (const auto& [parts, c] : terms) x.add_term(Partition(parts), c);
    return x;
}

// Pieri-rule oracle, independent of the character-table conversion:
// s_lambda * h_r = sum of s_mu over mu obtained from lambda by adding a
// horizontal r-strip.
SchurExpansion pieri_multiply(const SchurExpansion& x, unsigned r) {
    SchurExpansion out;
    for (const auto& [lambda, c] : x.terms()) {
        std::vector<unsigned> lam = lambda.parts();
        lam.push_back(0);  // allow a new row
        std::vector<unsigned> mu(lam.size());
        // choose mu row by row with lam[i] <= mu[i] <= lam[i-1]
        auto rec = [&](auto&& self, std::size_t row, unsigned remaining) -> void {
            if (row == lam.size()) {
                if (remaining == 0) {
                    std::vector<unsigned> parts;
                    for (unsigned v : mu)
                        if (v) parts.push_back(v);
                    out.add_term(Partition(parts), c);
                }
                return;
            }
            const unsigned hi_bound =
                row == 0 ? lam[0] + remaining : std::min(mu[row - 1], lam[row] + remaining);
            for (unsigned v = lam[row]; v <= hi_bound; ++v) {
                mu[row] = v;
                self(self, row + 1, remaining - (v - lam[row]));
            }
        };
        rec(rec, 0, r);
    }
    return out;
}

// exponent-vector expansion in four variables; enough for degree-4 checks
using Expo = std::array<unsigned, 4>;
using Poly4 = std::map<Expo, Rational>;

Poly4 poly4_mul(const Poly4& a, const Poly4& b) {
    Poly4 r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e{};
            for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

Poly4 evaluate_in_4_vars(const SymFunc& f) {
    Poly4 out;
    for (const auto& [lambda, c] : f.terms()) {
        Poly4 term{{Expo{0, 0, 0, 0}, Rational(1)}};
        for (unsigned part : lambda.parts()) {
            Poly4 power_sum;
            for (int i = 0; i < 4; ++i) {
                Expo e{};
                e[i] = part;
                power_sum[e] += 1;
            }
            term = poly4_mul(term, power_sum);
        }
        for (auto& [e, v] : term) out[e] += v * c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("ring operations in the power-sum basis") {
    CHECK((p_gen(2) - p_gen(2)).is_zero());
    const SymFunc half_p11 = (p_gen(1) * p_gen(1)).scaled(Rational(1, 2));
    CHECK(half_p11.coeff(Partition({1, 1})) == Rational(1, 2));
    CHECK(h_gen(2) + e_gen(2) == p_gen(1) * p_gen(1));
    SymFunc p32;
    p32.add_term(Partition({3, 2}), 1);
    CHECK(p_gen(2) * p_gen(3) == p32);
}

TEST_CASE("products against the Pieri oracle") {
    const auto h2 = schur_of({{{2}, 1}});
    CHECK(to_schur(h_gen(2) * h_gen(2)) == pieri_multiply(h2, 2));
    CHECK(to_schur(h_gen(2) * h_gen(2)) == schur_of({{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}));
    CHECK(to_schur(h_gen(4) * h_gen(1)) == pieri_multiply(schur_of({{{4}, 1}}), 1));
    CHECK(to_schur(h_gen(4) * h_gen(1)) == schur_of({{{5}, 1}, {{4, 1}, 1}}));
    // h_lambda expansions match the oracle for every partition of 5
    for (const auto& lambda : partitions_of(5)) {
        SymFunc prod = SymFunc::one();
        SchurExpansion expected = schur_of({{{}, 1}});
        for (unsigned part : lambda.parts()) {
            prod = prod * h_gen(part);
            expected = pieri_multiply(expected, part);
        }
        CHECK(to_schur(prod) == expected);
    }
}

TEST_CASE("generators") {
    CHECK(h_gen(2).coeff(Partition({1, 1})) == Rational(1, 2));
    CHECK(h_gen(2).coeff(Partition({2})) == Rational(1, 2));
    CHECK(e_gen(2).coeff(Partition({1, 1})) == Rational(1, 2));
    CHECK(e_gen(2).coeff(Partition({2})) == Rational(-1, 2));
    const SymFunc s21 = schur_gen(Partition({2, 1}));
    CHECK(s21.coeff(Partition({1, 1, 1})) == Rational(1, 3));
    CHECK(s21.coeff(Partition({2, 1})) == 0);
    CHECK(s21.coeff(Partition({3})) == Rational(-1, 3));
    CHECK(h_gen(0) == SymFunc::one());
}

TEST_CASE("plethysm against the monomial-expansion oracle") {
    // h_2 o h_2 expanded directly: h_2 evaluated at the ten degree-2
    // monomials of four variables
    std::vector<Expo> monomials;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Expo e{};
            e[i] += 1;
            e[j] += 1;
            monomials.push_back(e);
        }
    Poly4 direct;
    for (std::size_t a = 0; a < monomials.size(); ++a)
        for (std::size_t b = a; b < monomials.size(); ++b) {
            Expo e{};
            for (int i = 0; i < 4; ++i) e[i] = monomials[a][i] + monomials[b][i];
            direct[e] += 1;
        }
    CHECK(evaluate_in_4_vars(plethysm(h_gen(2), h_gen(2))) == direct);
    CHECK(to_schur(plethysm(h_gen(2), h_gen(2))) == schur_of({{{4}, 1}, {{2, 2}, 1}}));
}

TEST_CASE("plethysm identities and special values") {
    CHECK(to_schur(plethysm(e_gen(2), h_gen(2))) == schur_of({{{3, 1}, 1}}));
    // antisymmetric part = square minus symmetric part
    const SymFunc gap = h_gen(2) * h_gen(2) - plethysm(h_gen(2), h_gen(2));
    CHECK(plethysm(e_gen(2), h_gen(2)) == gap);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        SymFunc f;
        const auto& parts = partitions_of(1 + rng() % 5);
        f.add_term(parts[rng() % parts.size()], 1 + int(rng() % 3));
        CHECK(plethysm(p_gen(1), f) == f);
        CHECK(plethysm(f, p_gen(1)) == f);
    }
    // constants are fixed by p_n o -
    SymFunc c = SymFunc::one().scaled(5);
    CHECK(plethysm(p_gen(3), c) == c);
}

TEST_CASE("to_schur and from_schur") {
    CHECK(to_schur(h_gen(3)) == schur_of({{{3}, 1}}));
    CHECK(to_schur(h_gen(2) * h_gen(1)) == schur_of({{{3}, 1}, {{2, 1}, 1}}));
    // the two-block sum that carries the degree-1 character at n = 6
    const SymFunc f = h_gen(6) + h_gen(4) * h_gen(2);
    CHECK(to_schur(f) == schur_of({{{6}, 2}, {{4, 2}, 1}, {{5, 1}, 1}}));

    CHECK_THROWS_AS(to_schur(h_gen(2) + h_gen(3)), std::invalid_argument);
    CHECK_THROWS_AS(to_schur(h_gen(2).scaled(Rational(1, 2))), std::domain_error);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        // round trip on integral characters built from h-products
        SymFunc g = SymFunc::one();
        unsigned total = 0;
        while (total < 5) {
            const unsigned part = 1 + rng() % 3;
            g = g * h_gen(part);
            total += part;
        }
        g = g.scaled(1 + int(rng() % 4));
        CHECK(from_schur(to_schur(g)) == g);
    }
    for (int trial = 0; trial < 8; ++trial) {
        SchurExpansion x;
        const auto& parts = partitions_of(4 + rng() % 3);
        for (int i = 0; i < 3; ++i) x.add_term(parts[rng() % parts.size()], int(rng() % 5) - 2);
        CHECK(to_schur(from_schur(x)) == x);
    }
}

TEST_CASE("trace_at") {
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(trace_at(h_gen(n), mu) == 1);
    CHECK(trace_at(h_gen(4) * h_gen(1), Partition({1, 1, 1, 1, 1})) == 5);
    CHECK(trace_at(e_gen(3), Partition({2, 1})) == -1);
    CHECK_THROWS_AS(trace_at(h_gen(3), Partition({2})), std::invalid_argument);
    // Schur-side evaluation agrees
    CHECK(trace_at(to_schur(h_gen(4) * h_gen(1)), Partition({1, 1, 1, 1, 1})) == 5);
}

TEST_CASE("invariant_dim") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(invariant_dim(h_gen(n)) == 1);
    CHECK(invariant_dim(from_schur(schur_of({{{4, 1}, 1}}))) == 0);
    // the degree-2 character of the 7-pointed space (its table row)
    const SchurExpansion a2_row7 = schur_of(
        {{{7}, 4}, {{4, 3}, 2}, {{5, 2}, 3}, {{6, 1}, 3}, {{4, 2, 1}, 1}});
    CHECK(invariant_dim(from_schur(a2_row7)) == 4);
    CHECK_THROWS_AS(invariant_dim(h_gen(2) + h_gen(3)), std::invalid_argument);
}
