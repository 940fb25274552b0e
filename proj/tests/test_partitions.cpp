#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equichar/partition.hpp"

using namespace equichar;

namespace {

// independent partition-count oracle: classic coin-style DP
long long partition_count(unsigned n) {
    std::vector<long long> dp(n + 1, 0);
    dp[0] = 1;
    for (unsigned part = 1; part <= n; ++part)
        for (unsigned s = part; s <= n; ++s) dp[s] += dp[s - part];
    return dp[n];
}

}  // namespace

TEST_CASE("partitions_of enumerates each partition once, in canonical order") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(11).size() == 56);
    for (unsigned n = 0; n <= 12; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == partition_count(n));

    const auto& p4 = partitions_of(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] > p4[i + 1]);
}

TEST_CASE("partition construction validates shape") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition({3, 2}).disjoint_union(Partition({2, 1})) == Partition({3, 2, 2, 1}));
    CHECK(Partition({3, 1}).scaled(2) == Partition({6, 2}));
}

TEST_CASE("z_factor is the centralizer order") {
    CHECK(z_factor(Partition({1, 1, 1})) == 6);
    CHECK(z_factor(Partition({2, 1})) == 2);
    CHECK(z_factor(Partition({3, 3, 2})) == 36);
    // class sizes sum to the group order
    for (unsigned n = 1; n <= 12; ++n) {
        Int total = 0;
        for (const auto& lambda : partitions_of(n)) total += factorial(n) / z_factor(lambda);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("mn_character basics") {
    for (unsigned n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(mn_character(Partition({n}), mu) == 1);
    CHECK(mn_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("mn_character dimensions are positive") {
    for (unsigned n = 1; n <= 8; ++n) {
        std::vector<unsigned> ones(n, 1);
        const Partition id(ones);
        for (const auto& lambda : partitions_of(n)) CHECK(mn_character(lambda, id) > 0);
    }
}

TEST_CASE("column orthogonality of the character table") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) {
                Int dot = 0;
                for (const auto& lambda : partitions_of(n))
                    dot += mn_character(lambda, mu) * mn_character(lambda, nu);
                CHECK(dot == (mu == nu ? z_factor(mu) : Int(0)));
            }
    }
}

TEST_CASE("square_class") {
    CHECK(square_class(Partition({3})) == Partition({3}));
    CHECK(square_class(Partition({4})) == Partition({2, 2}));
    CHECK(square_class(Partition({2, 1})) == Partition({1, 1, 1}));
    // idempotent on all-odd cycle types
    for (unsigned n = 1; n <= 10; ++n)
        for (const auto& mu : partitions_of(n)) {
            bool all_odd = true;
            for (unsigned p : mu.parts()) all_odd = all_odd && (p % 2 == 1);
            if (all_odd) CHECK(square_class(mu) == mu);
        }
}
