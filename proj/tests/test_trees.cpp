#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equichar/trees.hpp"

using namespace equichar;

namespace {

WeightedRootedTree leaf(unsigned weight, unsigned inputs) {
    return WeightedRootedTree(weight, inputs);
}

}  // namespace

TEST_CASE("admissibility is enforced") {
    CHECK_NOTHROW(leaf(0, 2));
    CHECK_THROWS_AS(leaf(0, 1), std::invalid_argument);   // root valency 2
    CHECK_THROWS_AS(leaf(1, 2), std::invalid_argument);   // weight above valency-3
    CHECK_THROWS_AS(WeightedRootedTree(0, 1, {leaf(0, 3)}), std::invalid_argument);
    CHECK_NOTHROW(WeightedRootedTree(0, 1, {leaf(1, 3)}));
}

TEST_CASE("component cells") {
    const auto& c31 = enumerate_component_trees(3, 1);
    REQUIRE(c31.size() == 1);
    CHECK(c31[0] == leaf(1, 3));
    CHECK(enumerate_component_trees(3, 2).empty());
    CHECK(enumerate_component_trees(2, 1).empty());

    // the full census at six inputs: four bare-root weights plus the four
    // weighted two-vertex shapes (2,4) and (3,3)
    CHECK(enumerate_component_trees(6, 1).size() == 1);
    CHECK(enumerate_component_trees(6, 2).size() == 3);
    CHECK(enumerate_component_trees(6, 3).size() == 3);
    CHECK(enumerate_component_trees(6, 4).size() == 1);
    for (unsigned k = 1; k <= 4; ++k)
        for (const auto& t : enumerate_component_trees(6, k)) {
            CHECK(t.usable_as_child());
            CHECK(t.inputs_total() == 6);
            CHECK(t.weight_total() == k);
        }
}

TEST_CASE("full cells and counts") {
    CHECK(count_trees(2, 0) == 1);
    CHECK(count_trees(2, 1) == 0);
    CHECK(count_trees(2, 5) == 0);

    CHECK(count_trees(4, 0) == 1);
    CHECK(count_trees(4, 1) == 2);
    CHECK(count_trees(4, 2) == 1);

    // nine inputs: class counts match the published quotient recursion
    const std::size_t expected9[] = {1, 7, 27, 53, 53, 27, 7, 1};
    for (unsigned k = 0; k <= 7; ++k) CHECK(count_trees(9, k) == expected9[k]);
}

TEST_CASE("class characters") {
    CHECK(char_U_T(leaf(0, 5)) == h_gen(5));
    CHECK(char_U_T(leaf(2, 5)) == h_gen(5));  // weights do not enter

    // two inputs at the root over a four-input block
    const WeightedRootedTree figure(0, 2, {leaf(1, 4)});
    CHECK(char_U_T(figure) == h_gen(2) * h_gen(4));

    // identical twin children give the symmetric square
    const WeightedRootedTree twins(0, 2, {leaf(1, 3), leaf(1, 3)});
    CHECK(char_U_T(twins) == h_gen(2) * plethysm(h_gen(2), h_gen(3)));

    // distinct children multiply
    const WeightedRootedTree mixed(0, 1, {leaf(1, 3), leaf(2, 4)});
    CHECK(char_U_T(mixed) == h_gen(1) * h_gen(3) * h_gen(4));
}

TEST_CASE("characters are transitive with nonnegative traces") {
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned k = 0; k + 2 <= n; ++k)
            for (const auto& t : enumerate_trees(n, k)) {
                const SymFunc& u = char_U_T(t);
                CHECK(invariant_dim(u) == 1);
                for (const auto& mu : partitions_of(n)) {
                    const Rational tr = trace_at(u, mu);
                    CHECK(denominator(tr) == 1);
                    CHECK(tr >= 0);
                }
            }
}

TEST_CASE("duality involution") {
    CHECK(duality_involution(leaf(1, 6)) == leaf(3, 6));
    for (unsigned k = 0; k <= 7; ++k)
        for (const auto& t : enumerate_trees(9, k)) {
            const auto dual = duality_involution(t);
            CHECK(dual.weight_total() == 7 - k);
            CHECK(duality_involution(dual) == t);
            CHECK(char_U_T(dual) == char_U_T(t));
        }
    for (unsigned n = 2; n <= 11; ++n)
        for (unsigned k = 0; k + 2 <= n; ++k)
            CHECK(count_trees(n, k) == count_trees(n, n - 2 - k));
}

TEST_CASE("json round trip") {
    for (unsigned k = 0; k <= 4; ++k)
        for (const auto& t : enumerate_trees(6, k))
            CHECK(tree_from_json(tree_to_json(t)) == t);
    CHECK(tree_to_json(leaf(1, 3)) == R"({"a":1,"r":3,"children":[]})");
    CHECK_THROWS(tree_from_json(R"({"a":9,"r":3,"children":[]})"));
}
