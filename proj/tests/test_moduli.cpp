#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "equichar/moduli.hpp"
#include "equichar/permrep.hpp"

using namespace equichar;

namespace {

SchurExpansion schur_of(std::initializer_list<std::pair<std::vector<unsigned>, long long>> terms) {
    SchurExpansion x;
    for (const auto& [parts, c] : terms) x.add_term(Partition(parts), c);
    return x;
}

}  // namespace

// runs first: later cases warm the in-process memo, and persistence
// happens only when a polynomial is actually computed
TEST_CASE("disk cache round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "equichar-test-cache";
    fs::remove_all(dir);
    cache::set_dir(dir.string());

    const CharPoly& p9 = P_poly(9);  // computes and persists
    const fs::path file = dir / "m0n_9.json";
    REQUIRE(fs::exists(file));

    std::ifstream in(file);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.at("version").get<std::string>() == k_cache_version);
    CHECK(j.at("space").get<std::string>() == "m0n");
    CharPoly reloaded;
    for (const auto& row : j.at("rows")) {
        SchurExpansion x;
        for (const auto& t : row.at("terms"))
            x.add_term(Partition(t.at("partition").get<std::vector<unsigned>>()),
                       Int(t.at("coeff").get<std::string>()));
        reloaded.add_term(row.at("k").get<unsigned>(), from_schur(x));
    }
    CHECK(reloaded == p9);

    const std::size_t removed = cache::clear();
    CHECK(removed >= 1);
    CHECK_FALSE(fs::exists(file));
    cache::set_dir("");  // disable persistence for the rest of the process
}

TEST_CASE("Q_poly at the bottom") {
    CHECK(Q_poly(0) == CharPoly::constant(SymFunc::one()));
    CHECK(Q_poly(1) == CharPoly::constant(p_gen(1)));
    CHECK(Q_poly(2) == CharPoly::constant(h_gen(2)));

    CharPoly q4;
    q4.add_term(0, h_gen(4));
    q4.add_term(1, h_gen(4) + h_gen(3) * h_gen(1));
    q4.add_term(2, h_gen(4));
    CHECK(Q_poly(4) == q4);

    CHECK_THROWS_AS(Q_poly(-1), std::invalid_argument);
}

TEST_CASE("degree-1 coefficient of Q is the two-block sum") {
    for (int n = 3; n <= 9; ++n) {
        SymFunc expected = h_gen(unsigned(n));
        for (int a = 3; a <= n - 1; ++a)
            expected += h_gen(unsigned(a)) * h_gen(unsigned(n - a));
        CHECK(Q_poly(n).coeff(1) == expected);
    }
}

TEST_CASE("P_poly small cases") {
    CharPoly p4;
    p4.add_term(0, schur_gen(Partition({4})));
    p4.add_term(1, schur_gen(Partition({4})));
    CHECK(P_poly(4) == p4);
    CHECK(to_schur(P_poly(5).coeff(1)) == schur_of({{{5}, 1}, {{4, 1}, 1}}));
    CHECK(to_schur(P_poly(7).coeff(2)) ==
          schur_of({{{7}, 4}, {{4, 3}, 2}, {{5, 2}, 3}, {{6, 1}, 3}, {{4, 2, 1}, 1}}));
    CHECK(P_poly(7).degree() == 4);
    CHECK_THROWS_AS(P_poly(2), std::invalid_argument);
}

TEST_CASE("closed form route") {
    CHECK(closed_form_P(4, 1) == schur_of({{{4}, 1}}));
    for (int n = 3; n <= 11; ++n)
        CHECK(closed_form_P(n, 0) == schur_of({{{unsigned(n)}, 1}}));
    CHECK(closed_form_P(9, 3) == to_schur(P_poly(9).coeff(3)));
    CHECK_THROWS_AS(closed_form_P(9, 7), std::invalid_argument);
}

TEST_CASE("small-stability model") {
    CHECK(delta0_poly(5, 1) == P_poly(5).times(geom_sum(2)));

    CharPoly expected;  // s4 (1 + 2t + t^2) + s_{(3,1)} t
    expected.add_term(0, schur_gen(Partition({4})));
    expected.add_term(1, schur_gen(Partition({4})).scaled(2) + schur_gen(Partition({3, 1})));
    expected.add_term(2, schur_gen(Partition({4})));
    CHECK(delta0_poly(4, 1) == expected);

    // wall-crossing assembly recovers Q
    for (int n = 3; n <= 8; ++n) {
        CharPoly rhs = delta0_poly(n, 1);
        CharPoly pairs;
        for (int h = 2; h <= (n - 1) / 2; ++h) pairs += Q_poly(h) * Q_poly(n - h);
        rhs += pairs.shifted(1);
        CHECK(Q_poly(n) == rhs);
    }
}

TEST_CASE("stable map spaces") {
    CHECK(to_schur(stable_maps_poly(3, 2).coeff(1)) == schur_of({{{3}, 2}, {{2, 1}, 1}}));
    CHECK(to_schur(stable_maps_poly(4, 2).coeff(2)) ==
          schur_of({{{4}, 5}, {{2, 2}, 1}, {{3, 1}, 3}}));
    CHECK(stable_maps_poly(5, 2).degree() == 5);
    CHECK(stable_maps_poly(5, 3).degree() == 7);
    CHECK_THROWS_AS(stable_maps_poly(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(stable_maps_poly(5, 1), std::invalid_argument);
}

TEST_CASE("localization cross-check picks the consistent fixed-locus factor") {
    CHECK(selected_p_factor_rule() == PFactorRule::betti_exponent);
    CHECK(stable_maps_localization(3, 2) == stable_maps_poly(3, 2));
    CHECK(stable_maps_localization(6, 3) == stable_maps_poly(6, 3));
    // the printed exponent collapses the m=2 fixed loci and cannot match
    CHECK_FALSE(stable_maps_localization(4, 2, PFactorRule::printed_exponent) ==
                stable_maps_poly(4, 2));
}

TEST_CASE("quotient Poincare polynomials") {
    CHECK(quotient_poincare(3) == TPoly{{0, 1}});
    CHECK(quotient_poincare(6) == TPoly{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
    CHECK(quotient_poincare(11) ==
          TPoly{{0, 1}, {1, 4}, {2, 16}, {3, 32}, {4, 44}, {5, 32}, {6, 16}, {7, 4}, {8, 1}});
}

TEST_CASE("cuspidal blocks") {
    CHECK(cuspidal_char(4) == schur_of({{{4}, 1}}));
    CHECK(cuspidal_char(5) == schur_of({{{5}, 1}}));
    CHECK(cuspidal_char(6) == to_schur(h_gen(6).scaled(2) + plethysm(h_gen(2), h_gen(3))));
    CHECK(cuspidal_char(7) == to_schur(h_gen(7).scaled(2) + (h_gen(3) * h_gen(4)).scaled(2)));
    for (int n = 4; n <= 8; ++n) CHECK(cuspidal_closed(n) == cuspidal_char(n));
    CHECK_THROWS_AS(cuspidal_char(3), std::invalid_argument);
}

TEST_CASE("space ids") {
    const SpaceId m0n5{SpaceKind::M0n, 5, std::nullopt};
    const SpaceId maps52{SpaceKind::StableMaps, 5, 2};
    const SpaceId m0n2{SpaceKind::M0n, 2, std::nullopt};
    const SpaceId delta_no_m{SpaceKind::Delta0, 5, std::nullopt};
    CHECK(m0n5.cache_filename() == "m0n_5.json");
    CHECK(maps52.cache_filename() == "maps_5_2.json");
    CHECK_THROWS_AS(m0n2.validate(), std::invalid_argument);
    CHECK_THROWS_AS(delta_no_m.validate(), std::invalid_argument);
    CHECK(space_kind_from_name("p1n") == SpaceKind::StableMaps);
    CHECK_FALSE(space_kind_from_name("nope").has_value());
}
