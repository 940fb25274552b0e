#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equichar/golden.hpp"
#include "equichar/serialize.hpp"

using namespace equichar;

namespace {

SchurExpansion schur_of(std::initializer_list<std::pair<std::vector<unsigned>, long long>> terms) {
    SchurExpansion x;
    for (const auto& [parts, c] : terms) x.add_term(Partition(parts), c);
    return x;
}

}  // namespace

TEST_CASE("documents order terms canonically descending") {
    const auto x = schur_of({{{4, 2}, 1}, {{6}, 2}, {{5, 1}, 1}});
    const auto doc = make_document("m0n", 6, std::nullopt, 1, x, "test");
    REQUIRE(doc.terms.size() == 3);
    CHECK(doc.terms[0].first == Partition({6}));
    CHECK(doc.terms[1].first == Partition({5, 1}));
    CHECK(doc.terms[2].first == Partition({4, 2}));
}

TEST_CASE("json round trip is byte-stable") {
    const auto x = schur_of({{{4, 2}, 1}, {{6}, 2}, {{5, 1}, 1}});
    const auto doc = make_document("m0n", 6, std::nullopt, 1, x, "0.1.0");
    const std::string once = render_document_json(doc);
    const CharacterDocument parsed = parse_document_json(once);
    CHECK(parsed == doc);
    CHECK(render_document_json(parsed) == once);

    CharacterDocument with_m = doc;
    with_m.space = "maps";
    with_m.m = 2;
    const std::string text = render_document_json(with_m);
    CHECK(parse_document_json(text) == with_m);
    CHECK(render_document_json(parse_document_json(text)) == text);
}

TEST_CASE("text and latex renderings follow the table style") {
    const auto x = schur_of({{{4, 2}, 1}, {{6}, 2}, {{5, 1}, 1}});
    CHECK(render_text(x) == "2 s(6) + s(4,2) + s(5,1)");
    CHECK(render_latex(x) == "2 s_{(6)} + s_{(4, 2)} + s_{(5, 1)}");
    CHECK(render_text(SchurExpansion()) == "0");
    CHECK(render_text(schur_of({{{3, 1}, -2}, {{4}, 1}})) == "s(4) - 2 s(3,1)");
    // shorter partitions first, then lexicographic
    CHECK(render_text(schur_of({{{4, 2, 1}, 1}, {{7}, 4}, {{4, 3}, 2}, {{5, 2}, 3}})) ==
          "4 s(7) + 2 s(4,3) + 3 s(5,2) + s(4,2,1)");
}

TEST_CASE("golden tables load") {
    const auto a = load_golden_characters("appendix_a");
    CHECK(a.size() == 16);
    bool found = false;
    for (const auto& row : a)
        if (row.n == 5 && row.k == 1) {
            found = true;
            CHECK(row.terms == schur_of({{{5}, 1}, {{4, 1}, 1}}));
        }
    CHECK(found);

    const auto b = load_golden_characters("appendix_b");
    CHECK(b.size() == 29);

    const auto quotients = load_golden_quotients();
    CHECK(quotients.size() == 9);
    CHECK(quotients.front().n == 3);

    const auto cuspidal = load_golden_cuspidal();
    REQUIRE(cuspidal.size() == 5);
    CHECK(cuspidal.back().n == 8);
    CHECK(cuspidal.back().components.size() == 5);
    CHECK_FALSE(cuspidal.back().note.empty());

    CHECK_THROWS_AS(load_golden_characters("appendix_c"), std::invalid_argument);
}
