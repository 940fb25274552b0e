#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichar/charpoly.hpp"
#include "equichar/symfunc.hpp"

namespace equichar {

/// One rendered character: the wire format of the CLI and the cache.
/// terms are sorted canonically descending, coefficients nonzero.
struct CharacterDocument {
    std::string space;
    int n = 0;
    std::optional<int> m;
    std::optional<int> k;
    std::string basis = "schur";
    std::vector<std::pair<Partition, Int>> terms;
    std::string version;

    friend bool operator==(const CharacterDocument&, const CharacterDocument&) = default;
};

CharacterDocument make_document(std::string space, int n, std::optional<int> m,
                                std::optional<int> k, const SchurExpansion& x,
                                std::string version);

std::string render_document_json(const CharacterDocument& doc);
CharacterDocument parse_document_json(const std::string& text);

/// All-k JSON: {"space","n","m"?,"basis","version","rows":[{"k",..,"terms":[..]}]}.
std::string render_document_json_all_k(const std::string& space, int n, std::optional<int> m,
                                       const CharPoly& p, const std::string& version);

/// Plain text, e.g. "2 s(6) + s(4,2) + s(5,1)"; terms ordered by number of
/// parts, then lexicographically, the house style of the reference tables.
std::string render_text(const SchurExpansion& x);

/// LaTeX mirroring the reference tables: "2 s_{(6)} + s_{(4, 2)} + s_{(5, 1)}";
/// unit coefficients suppressed.
std::string render_latex(const SchurExpansion& x);

}  // namespace equichar
