#pragma once

#include <string>
#include <vector>

#include "equichar/charpoly.hpp"
#include "equichar/permrep.hpp"
#include "equichar/symfunc.hpp"

namespace equichar {

/// Reference data shipped under data/golden/. Location resolution:
/// EQUICHAR_DATA environment variable, then the build-time source path.
std::string golden_data_dir();

struct GoldenCharacterRow {
    int n = 0;
    int k = 0;
    SchurExpansion terms;
};

/// "appendix_a" (characters of the n-pointed spaces, rows up to the middle
/// degree) or "appendix_b" (degree-1 stable maps to the line, likewise).
std::vector<GoldenCharacterRow> load_golden_characters(const std::string& table);

struct GoldenQuotientRow {
    int n = 0;
    TPoly poly;
};

std::vector<GoldenQuotientRow> load_golden_quotients();

struct GoldenCuspidalRow {
    int n = 0;
    std::vector<std::pair<TransitivePermSpec, unsigned>> components;
    std::string note;  // nonempty when the shipped row documents a correction
};

std::vector<GoldenCuspidalRow> load_golden_cuspidal();

}  // namespace equichar
