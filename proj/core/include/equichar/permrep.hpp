#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichar/symfunc.hpp"

namespace equichar {

/// A transitive permutation representation given by its subgroup shape:
/// a product of symmetric groups on the young parts, optionally times one
/// wreath block (m copies of S_a permuted among themselves). The character
/// is prod_i h_{a_i}, times h_m o h_a for the wreath block.
struct TransitivePermSpec {
    struct WreathBlock {
        unsigned a = 0;
        unsigned m = 0;
        friend bool operator==(const WreathBlock&, const WreathBlock&) = default;
        friend auto operator<=>(const WreathBlock&, const WreathBlock&) = default;
    };

    std::vector<unsigned> young;  // kept sorted decreasing
    std::optional<WreathBlock> wreath;

    TransitivePermSpec() = default;
    TransitivePermSpec(std::vector<unsigned> young_parts,
                       std::optional<WreathBlock> wreath_block = std::nullopt);

    unsigned total() const;  // sum of young parts + m*a
    std::string to_string() const;

    friend bool operator==(const TransitivePermSpec&, const TransitivePermSpec&) = default;
    friend auto operator<=>(const TransitivePermSpec&, const TransitivePermSpec&) = default;
};

SymFunc char_of_spec(const TransitivePermSpec& spec);

/// Exact equality of target with sum of mult * char_of_spec(term).
/// Multiplicities must be positive; sizes must match (throws otherwise).
bool verify_decomposition(const SchurExpansion& target,
                          const std::vector<std::pair<TransitivePermSpec, unsigned>>& terms);

/// Closed forms for the first three graded pieces of the n-pointed
/// character, transcribed row by row from their published table; rows
/// whose ranges are infeasible contribute nothing. Each equals the
/// corresponding pipeline coefficient (checked by the verification suite).
SchurExpansion formula_A1(int n);  // n >= 4
SchurExpansion formula_A2(int n);  // n >= 5
SchurExpansion formula_A3(int n);  // n >= 6

/// The two cancellation blocks of the degree-k comparison identity:
///   W_neq = (1/2) sum_{h, i+j=k-1} sum_{T1 != T2} ch(U_T1) ch(U_T2),
///   W_eq  = sum_{T in cell(n/2,(k-1)/2)} ch(U_T)^2   (n even, k odd only).
std::pair<SymFunc, SymFunc> W_parts(int n, int k);

/// A^k + A^{k-1} + W_neq + W_eq == sum_{T in cell(n,k)} ch(U_T)
///                                 + sum_{T in cell(n/2,(k-1)/2)} h_2 o ch(U_T).
bool degreewise_identity_check(int n, int k);

/// Necessary conditions for being a permutation representation: every
/// class trace is a nonnegative integer and trace(mu) <= trace(mu squared).
/// Necessity only; passing proves nothing.
struct NecessityReport {
    bool integral = true;
    bool nonneg = true;
    bool square_monotone = true;
    std::vector<std::string> failures;
    bool passed() const { return integral && nonneg && square_monotone; }
};

NecessityReport perm_necessary_report(const SchurExpansion& f);

/// Backtracking search for a nonnegative decomposition of target into
/// transitive characters. The s_(n) coefficient bounds the total
/// multiplicity (each transitive character has invariant dimension one),
/// and candidates are grouped by their canonically smallest Schur term,
/// which for Young characters determines them uniquely.
struct DecomposeResult {
    enum class Outcome { found, impossible, budget_exhausted };
    Outcome outcome = Outcome::budget_exhausted;
    std::vector<std::pair<TransitivePermSpec, unsigned>> terms;  // when found
};

DecomposeResult decompose_best_effort(const SchurExpansion& target, std::size_t budget);

/// JSON array [{"young":[...],"wreath":null|{"a":..,"m":..},"mult":..},...].
std::string decomposition_to_json(
    const std::vector<std::pair<TransitivePermSpec, unsigned>>& terms);
std::vector<std::pair<TransitivePermSpec, unsigned>> decomposition_from_json(
    const std::string& text);

}  // namespace equichar
