#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <vector>

namespace equichar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. Partitions index conjugacy
/// classes of the symmetric group and the classical symmetric-function
/// bases, so they are the universal key type of this library.
///
/// Canonical order: first by sum, then lexicographically on the part
/// sequence. Within a fixed sum this is the reverse-lexicographic order,
/// descending from (n) down to (1^n); deterministic output sorts
/// descending by it.
class Partition {
public:
    Partition() = default;

    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<unsigned> parts);

    /// Sorts and drops zero entries.
    static Partition from_unsorted(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned sum() const { return sum_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Multiset union of parts, re-sorted.
    Partition disjoint_union(const Partition& other) const;

    /// Every part scaled by a positive factor (used by plethysm p_k o -).
    Partition scaled(unsigned factor) const;

    std::string to_string() const;  // "(4,2,1)" ; "()" for empty

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (a.sum_ != b.sum_) return a.sum_ <=> b.sum_;
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

/// All partitions of n, each exactly once, in canonical descending order:
/// (n) first, (1^n) last. The returned reference is to a shared memo table.
const std::vector<Partition>& partitions_of(unsigned n);

/// Order of the centralizer of a permutation of cycle type lambda:
/// z_lambda = prod over distinct part values i of i^{m_i} * m_i!.
/// The conjugacy class of cycle type lambda in S_n has n!/z_lambda elements.
Int z_factor(const Partition& lambda);

/// Irreducible character value chi^lambda(mu) by recursive border-strip
/// removal (Murnaghan-Nakayama), memoized per size. Throws
/// std::invalid_argument when |lambda| != |mu|.
Int mn_character(const Partition& lambda, const Partition& mu);

/// Cycle type of sigma^2 given the cycle type of sigma: odd parts stay,
/// each even part l splits into two parts l/2.
Partition square_class(const Partition& mu);

Int factorial(unsigned n);

}  // namespace equichar
