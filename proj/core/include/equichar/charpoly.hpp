#pragma once

#include <map>
#include <optional>

#include "equichar/symfunc.hpp"

namespace equichar {

/// Integer polynomial in the grading variable t, sparse by degree.
using TPoly = std::map<unsigned, Int>;

TPoly tp_add(const TPoly& a, const TPoly& b);
TPoly tp_mul(const TPoly& a, const TPoly& b);
TPoly tp_scale(const TPoly& a, const Int& c);
/// Substitute t -> t^k.
TPoly tp_stretch(const TPoly& a, unsigned k);
/// 1 + t + ... + t^{m-1}, the expanded form of (1-t^m)/(1-t).
TPoly geom_sum(unsigned m);
std::string tp_to_string(const TPoly& a);

/// A polynomial in t whose coefficients are symmetric functions of one
/// common homogeneous degree n. Carries graded characters such as the
/// equivariant Poincare polynomial sum_k ch(A^k(X)) t^k.
class CharPoly {
public:
    CharPoly() = default;

    /// Constant-in-t polynomial.
    static CharPoly constant(SymFunc f);

    const std::map<unsigned, SymFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Common symmetric-function degree of the coefficients, when nonzero.
    std::optional<unsigned> sym_size() const { return size_; }
    /// Largest t-exponent; -1 when zero.
    int degree() const;
    SymFunc coeff(unsigned k) const;

    void add_term(unsigned k, const SymFunc& f);

    CharPoly& operator+=(const CharPoly& q);
    friend CharPoly operator+(CharPoly p, const CharPoly& q) { return p += q; }
    friend CharPoly operator*(const CharPoly& p, const CharPoly& q);
    friend bool operator==(const CharPoly& p, const CharPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }

    CharPoly scaled(const Rational& c) const;
    /// Multiplication by t^j.
    CharPoly shifted(unsigned j) const;
    /// Multiplication by an integer polynomial in t.
    CharPoly times(const TPoly& a) const;

private:
    std::map<unsigned, SymFunc> coeffs_;
    std::optional<unsigned> size_;
};

/// Plethysm against a t-graded argument. t behaves as a line element:
/// p_k o (t^i g) = t^{ki} (p_k o g); f is then extended linearly and
/// multiplicatively from its p-expansion as usual.
CharPoly cp_plethysm(const SymFunc& f, const CharPoly& q);

/// Exact division by an integer polynomial d(t) with d(0) = +-1. Throws
/// std::domain_error("inexact division") when d does not divide p; every
/// division performed by the pipelines divides exactly, so a throw here
/// means a malformed input polynomial or an upstream bug.
CharPoly cp_divide_exact(const CharPoly& p, const TPoly& d);

/// Exact division for integer polynomials, same contract.
TPoly tp_divide_exact(const TPoly& p, const TPoly& d);

/// Ordinary Poincare polynomial: trace at the identity class per coefficient.
TPoly poincare_spec(const CharPoly& p);
/// Sets t = 1.
SymFunc total_char(const CharPoly& p);
/// Invariant dimension per coefficient.
TPoly invariant_poly(const CharPoly& p);

}  // namespace equichar
