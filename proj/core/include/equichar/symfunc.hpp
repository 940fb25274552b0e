#pragma once

#include <map>
#include <optional>
#include <vector>

#include "equichar/partition.hpp"

namespace equichar {

class SchurExpansion;

/// An exact symmetric function stored in the power-sum basis: a sparse map
/// from partitions lambda to rational coefficients of p_lambda. Values may
/// mix degrees (sums of characters of different symmetric groups do); the
/// conversions that require homogeneity check it.
///
/// The power-sum basis is the single internal representation because both
/// the product (p_lambda * p_mu = p_{lambda disjoint-union mu}) and plethysm
/// (p_k o p_mu = p_{k*mu}) act monomial-by-monomial there. Schur expansions
/// appear only at input/output boundaries.
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    /// The unit: coefficient 1 on the empty partition.
    static SymFunc one();

    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& mu) const;

    /// Degree, when all terms have a common one.
    std::optional<unsigned> homogeneous_degree() const;

    void add_term(const Partition& mu, const Rational& c);

    SymFunc& operator+=(const SymFunc& g);
    SymFunc& operator-=(const SymFunc& g);
    friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
    friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
    friend SymFunc operator*(const SymFunc& f, const SymFunc& g);
    friend bool operator==(const SymFunc& f, const SymFunc& g) {
        return f.terms_ == g.terms_;
    }

    SymFunc scaled(const Rational& c) const;

private:
    std::map<Partition, Rational> terms_;
};

/// A homogeneous integral character in the Schur basis: sparse map from
/// partitions of one common size to integer coefficients.
class SchurExpansion {
public:
    SchurExpansion() = default;
    explicit SchurExpansion(std::map<Partition, Int> terms);

    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const Partition& lambda) const;
    /// Common size of the keys; 0 for the zero expansion.
    unsigned size() const { return size_; }

    void add_term(const Partition& lambda, const Int& c);

    SchurExpansion& operator+=(const SchurExpansion& g);
    friend SchurExpansion operator+(SchurExpansion f, const SchurExpansion& g) {
        return f += g;
    }
    friend bool operator==(const SchurExpansion& f, const SchurExpansion& g) {
        return f.terms_ == g.terms_;
    }

private:
    std::map<Partition, Int> terms_;
    unsigned size_ = 0;
};

SymFunc p_gen(unsigned n);
/// Complete homogeneous h_n = sum_{lambda |- n} p_lambda / z_lambda;
/// the characteristic of the trivial representation.
const SymFunc& h_gen(unsigned n);
/// Elementary e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda;
/// the characteristic of the sign representation.
const SymFunc& e_gen(unsigned n);
/// Schur s_lambda = sum_{mu |- n} chi^lambda(mu)/z_mu * p_mu.
SymFunc schur_gen(const Partition& lambda);

/// Plethysm f o g, defined by p_k o g = g with every p_j replaced by p_{jk}
/// (scalars fixed), extended to f = sum c_lambda p_lambda multiplicatively
/// and linearly. Associative, left-distributive; p_1 is a two-sided unit.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Basis change to the Schur side: coefficient of s_lambda is
/// sum_mu c_mu * chi^lambda(mu). Requires f homogeneous; throws
/// std::domain_error("non-integral character") when a coefficient is not an
/// integer, which always signals a computation bug upstream.
SchurExpansion to_schur(const SymFunc& f);
SymFunc from_schur(const SchurExpansion& x);

/// Trace of the class of cycle type mu: z_mu times the p_mu coefficient.
/// Requires f homogeneous of degree |mu|.
Rational trace_at(const SymFunc& f, const Partition& mu);
Rational trace_at(const SchurExpansion& f, const Partition& mu);

/// Dimension of the invariant subspace: the sum of all p-coefficients,
/// equal to the s_(n) coefficient. Requires f homogeneous.
Rational invariant_dim(const SymFunc& f);

}  // namespace equichar
