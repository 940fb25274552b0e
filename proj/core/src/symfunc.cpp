#include "equichar/symfunc.hpp"

#include <mutex>
#include <stdexcept>

namespace equichar {

SymFunc SymFunc::one() {
    SymFunc f;
    f.terms_.emplace(Partition(), Rational(1));
    return f;
}

Rational SymFunc::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> SymFunc::homogeneous_degree() const {
    std::optional<unsigned> deg;
    for (const auto& [mu, c] : terms_) {
        if (!deg) deg = mu.sum();
        else if (*deg != mu.sum()) return std::nullopt;
    }
    return deg;
}

void SymFunc::add_term(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& g) {
    for (const auto& [mu, c] : g.terms_) add_term(mu, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& g) {
    for (const auto& [mu, c] : g.terms_) add_term(mu, -c);
    return *this;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) {
    SymFunc h;
    for (const auto& [mu, a] : f.terms_)
        for (const auto& [nu, b] : g.terms_) h.add_term(mu.disjoint_union(nu), a * b);
    return h;
}

SymFunc SymFunc::scaled(const Rational& c) const {
    SymFunc h;
    if (c == 0) return h;
    for (const auto& [mu, a] : terms_) h.terms_.emplace(mu, a * c);
    return h;
}

SchurExpansion::SchurExpansion(std::map<Partition, Int> terms) {
    for (const auto& [lambda, c] : terms)
        if (c != 0) add_term(lambda, c);
}

Int SchurExpansion::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurExpansion::add_term(const Partition& lambda, const Int& c) {
    if (c == 0) return;
    if (terms_.empty()) {
        size_ = lambda.sum();
    } else if (lambda.sum() != size_) {
        throw std::invalid_argument("SchurExpansion: mixed sizes");
    }
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) size_ = 0;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& g) {
    for (const auto& [lambda, c] : g.terms_) add_term(lambda, c);
    return *this;
}

SymFunc p_gen(unsigned n) {
    SymFunc f;
    if (n == 0) return SymFunc::one();
    f.add_term(Partition({n}), Rational(1));
    return f;
}

const SymFunc& h_gen(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, SymFunc> memo;
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    SymFunc f;
    for (const auto& lambda : partitions_of(n))
        f.add_term(lambda, Rational(1) / Rational(z_factor(lambda)));
    return memo.emplace(n, std::move(f)).first->second;
}

const SymFunc& e_gen(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, SymFunc> memo;
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    SymFunc f;
    for (const auto& lambda : partitions_of(n)) {
        const int sign = ((n - lambda.length()) % 2 == 0) ? 1 : -1;
        f.add_term(lambda, Rational(sign) / Rational(z_factor(lambda)));
    }
    return memo.emplace(n, std::move(f)).first->second;
}

SymFunc schur_gen(const Partition& lambda) {
    SymFunc f;
    for (const auto& mu : partitions_of(lambda.sum()))
        f.add_term(mu, Rational(mn_character(lambda, mu)) / Rational(z_factor(mu)));
    return f;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc term = SymFunc::one();
        for (unsigned part : lambda.parts()) {
            SymFunc pk;  // p_part o g
            for (const auto& [mu, b] : g.terms()) pk.add_term(mu.scaled(part), b);
            term = term * pk;
        }
        out += term.scaled(c);
    }
    return out;
}

SchurExpansion to_schur(const SymFunc& f) {
    if (f.is_zero()) return SchurExpansion();
    const auto deg = f.homogeneous_degree();
    if (!deg) throw std::invalid_argument("to_schur: mixed degrees");
    SchurExpansion out;
    for (const auto& lambda : partitions_of(*deg)) {
        Rational c = 0;
        for (const auto& [mu, v] : f.terms()) c += v * Rational(mn_character(lambda, mu));
        if (c == 0) continue;
        if (denominator(c) != 1) throw std::domain_error("non-integral character");
        out.add_term(lambda, numerator(c));
    }
    return out;
}

SymFunc from_schur(const SchurExpansion& x) {
    SymFunc f;
    for (const auto& [lambda, c] : x.terms()) f += schur_gen(lambda).scaled(Rational(c));
    return f;
}

Rational trace_at(const SymFunc& f, const Partition& mu) {
    const auto deg = f.homogeneous_degree();
    if (deg && *deg != mu.sum())
        throw std::invalid_argument("trace_at: degree mismatch");
    if (!f.is_zero() && !deg) throw std::invalid_argument("trace_at: mixed degrees");
    return Rational(z_factor(mu)) * f.coeff(mu);
}

Rational trace_at(const SchurExpansion& f, const Partition& mu) {
    if (!f.is_zero() && f.size() != mu.sum())
        throw std::invalid_argument("trace_at: degree mismatch");
    Rational t = 0;
    for (const auto& [lambda, c] : f.terms()) t += Rational(c * mn_character(lambda, mu));
    return t;
}

Rational invariant_dim(const SymFunc& f) {
    if (f.is_zero()) return 0;
    if (!f.homogeneous_degree()) throw std::invalid_argument("invariant_dim: mixed degrees");
    // sum of p-coefficients; identical to the s_(n) coefficient since the
    // trivial character is 1 on every class
    Rational s = 0;
    for (const auto& [mu, c] : f.terms()) s += c;
    return s;
}

}  // namespace equichar
