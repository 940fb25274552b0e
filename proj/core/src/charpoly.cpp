#include "equichar/charpoly.hpp"

#include <stdexcept>
#include <string>

namespace equichar {

TPoly tp_add(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    for (const auto& [k, c] : b) {
        r[k] += c;
        if (r[k] == 0) r.erase(k);
    }
    return r;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            r[i + j] += x * y;
            if (r[i + j] == 0) r.erase(i + j);
        }
    return r;
}

TPoly tp_scale(const TPoly& a, const Int& c) {
    TPoly r;
    if (c == 0) return r;
    for (const auto& [k, x] : a) r.emplace(k, x * c);
    return r;
}

TPoly tp_stretch(const TPoly& a, unsigned k) {
    TPoly r;
    for (const auto& [i, x] : a) r.emplace(i * k, x);
    return r;
}

TPoly geom_sum(unsigned m) {
    TPoly r;
    for (unsigned i = 0; i < m; ++i) r.emplace(i, 1);
    return r;
}

std::string tp_to_string(const TPoly& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : a) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const Int mag = abs(c);
        const bool unit = (mag == 1);
        if (!unit || k == 0) out += mag.str();
        if (k >= 1) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

CharPoly CharPoly::constant(SymFunc f) {
    CharPoly p;
    p.add_term(0, f);
    return p;
}

int CharPoly::degree() const {
    return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

SymFunc CharPoly::coeff(unsigned k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? SymFunc() : it->second;
}

void CharPoly::add_term(unsigned k, const SymFunc& f) {
    if (f.is_zero()) return;
    const auto deg = f.homogeneous_degree();
    if (!deg) throw std::invalid_argument("CharPoly: coefficient not homogeneous");
    if (!size_) size_ = deg;
    else if (*size_ != *deg)
        throw std::invalid_argument("CharPoly: coefficient size mismatch");
    auto [it, inserted] = coeffs_.emplace(k, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    if (coeffs_.empty()) size_.reset();
}

CharPoly& CharPoly::operator+=(const CharPoly& q) {
    for (const auto& [k, f] : q.coeffs_) add_term(k, f);
    return *this;
}

CharPoly operator*(const CharPoly& p, const CharPoly& q) {
    CharPoly r;
    for (const auto& [i, f] : p.coeffs_)
        for (const auto& [j, g] : q.coeffs_) r.add_term(i + j, f * g);
    return r;
}

CharPoly CharPoly::scaled(const Rational& c) const {
    CharPoly r;
    if (c == 0) return r;
    for (const auto& [k, f] : coeffs_) r.add_term(k, f.scaled(c));
    return r;
}

CharPoly CharPoly::shifted(unsigned j) const {
    CharPoly r;
    for (const auto& [k, f] : coeffs_) r.add_term(k + j, f);
    return r;
}

CharPoly CharPoly::times(const TPoly& a) const {
    CharPoly r;
    for (const auto& [j, c] : a)
        for (const auto& [k, f] : coeffs_) r.add_term(k + j, f.scaled(Rational(c)));
    return r;
}

CharPoly cp_plethysm(const SymFunc& f, const CharPoly& q) {
    CharPoly out;
    for (const auto& [lambda, c] : f.terms()) {
        CharPoly term = CharPoly::constant(SymFunc::one());
        for (unsigned part : lambda.parts()) {
            CharPoly pk;  // p_part o q, with t a line element
            for (const auto& [i, g] : q.coeffs()) {
                SymFunc moved;
                for (const auto& [mu, b] : g.terms()) moved.add_term(mu.scaled(part), b);
                pk.add_term(part * i, moved);
            }
            term = term * pk;
        }
        out += term.scaled(c);
    }
    return out;
}

CharPoly cp_divide_exact(const CharPoly& p, const TPoly& d) {
    if (d.empty() || d.begin()->first != 0 || (d.begin()->second != 1 && d.begin()->second != -1))
        throw std::invalid_argument("cp_divide_exact: divisor constant term must be +-1");
    if (p.is_zero()) return CharPoly();
    const Rational d0(d.begin()->second);
    const int pdeg = p.degree();
    CharPoly q;
    std::map<unsigned, SymFunc> rem;
    for (const auto& [k, f] : p.coeffs()) rem[k] = f;
    for (int k = 0; k <= pdeg; ++k) {
        auto it = rem.find(static_cast<unsigned>(k));
        if (it == rem.end() || it->second.is_zero()) continue;
        SymFunc qk = it->second.scaled(Rational(1) / d0);
        q.add_term(static_cast<unsigned>(k), qk);
        for (const auto& [j, c] : d) {
            SymFunc& slot = rem[static_cast<unsigned>(k) + j];
            slot -= qk.scaled(Rational(c));
        }
    }
    for (const auto& [k, f] : rem)
        if (!f.is_zero()) throw std::domain_error("inexact division");
    return q;
}

TPoly tp_divide_exact(const TPoly& p, const TPoly& d) {
    if (d.empty() || d.begin()->first != 0 || (d.begin()->second != 1 && d.begin()->second != -1))
        throw std::invalid_argument("tp_divide_exact: divisor constant term must be +-1");
    if (p.empty()) return TPoly();
    const Int d0 = d.begin()->second;
    const unsigned pdeg = p.rbegin()->first;
    TPoly q;
    TPoly rem = p;
    for (unsigned k = 0; k <= pdeg; ++k) {
        auto it = rem.find(k);
        if (it == rem.end() || it->second == 0) continue;
        if (it->second % d0 != 0) throw std::domain_error("inexact division");
        const Int qk = it->second / d0;
        q.emplace(k, qk);
        for (const auto& [j, c] : d) {
            rem[k + j] -= qk * c;
            if (rem[k + j] == 0) rem.erase(k + j);
        }
    }
    if (!rem.empty()) throw std::domain_error("inexact division");
    return q;
}

TPoly poincare_spec(const CharPoly& p) {
    TPoly out;
    for (const auto& [k, f] : p.coeffs()) {
        const auto deg = f.homogeneous_degree();
        std::vector<unsigned> ones(deg ? *deg : 0, 1);
        const Rational d = trace_at(f, Partition(std::move(ones)));
        if (denominator(d) != 1) throw std::domain_error("poincare_spec: non-integer dimension");
        if (numerator(d) != 0) out.emplace(k, numerator(d));
    }
    return out;
}

SymFunc total_char(const CharPoly& p) {
    SymFunc f;
    for (const auto& [k, g] : p.coeffs()) f += g;
    return f;
}

TPoly invariant_poly(const CharPoly& p) {
    TPoly out;
    for (const auto& [k, f] : p.coeffs()) {
        const Rational d = invariant_dim(f);
        if (denominator(d) != 1) throw std::domain_error("invariant_poly: non-integer dimension");
        if (numerator(d) != 0) out.emplace(k, numerator(d));
    }
    return out;
}

}  // namespace equichar
