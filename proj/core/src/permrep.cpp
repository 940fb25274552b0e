#include "equichar/permrep.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "equichar/moduli.hpp"
#include "equichar/trees.hpp"

namespace equichar {

TransitivePermSpec::TransitivePermSpec(std::vector<unsigned> young_parts,
                                       std::optional<WreathBlock> wreath_block)
    : young(std::move(young_parts)), wreath(wreath_block) {
    for (unsigned a : young)
        if (a == 0) throw std::invalid_argument("TransitivePermSpec: zero part");
    if (wreath && (wreath->a == 0 || wreath->m < 2))
        throw std::invalid_argument("TransitivePermSpec: wreath needs a >= 1, m >= 2");
    std::sort(young.begin(), young.end(), std::greater<>());
}

unsigned TransitivePermSpec::total() const {
    unsigned t = 0;
    for (unsigned a : young) t += a;
    if (wreath) t += wreath->a * wreath->m;
    return t;
}

std::string TransitivePermSpec::to_string() const {
    std::string out = "U";
    if (wreath) out += "^{S" + std::to_string(wreath->m) + "}";
    out += "_{";
    bool first = true;
    if (wreath)
        for (unsigned i = 0; i < wreath->m; ++i, first = false)
            out += (first ? "" : ",") + std::to_string(wreath->a);
    for (unsigned a : young) {
        out += (first ? "" : ",") + std::to_string(a);
        first = false;
    }
    return out + "}";
}

SymFunc char_of_spec(const TransitivePermSpec& spec) {
    SymFunc f = SymFunc::one();
    if (spec.wreath) f = plethysm(h_gen(spec.wreath->m), h_gen(spec.wreath->a));
    for (unsigned a : spec.young) f = f * h_gen(a);
    return f;
}

bool verify_decomposition(const SchurExpansion& target,
                          const std::vector<std::pair<TransitivePermSpec, unsigned>>& terms) {
    SymFunc sum;
    for (const auto& [spec, mult] : terms) {
        if (mult == 0) throw std::invalid_argument("verify_decomposition: zero multiplicity");
        if (!target.is_zero() && spec.total() != target.size())
            throw std::invalid_argument("verify_decomposition: size mismatch");
        sum += char_of_spec(spec).scaled(mult);
    }
    return to_schur(sum) == target;
}

namespace {

// adds mult * ch(U_{parts, wreath}) after dropping zero parts; negative
// parts mark an infeasible instance of a row and contribute nothing
void add_u(SymFunc& acc, std::initializer_list<long> parts,
           std::optional<TransitivePermSpec::WreathBlock> wreath, int mult = 1) {
    std::vector<unsigned> young;
    for (long p : parts) {
        if (p < 0) return;
        if (p > 0) young.push_back(static_cast<unsigned>(p));
    }
    acc += char_of_spec(TransitivePermSpec(std::move(young), wreath)).scaled(mult);
}

using Wreath = TransitivePermSpec::WreathBlock;

}  // namespace

SchurExpansion formula_A1(int n) {
    if (n < 4) throw std::invalid_argument("formula_A1: n >= 4 required");
    SymFunc acc;
    for (int a = 4; a <= n; a += 2) add_u(acc, {a, n - a}, std::nullopt);
    return to_schur(acc);
}

SchurExpansion formula_A2(int n) {
    if (n < 5) throw std::invalid_argument("formula_A2: n >= 5 required");
    SymFunc acc;
    for (int a = 5; a <= n; a += 2) add_u(acc, {a, n - a}, std::nullopt);
    for (int a = 3; a <= n; ++a)
        for (int b = a + 1; a + b <= n; ++b) add_u(acc, {a, b, n - a - b}, std::nullopt);
    for (int a = 3; 2 * a <= n; ++a) add_u(acc, {n - 2 * a}, Wreath{unsigned(a), 2});
    return to_schur(acc);
}

namespace {

// one row of the published degree-3 table; the sum of the rows is the
// degree-3 coefficient for every n (checked by the verification suite)
struct A3Row {
    const char* note;
    void (*emit)(int n, SymFunc& acc);
};

const A3Row k_a3_rows[] = {
    {"two blocks, even upper part",
     [](int n, SymFunc& acc) {
         for (int a = 6; a <= n; a += 2) add_u(acc, {a, n - a}, std::nullopt);
     }},
    {"chain with weight-2 middle",
     [](int n, SymFunc& acc) {
         for (int a = 3; 2 * a < n - 2; ++a) add_u(acc, {a, n - a - 2, 2}, std::nullopt);
         for (int a = 3; a <= n; ++a)
             for (int b = a; a + b <= n - 3; ++b) add_u(acc, {a, b, n - a - b}, std::nullopt);
     }},
    {"fork with weights 2 and 1",
     [](int n, SymFunc& acc) {
         for (int a = 4; a <= n; ++a)
             for (int b = 3; a + b <= n; ++b) add_u(acc, {a, b, n - a - b}, std::nullopt);
     }},
    {"stretched fork",
     [](int n, SymFunc& acc) {
         for (int a = 3; a <= n; ++a)
             for (int b = a + 1; 2 * b <= n - 2; ++b)
                 add_u(acc, {a, b, n - a - b - 1, 1}, std::nullopt);
         for (int a = 3; 2 * a < n - 2; ++a)
             add_u(acc, {n - 2 * a - 1, 1}, Wreath{unsigned(a), 2});
     }},
    {"comb",
     [](int n, SymFunc& acc) {
         for (int a = 3; a <= n; ++a)
             for (int b = 2; 2 * (a + b) < n; ++b)
                 for (int c = 3; a + b + c <= n - 1; ++c)
                     add_u(acc, {a, b, c, n - a - b - c}, std::nullopt);
         if (n % 2 == 0)
             for (int b = 2; b <= n / 2 - 3; ++b)
                 for (int d = b + 1; d <= n / 2 - 3; ++d)
                     add_u(acc, {n / 2 - b, b, n / 2 - d, d}, std::nullopt);
     }},
    {"triple fork",
     [](int n, SymFunc& acc) {
         for (int a = 3; a <= n; ++a)
             for (int b = a + 1; b <= n; ++b)
                 for (int c = b + 1; a + b + c <= n; ++c)
                     add_u(acc, {a, b, c, n - a - b - c}, std::nullopt);
         for (int a = 3; a <= n; ++a)
             for (int b = 3; 2 * a + b <= n - 1; ++b) {
                 if (a == b) continue;
                 add_u(acc, {b, n - 2 * a - b}, Wreath{unsigned(a), 2});
             }
         for (int a = 3; 3 * a <= n; ++a) add_u(acc, {n - 3 * a}, Wreath{unsigned(a), 3});
     }},
    {"balanced triple, subtracted",
     [](int n, SymFunc& acc) {
         if (n % 3 == 0 && n / 3 >= 1) add_u(acc, {n / 3}, Wreath{unsigned(n / 3), 2}, -1);
     }},
    {"near-halves with a pair",
     [](int n, SymFunc& acc) {
         if (n % 2 == 0 && n >= 4) add_u(acc, {2}, Wreath{unsigned((n - 2) / 2), 2});
     }},
    {"symmetric square of two-block pieces",
     [](int n, SymFunc& acc) {
         if (n % 2 == 0)
             for (int a = 3; a <= n / 2 - 2; ++a)
                 acc += plethysm(h_gen(2), h_gen(unsigned(a)) * h_gen(unsigned(n / 2 - a)));
     }},
};

}  // namespace

SchurExpansion formula_A3(int n) {
    if (n < 6) throw std::invalid_argument("formula_A3: n >= 6 required");
    SymFunc acc;
    for (const auto& row : k_a3_rows) row.emit(n, acc);
    return to_schur(acc);
}

std::pair<SymFunc, SymFunc> W_parts(int n, int k) {
    if (n < 4) throw std::invalid_argument("W_parts: n >= 4 required");
    SymFunc ordered_pairs;
    for (int h = 2; h <= n - 2; ++h)
        for (int i = 0; i <= k - 1; ++i)
            ordered_pairs += Q_poly(h).coeff(unsigned(i)) * Q_poly(n - h).coeff(unsigned(k - 1 - i));
    SymFunc w_eq;
    if (n % 2 == 0 && (k - 1) >= 0 && (k - 1) % 2 == 0)
        w_eq = cell_square_diagonal(unsigned(n / 2), unsigned((k - 1) / 2));
    const SymFunc w_neq = (ordered_pairs - w_eq).scaled(Rational(1, 2));
    return {w_neq, w_eq};
}

bool degreewise_identity_check(int n, int k) {
    if (n < 4 || k < 0 || k > n - 2)
        throw std::invalid_argument("degreewise_identity_check: need n >= 4, 0 <= k <= n-2");
    const auto [w_neq, w_eq] = W_parts(n, k);
    SymFunc lhs = w_neq + w_eq;
    if (k <= n - 3) lhs += P_poly(n).coeff(unsigned(k));
    if (k >= 1 && k - 1 <= n - 3) lhs += P_poly(n).coeff(unsigned(k - 1));
    SymFunc rhs = Q_poly(n).coeff(unsigned(k));
    if (n % 2 == 0 && k >= 1 && (k - 1) % 2 == 0)
        rhs += cell_sym_diagonal(unsigned(n / 2), unsigned((k - 1) / 2));
    return lhs == rhs;
}

NecessityReport perm_necessary_report(const SchurExpansion& f) {
    NecessityReport report;
    if (f.is_zero()) return report;
    for (const auto& mu : partitions_of(f.size())) {
        const Rational tr = trace_at(f, mu);
        if (denominator(tr) != 1) {
            report.integral = false;
            report.failures.push_back("non-integer trace at " + mu.to_string());
            continue;
        }
        if (tr < 0) {
            report.nonneg = false;
            report.failures.push_back("negative trace at " + mu.to_string());
        }
        const Rational tr_sq = trace_at(f, square_class(mu));
        if (tr > tr_sq) {
            report.square_monotone = false;
            report.failures.push_back("trace at " + mu.to_string() +
                                      " exceeds trace at its square class");
        }
    }
    return report;
}

namespace {

struct Candidate {
    TransitivePermSpec spec;
    SchurExpansion schur;
    Partition min_term;
};

std::vector<Candidate> candidate_family(unsigned n) {
    std::vector<Candidate> out;
    auto push = [&](TransitivePermSpec spec) {
        Candidate c;
        c.schur = to_schur(char_of_spec(spec));
        c.min_term = c.schur.terms().begin()->first;
        c.spec = std::move(spec);
        out.push_back(std::move(c));
    };
    for (const auto& lambda : partitions_of(n))
        if (!lambda.empty()) push(TransitivePermSpec(lambda.parts()));
    for (unsigned a = 2; 2 * a <= n; ++a)
        for (unsigned m = 2; a * m <= n; ++m)
            for (const auto& rho : partitions_of(n - a * m))
                push(TransitivePermSpec(rho.parts(), TransitivePermSpec::WreathBlock{a, m}));
    return out;
}

}  // namespace

DecomposeResult decompose_best_effort(const SchurExpansion& target, std::size_t budget) {
    DecomposeResult result;
    if (target.is_zero()) {
        result.outcome = DecomposeResult::Outcome::found;
        return result;
    }
    for (const auto& [lambda, c] : target.terms())
        if (c < 0) {
            result.outcome = DecomposeResult::Outcome::impossible;
            return result;
        }

    const auto candidates = candidate_family(target.size());
    std::map<Partition, Int> rem(target.terms().begin(), target.terms().end());
    std::vector<std::pair<TransitivePermSpec, unsigned>> chosen;
    std::size_t steps = 0;
    bool out_of_budget = false;

    auto prune_zeros = [](std::map<Partition, Int>& m) {
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
    };

    std::function<bool()> search = [&]() -> bool {
        if (++steps > budget) {
            out_of_budget = true;
            return false;
        }
        prune_zeros(rem);
        if (rem.empty()) return true;
        // copied, not referenced: recursion below may erase and re-create
        // this node while backtracking
        const Partition min_term = rem.begin()->first;
        if (rem.begin()->second < 0) return false;

        for (const auto& cand : candidates) {
            if (!(cand.min_term == min_term)) continue;
            // try every positive multiplicity that keeps all coefficients >= 0
            Int max_mult = rem.begin()->second / cand.schur.terms().begin()->second;
            for (Int q = max_mult; q > 0; --q) {
                bool fits = true;
                for (const auto& [lambda, c] : cand.schur.terms()) {
                    auto it = rem.find(lambda);
                    const Int have = (it == rem.end()) ? Int(0) : it->second;
                    if (have < c * q) { fits = false; break; }
                }
                if (!fits) continue;
                for (const auto& [lambda, c] : cand.schur.terms()) rem[lambda] -= c * q;
                chosen.emplace_back(cand.spec, static_cast<unsigned>(q));
                if (search()) return true;
                chosen.pop_back();
                for (const auto& [lambda, c] : cand.schur.terms()) rem[lambda] += c * q;
                if (out_of_budget) return false;
            }
        }
        return false;
    };

    if (search()) {
        result.outcome = DecomposeResult::Outcome::found;
        result.terms = std::move(chosen);
    } else {
        result.outcome = out_of_budget ? DecomposeResult::Outcome::budget_exhausted
                                       : DecomposeResult::Outcome::impossible;
    }
    return result;
}

std::string decomposition_to_json(
    const std::vector<std::pair<TransitivePermSpec, unsigned>>& terms) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [spec, mult] : terms) {
        nlohmann::ordered_json j;
        j["young"] = spec.young;
        if (spec.wreath)
            j["wreath"] = {{"a", spec.wreath->a}, {"m", spec.wreath->m}};
        else
            j["wreath"] = nullptr;
        j["mult"] = mult;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::vector<std::pair<TransitivePermSpec, unsigned>> decomposition_from_json(
    const std::string& text) {
    std::vector<std::pair<TransitivePermSpec, unsigned>> out;
    for (const auto& j : nlohmann::json::parse(text)) {
        std::optional<TransitivePermSpec::WreathBlock> wreath;
        if (!j.at("wreath").is_null())
            wreath = TransitivePermSpec::WreathBlock{j["wreath"].at("a").get<unsigned>(),
                                                     j["wreath"].at("m").get<unsigned>()};
        out.emplace_back(TransitivePermSpec(j.at("young").get<std::vector<unsigned>>(), wreath),
                         j.at("mult").get<unsigned>());
    }
    return out;
}

}  // namespace equichar
