#include "equichar/moduli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace equichar {

namespace fs = std::filesystem;

void SpaceId::validate() const {
    switch (kind) {
        case SpaceKind::M0n:
            if (n < 3) throw std::invalid_argument("m0n requires n >= 3");
            if (m) throw std::invalid_argument("m0n takes no m");
            break;
        case SpaceKind::M0nPlusOne:
            if (n < 0) throw std::invalid_argument("m0n1 requires n >= 0");
            if (m) throw std::invalid_argument("m0n1 takes no m");
            break;
        case SpaceKind::Delta0:
            if (n < 3) throw std::invalid_argument("delta0 requires n >= 3");
            if (!m || *m < 1) throw std::invalid_argument("delta0 requires m >= 1");
            break;
        case SpaceKind::StableMaps:
            if (n < 3) throw std::invalid_argument("maps requires n >= 3");
            if (!m || *m < 2) throw std::invalid_argument("maps requires m >= 2");
            break;
    }
}

std::string SpaceId::space_name() const {
    switch (kind) {
        case SpaceKind::M0n: return "m0n";
        case SpaceKind::M0nPlusOne: return "m0n1";
        case SpaceKind::Delta0: return "delta0";
        case SpaceKind::StableMaps: return "maps";
    }
    return "?";
}

std::string SpaceId::cache_filename() const {
    std::string name = space_name() + "_" + std::to_string(n);
    if (m) name += "_" + std::to_string(*m);
    return name + ".json";
}

std::optional<SpaceKind> space_kind_from_name(const std::string& name) {
    if (name == "m0n") return SpaceKind::M0n;
    if (name == "m0n1") return SpaceKind::M0nPlusOne;
    if (name == "delta0") return SpaceKind::Delta0;
    if (name == "maps" || name == "p1n") return SpaceKind::StableMaps;
    return std::nullopt;
}

// ---------------------------------------------------------------- cache --

namespace cache {

namespace {
std::mutex g_mutex;
std::optional<std::string> g_override;
}  // namespace

std::string dir() {
    std::lock_guard lock(g_mutex);
    if (g_override) return *g_override;
    if (const char* env = std::getenv("EQUICHAR_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return (fs::path(xdg) / "equichar").string();
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "equichar").string();
    return "";
}

void set_dir(const std::string& path) {
    std::lock_guard lock(g_mutex);
    g_override = path;
}

std::size_t clear() {
    const std::string d = dir();
    if (d.empty()) return 0;
    std::error_code ec;
    std::size_t removed = 0;
    for (const auto& entry : fs::directory_iterator(d, ec)) {
        if (entry.path().extension() == ".json" && fs::remove(entry.path(), ec)) ++removed;
    }
    return removed;
}

}  // namespace cache

namespace {

nlohmann::ordered_json schur_terms_json(const SchurExpansion& x) {
    auto arr = nlohmann::ordered_json::array();
    const auto& terms = x.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {  // canonical descending
        nlohmann::ordered_json t;
        t["partition"] = it->first.parts();
        t["coeff"] = it->second.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

SchurExpansion schur_terms_from_json(const nlohmann::json& arr) {
    SchurExpansion x;
    for (const auto& t : arr) {
        std::vector<unsigned> parts = t.at("partition").get<std::vector<unsigned>>();
        const auto& cj = t.at("coeff");
        const Int c = cj.is_string() ? Int(cj.get<std::string>()) : Int(cj.get<long long>());
        x.add_term(Partition(std::move(parts)), c);
    }
    return x;
}

std::optional<CharPoly> load_cached(const SpaceId& id) {
    const std::string d = cache::dir();
    if (d.empty()) return std::nullopt;
    const fs::path path = fs::path(d) / id.cache_filename();
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.at("version").get<std::string>() != k_cache_version) return std::nullopt;
        if (j.at("space").get<std::string>() != id.space_name()) return std::nullopt;
        if (j.at("n").get<int>() != id.n) return std::nullopt;
        CharPoly p;
        for (const auto& row : j.at("rows"))
            p.add_term(row.at("k").get<unsigned>(),
                       from_schur(schur_terms_from_json(row.at("terms"))));
        return p;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are recomputed
    }
}

void store_cached(const SpaceId& id, const CharPoly& p) {
    const std::string d = cache::dir();
    if (d.empty()) return;
    std::error_code ec;
    fs::create_directories(d, ec);
    if (ec) return;
    nlohmann::ordered_json j;
    j["version"] = k_cache_version;
    j["space"] = id.space_name();
    j["n"] = id.n;
    if (id.m) j["m"] = *id.m;
    j["basis"] = "schur";
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [k, f] : p.coeffs()) {
        nlohmann::ordered_json row;
        row["k"] = k;
        row["terms"] = schur_terms_json(to_schur(f));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);

    const fs::path path = fs::path(d) / id.cache_filename();
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump(1) << "\n";
    }
    fs::rename(tmp, path, ec);  // atomic replacement on POSIX
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

// ------------------------------------------------------------ pipelines --

const CharPoly& Q_poly(int n) {
    if (n < 0) throw std::invalid_argument("Q_poly: n >= 0 required");
    static std::mutex mu;
    static std::map<int, CharPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    CharPoly q;
    if (n == 0) {
        q = CharPoly::constant(SymFunc::one());
    } else if (n == 1) {
        q = CharPoly::constant(p_gen(1));
    } else {
        const SpaceId id{SpaceKind::M0nPlusOne, n, std::nullopt};
        if (auto cached = load_cached(id)) {
            q = std::move(*cached);
        } else {
            for (unsigned k = 0; k + 1 < static_cast<unsigned>(n); ++k) {
                SymFunc f;
                for (const auto& t : enumerate_trees(static_cast<unsigned>(n), k))
                    f += char_U_T(t);
                q.add_term(k, f);
            }
            store_cached(id, q);
        }
    }
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(q)).first->second;
}

const CharPoly& P_poly(int n) {
    if (n < 3) throw std::invalid_argument("P_poly: n >= 3 required");
    static std::mutex mu;
    static std::map<int, CharPoly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    CharPoly p;
    const SpaceId id{SpaceKind::M0n, n, std::nullopt};
    if (auto cached = load_cached(id)) {
        p = std::move(*cached);
    } else {
        CharPoly tail;
        const int ell = (n - 1) / 2;
        for (int h = 2; h <= ell; ++h) tail += Q_poly(h) * Q_poly(n - h);
        if (n % 2 == 0) tail += cp_plethysm(e_gen(2), Q_poly(n / 2));
        CharPoly numerator = Q_poly(n) + tail.scaled(-1).shifted(1);
        p = cp_divide_exact(numerator, TPoly{{0, 1}, {1, 1}});
        store_cached(id, p);
    }
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(p)).first->second;
}

SchurExpansion closed_form_P(int n, int k) {
    if (n < 3 || k < 0 || k > n - 3)
        throw std::invalid_argument("closed_form_P: need n >= 3, 0 <= k <= n-3");
    const unsigned un = static_cast<unsigned>(n);
    SymFunc acc;
    for (int i = 0; i <= k; ++i) {
        const int sign = ((k - i) % 2 == 0) ? 1 : -1;
        acc += Q_poly(n).coeff(static_cast<unsigned>(i)).scaled(sign);
    }
    for (int s = 0; s + 1 <= k; ++s) {
        const int sign = ((k - s) % 2 == 0) ? 1 : -1;
        SymFunc pairs;
        for (int h = 2; h <= n - 2; ++h)
            for (int i = 0; i <= s; ++i)
                pairs += Q_poly(h).coeff(static_cast<unsigned>(i)) *
                         Q_poly(n - h).coeff(static_cast<unsigned>(s - i));
        if (n % 2 == 0 && s % 2 == 0)
            pairs -= cell_square_diagonal(un / 2, static_cast<unsigned>(s / 2));
        acc += pairs.scaled(Rational(sign) / 2);
    }
    if (n % 2 == 0) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        for (int i = 0; 2 * i <= k - 1; ++i)
            acc += cell_antisym_diagonal(un / 2, static_cast<unsigned>(i)).scaled(sign);
    }
    return to_schur(acc);
}

CharPoly delta0_poly(int n, int m) {
    SpaceId{SpaceKind::Delta0, n, m}.validate();
    CharPoly r = P_poly(n).times(geom_sum(2 * static_cast<unsigned>(m)));
    if (n % 2 == 0) {
        const CharPoly inner = Q_poly(n / 2).times(geom_sum(static_cast<unsigned>(m)));
        r += cp_plethysm(e_gen(2), inner).shifted(1);
    }
    return r;
}

CharPoly stable_maps_poly(int n, int m) {
    SpaceId{SpaceKind::StableMaps, n, m}.validate();
    const unsigned um = static_cast<unsigned>(m);
    CharPoly tail;
    if (m >= 3) tail += Q_poly(n).times(geom_sum(um - 2)).shifted(1);
    tail += (CharPoly::constant(p_gen(1)) * Q_poly(n - 1)).times(geom_sum(um - 1)).shifted(1);
    CharPoly pairs;
    const int ell = (n - 1) / 2;
    for (int h = 2; h <= ell; ++h) pairs += Q_poly(h) * Q_poly(n - h);
    tail += pairs.times(geom_sum(um)).shifted(1);

    CharPoly r = delta0_poly(n, m) + tail.times(geom_sum(um));
    if (r.degree() != n + 2 * m - 4)
        throw std::logic_error("stable_maps_poly: unexpected t-degree");
    return r;
}

CharPoly stable_maps_localization(int n, int m, PFactorRule rule) {
    SpaceId{SpaceKind::StableMaps, n, m}.validate();
    CharPoly r;
    if (m > 2) r = stable_maps_localization(n, m - 1, rule).shifted(2);
    const unsigned fixed_locus_factor =
        rule == PFactorRule::printed_exponent ? static_cast<unsigned>(m - 2)
                                              : static_cast<unsigned>(m - 1);
    if (fixed_locus_factor == 0) return r;
    CharPoly s;
    for (int a = 0; a <= n; ++a) {
        const unsigned shift = static_cast<unsigned>(std::min(n - a, 2));
        s += (Q_poly(a) * Q_poly(n - a)).shifted(shift);
    }
    r += s.times(geom_sum(fixed_locus_factor));
    return r;
}

PFactorRule selected_p_factor_rule() {
    static std::once_flag once;
    static PFactorRule rule = PFactorRule::betti_exponent;
    std::call_once(once, [] {
        const CharPoly reference = stable_maps_poly(3, 2);
        if (stable_maps_localization(3, 2, PFactorRule::betti_exponent) == reference)
            rule = PFactorRule::betti_exponent;
        else if (stable_maps_localization(3, 2, PFactorRule::printed_exponent) == reference)
            rule = PFactorRule::printed_exponent;
        else
            throw std::logic_error("no fixed-locus factor convention matches");
    });
    return rule;
}

std::string p_factor_rule_name(PFactorRule rule) {
    return rule == PFactorRule::printed_exponent ? "(1-t^(m-2))/(1-t)" : "(1-t^(m-1))/(1-t)";
}

CharPoly stable_maps_localization(int n, int m) {
    return stable_maps_localization(n, m, selected_p_factor_rule());
}

TPoly tree_count_poly(int n) {
    if (n < 0) throw std::invalid_argument("tree_count_poly: n >= 0 required");
    if (n < 2) return TPoly{{0, 1}};  // matches the unit convention for Q_0, Q_1
    TPoly q;
    for (unsigned k = 0; k + 1 < static_cast<unsigned>(n); ++k) {
        const std::size_t b = count_trees(static_cast<unsigned>(n), k);
        if (b) q.emplace(k, b);
    }
    return q;
}

TPoly quotient_poincare(int n) {
    if (n < 3) throw std::invalid_argument("quotient_poincare: n >= 3 required");
    const TPoly via_invariants = invariant_poly(P_poly(n));

    // counting route: (1+t) p_n = q_n - (1/2) t ( sum_{h=2}^{n-2} q_h q_{n-h}
    //                                             - q_{n/2}(t^2) )
    TPoly s;
    for (int h = 2; h <= n - 2; ++h) s = tp_add(s, tp_mul(tree_count_poly(h), tree_count_poly(n - h)));
    if (n % 2 == 0) s = tp_add(s, tp_scale(tp_stretch(tree_count_poly(n / 2), 2), -1));
    TPoly half;
    for (const auto& [k, c] : s) {
        if (c % 2 != 0) throw std::runtime_error("quotient_poincare: odd pair count");
        half.emplace(k + 1, c / 2);
    }
    const TPoly numerator = tp_add(tree_count_poly(n), tp_scale(half, -1));
    const TPoly via_counts = tp_divide_exact(numerator, TPoly{{0, 1}, {1, 1}});

    if (via_invariants != via_counts)
        throw std::runtime_error("quotient_poincare: invariant route and counting route disagree");
    return via_invariants;
}

namespace {

const SymFunc& cusp_recursive(int n) {
    static std::mutex mu;
    static std::map<int, SymFunc> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    SymFunc f = total_char(P_poly(n));
    f -= h_gen(static_cast<unsigned>(n));
    for (int i = 4; i < n; ++i) f -= h_gen(static_cast<unsigned>(n - i)) * cusp_recursive(i);
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(f)).first->second;
}

SymFunc cusp_signed_sum(int n) {
    SymFunc acc;
    // increasing sequences 4 <= x_1 < ... < x_r = n
    std::vector<int> seq;
    auto rec = [&](auto&& self, int last) -> void {
        if (last == n) {
            const int sign = (seq.size() % 2 == 1) ? 1 : -1;  // (-1)^(r-1)
            SymFunc steps = SymFunc::one();
            for (std::size_t i = 1; i < seq.size(); ++i)
                steps = steps * h_gen(static_cast<unsigned>(seq[i] - seq[i - 1]));
            const SymFunc u = h_gen(static_cast<unsigned>(seq[0])) * steps;
            const SymFunc m = total_char(P_poly(seq[0])) * steps;
            acc += (m - u).scaled(sign);
            return;
        }
        for (int next = last + 1; next <= n; ++next) {
            seq.push_back(next);
            self(self, next);
            seq.pop_back();
        }
    };
    for (int x1 = 4; x1 <= n; ++x1) {
        seq.assign(1, x1);
        rec(rec, x1);
    }
    return acc;
}

const std::pair<SchurExpansion, SchurExpansion>& cusp_checked(int n) {
    if (n < 4) throw std::invalid_argument("cuspidal block: n >= 4 required");
    static std::mutex mu;
    static std::map<int, std::pair<SchurExpansion, SchurExpansion>> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    auto pair = std::make_pair(to_schur(cusp_recursive(n)), to_schur(cusp_signed_sum(n)));
    if (!(pair.first == pair.second))
        throw std::runtime_error("cuspidal block: recursion and signed sum disagree");
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(pair)).first->second;
}

}  // namespace

SchurExpansion cuspidal_char(int n) { return cusp_checked(n).first; }

SchurExpansion cuspidal_closed(int n) { return cusp_checked(n).second; }

CharPoly char_poly_for(const SpaceId& id) {
    id.validate();
    switch (id.kind) {
        case SpaceKind::M0n: return P_poly(id.n);
        case SpaceKind::M0nPlusOne: return Q_poly(id.n);
        case SpaceKind::Delta0:
        case SpaceKind::StableMaps: {
            if (auto cached = load_cached(id)) return *cached;
            const CharPoly p = id.kind == SpaceKind::Delta0
                                   ? delta0_poly(id.n, *id.m)
                                   : stable_maps_poly(id.n, *id.m);
            store_cached(id, p);
            return p;
        }
    }
    throw std::logic_error("char_poly_for: bad kind");
}

}  // namespace equichar
