#include "equichar/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace equichar {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition Partition::disjoint_union(const Partition& other) const {
    std::vector<unsigned> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

Partition Partition::scaled(unsigned factor) const {
    if (factor == 0) throw std::invalid_argument("Partition::scaled: zero factor");
    std::vector<unsigned> parts = parts_;
    for (auto& p : parts) p *= factor;
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

const std::vector<Partition>& partitions_of(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Partition>> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // largest part first, so the list comes out in canonical descending order
    auto rec = [&](auto&& self, unsigned rem, unsigned max_part) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(out)).first->second;
}

Int z_factor(const Partition& lambda) {
    Int z = 1;
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t mult = j - i;
        for (std::size_t r = 0; r < mult; ++r) z *= parts[i];
        z *= factorial(static_cast<unsigned>(mult));
        i = j;
    }
    return z;
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace {

// chi^lambda on the class whose parts are mu[pos..]; strips are removed
// for the largest remaining cycle first.
Int mn_recurse(const Partition& lambda, const std::vector<unsigned>& mu, std::size_t pos,
               std::map<std::pair<Partition, std::size_t>, Int>& memo) {
    if (pos == mu.size()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const unsigned strip = mu[pos];
    const auto& lp = lambda.parts();
    const std::size_t rows = lp.size();
    Int total = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i; j < rows; ++j) {
            // remove a border strip spanning rows i..j
            std::vector<unsigned> next(lp.begin(), lp.end());
            bool ok = true;
            long long removed = 0;
            for (std::size_t r = i; r < j; ++r) {
                if (lp[r + 1] == 0) { ok = false; break; }
                next[r] = lp[r + 1] - 1;
            }
            if (!ok) continue;
            const long long tail = static_cast<long long>(lp[i]) - static_cast<long long>(strip) +
                                   static_cast<long long>(j - i);
            if (tail < 0) continue;
            next[j] = static_cast<unsigned>(tail);
            if (j + 1 < rows && next[j] < lp[j + 1]) continue;
            for (std::size_t r = 0; r + 1 < rows; ++r)
                if (next[r] < next[r + 1]) { ok = false; break; }
            if (!ok) continue;
            for (std::size_t r = 0; r < rows; ++r)
                removed += static_cast<long long>(lp[r]) - static_cast<long long>(next[r]);
            if (removed != static_cast<long long>(strip)) continue;

            std::vector<unsigned> trimmed;
            for (unsigned v : next)
                if (v > 0) trimmed.push_back(v);
            const int sign = ((j - i) % 2 == 0) ? 1 : -1;
            total += sign * mn_recurse(Partition(std::move(trimmed)), mu, pos + 1, memo);
        }
    }
    memo.emplace(key, total);
    return total;
}

struct CharacterTable {
    // values[l][m] = chi^{lambda_l}(mu_m) with both indices in the
    // canonical order of partitions_of(n)
    std::vector<std::vector<Int>> values;
    std::map<Partition, std::size_t> index;
};

const CharacterTable& character_table(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, CharacterTable> tables;
    {
        std::lock_guard lock(mu);
        if (auto it = tables.find(n); it != tables.end()) return it->second;
    }
    const auto& parts = partitions_of(n);
    CharacterTable table;
    table.values.resize(parts.size());
    std::map<std::pair<Partition, std::size_t>, Int> memo;
    for (std::size_t l = 0; l < parts.size(); ++l) {
        table.index.emplace(parts[l], l);
        table.values[l].reserve(parts.size());
        for (const auto& m : parts) {
            memo.clear();
            table.values[l].push_back(mn_recurse(parts[l], m.parts(), 0, memo));
        }
    }
    std::lock_guard lock(mu);
    return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    const auto& table = character_table(lambda.sum());
    return table.values[table.index.at(lambda)][table.index.at(mu)];
}

Partition square_class(const Partition& mu) {
    std::vector<unsigned> out;
    out.reserve(mu.length() * 2);
    for (unsigned l : mu.parts()) {
        if (l % 2 == 1) {
            out.push_back(l);
        } else {
            out.push_back(l / 2);
            out.push_back(l / 2);
        }
    }
    return Partition::from_unsorted(std::move(out));
}

}  // namespace equichar
