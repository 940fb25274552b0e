#include "equichar/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace equichar {

namespace {

std::strong_ordering cmp(const WeightedRootedTree& a, const WeightedRootedTree& b) {
    if (auto c = a.inputs_total() <=> b.inputs_total(); c != 0) return c;
    if (auto c = a.weight_total() <=> b.weight_total(); c != 0) return c;
    if (auto c = a.root_weight() <=> b.root_weight(); c != 0) return c;
    if (auto c = a.input_count() <=> b.input_count(); c != 0) return c;
    const auto& ca = a.children();
    const auto& cb = b.children();
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
        if (auto c = cmp(ca[i], cb[i]); c != 0) return c;
    return ca.size() <=> cb.size();
}

}  // namespace

bool operator==(const WeightedRootedTree& a, const WeightedRootedTree& b) {
    return cmp(a, b) == 0;
}

std::strong_ordering operator<=>(const WeightedRootedTree& a, const WeightedRootedTree& b) {
    return cmp(a, b);
}

WeightedRootedTree::WeightedRootedTree(unsigned root_weight, unsigned input_count,
                                       std::vector<WeightedRootedTree> children)
    : root_weight_(root_weight), input_count_(input_count), children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    inputs_total_ = input_count_;
    weight_total_ = root_weight_;
    for (const auto& c : children_) {
        if (!c.usable_as_child())
            throw std::invalid_argument("WeightedRootedTree: child root weight must be >= 1");
        inputs_total_ += c.inputs_total();
        weight_total_ += c.weight_total();
    }
    const unsigned m = static_cast<unsigned>(children_.size()) + input_count_;
    if (m < 2) throw std::invalid_argument("WeightedRootedTree: root valency below 3");
    if (root_weight_ > m - 2)
        throw std::invalid_argument("WeightedRootedTree: root weight exceeds valency - 3");
}

namespace {

using TreeList = std::vector<WeightedRootedTree>;

std::mutex g_enum_mutex;
std::map<std::pair<unsigned, unsigned>, TreeList> g_component_memo;
std::map<std::pair<unsigned, unsigned>, TreeList> g_full_memo;

const TreeList& component_trees_impl(unsigned n, unsigned k);

// All classes with n inputs, weight k and minimal root weight min_a.
// Children are drawn from the component lists of strictly smaller cells;
// a weakly decreasing child sequence in canonical order avoids duplicates.
TreeList enumerate_cell(unsigned n, unsigned k, unsigned min_a) {
    TreeList out;
    std::vector<WeightedRootedTree> acc;
    acc.reserve(n / 3 + 1);  // each child takes >= 3 inputs; keeps back-pointers stable
    auto emit = [&]() {
        unsigned child_inputs = 0, child_weight = 0;
        for (const auto& c : acc) {
            child_inputs += c.inputs_total();
            child_weight += c.weight_total();
        }
        if (child_inputs > n || child_weight > k) return;
        const unsigned r = n - child_inputs;
        const unsigned a = k - child_weight;
        const unsigned m = static_cast<unsigned>(acc.size()) + r;
        if (m < 2 || a + 2 > m) return;
        if (a < min_a) return;
        out.emplace_back(a, r, acc);
    };
    auto rec = [&](auto&& self, unsigned rem_n, unsigned rem_k,
                   const WeightedRootedTree* max_child) -> void {
        emit();
        for (unsigned cn = 3; cn <= rem_n; ++cn) {
            for (unsigned ck = 1; ck <= rem_k; ++ck) {
                if (acc.empty() && cn == n && ck == k)
                    continue;  // lone child consuming everything: root valency 2
                for (const auto& child : component_trees_impl(cn, ck)) {
                    if (max_child && child > *max_child) continue;
                    acc.push_back(child);
                    self(self, rem_n - cn, rem_k - ck, &acc.back());
                    acc.pop_back();
                }
            }
        }
    };
    rec(rec, n, k, nullptr);
    std::sort(out.begin(), out.end());
    return out;
}

const TreeList& component_trees_impl(unsigned n, unsigned k) {
    const auto key = std::make_pair(n, k);
    {
        std::lock_guard lock(g_enum_mutex);
        if (auto it = g_component_memo.find(key); it != g_component_memo.end())
            return it->second;
    }
    TreeList list = (n >= 3 && k >= 1) ? enumerate_cell(n, k, 1) : TreeList{};
    std::lock_guard lock(g_enum_mutex);
    return g_component_memo.emplace(key, std::move(list)).first->second;
}

}  // namespace

const std::vector<WeightedRootedTree>& enumerate_component_trees(unsigned n, unsigned k) {
    return component_trees_impl(n, k);
}

const std::vector<WeightedRootedTree>& enumerate_trees(unsigned n, unsigned k) {
    const auto key = std::make_pair(n, k);
    {
        std::lock_guard lock(g_enum_mutex);
        if (auto it = g_full_memo.find(key); it != g_full_memo.end()) return it->second;
    }
    TreeList list = (n >= 2) ? enumerate_cell(n, k, 0) : TreeList{};
    std::lock_guard lock(g_enum_mutex);
    return g_full_memo.emplace(key, std::move(list)).first->second;
}

std::size_t count_trees(unsigned n, unsigned k) { return enumerate_trees(n, k).size(); }

const SymFunc& char_U_T(const WeightedRootedTree& t) {
    static std::mutex mu;
    static std::map<WeightedRootedTree, SymFunc> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(t); it != memo.end()) return it->second;
    }
    SymFunc f = t.input_count() > 0 ? h_gen(t.input_count()) : SymFunc::one();
    const auto& children = t.children();
    std::size_t i = 0;
    while (i < children.size()) {
        std::size_t j = i;
        while (j < children.size() && children[j] == children[i]) ++j;
        f = f * plethysm(h_gen(static_cast<unsigned>(j - i)), char_U_T(children[i]));
        i = j;
    }
    std::lock_guard lock(mu);
    return memo.emplace(t, std::move(f)).first->second;
}

namespace {

WeightedRootedTree dual_below(const WeightedRootedTree& t) {
    std::vector<WeightedRootedTree> children;
    children.reserve(t.children().size());
    for (const auto& c : t.children()) children.push_back(dual_below(c));
    const unsigned val = t.root_valency();  // parent edge counted like the output
    return WeightedRootedTree(val - 2 - t.root_weight(), t.input_count(), std::move(children));
}

}  // namespace

WeightedRootedTree duality_involution(const WeightedRootedTree& t) {
    std::vector<WeightedRootedTree> children;
    children.reserve(t.children().size());
    for (const auto& c : t.children()) children.push_back(dual_below(c));
    return WeightedRootedTree(t.root_valency() - 3 - t.root_weight(), t.input_count(),
                              std::move(children));
}

SymFunc cell_square_diagonal(unsigned n, unsigned k) {
    SymFunc acc;
    for (const auto& t : enumerate_trees(n, k)) {
        const SymFunc& u = char_U_T(t);
        acc += u * u;
    }
    return acc;
}

SymFunc cell_antisym_diagonal(unsigned n, unsigned k) {
    SymFunc acc;
    for (const auto& t : enumerate_trees(n, k)) acc += plethysm(e_gen(2), char_U_T(t));
    return acc;
}

SymFunc cell_sym_diagonal(unsigned n, unsigned k) {
    SymFunc acc;
    for (const auto& t : enumerate_trees(n, k)) acc += plethysm(h_gen(2), char_U_T(t));
    return acc;
}

namespace {

nlohmann::ordered_json tree_json(const WeightedRootedTree& t) {
    nlohmann::ordered_json j;
    j["a"] = t.root_weight();
    j["r"] = t.input_count();
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : t.children()) j["children"].push_back(tree_json(c));
    return j;
}

WeightedRootedTree tree_unjson(const nlohmann::json& j) {
    std::vector<WeightedRootedTree> children;
    for (const auto& c : j.at("children")) children.push_back(tree_unjson(c));
    return WeightedRootedTree(j.at("a").get<unsigned>(), j.at("r").get<unsigned>(),
                              std::move(children));
}

}  // namespace

std::string tree_to_json(const WeightedRootedTree& t) { return tree_json(t).dump(); }

WeightedRootedTree tree_from_json(const std::string& text) {
    return tree_unjson(nlohmann::json::parse(text));
}

}  // namespace equichar
