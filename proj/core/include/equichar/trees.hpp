#pragma once

#include <compare>
#include <vector>

#include "equichar/symfunc.hpp"

namespace equichar {

/// An isomorphism class of weighted rooted trees, up to permutation of the
/// inputs. A vertex with r own inputs and N children has valency N + r + 1,
/// counting the output leg (at the root) or the parent edge (elsewhere).
/// Admissibility:
///   root:        N + r >= 2 and 0 <= weight <= N + r - 2,
///   other vertex: N + r >= 3 and 1 <= weight <= N + r - 2.
/// Since a positive weight already forces N + r >= 3, a class is usable as
/// a child exactly when its root weight is >= 1.
///
/// Children are kept sorted by the canonical order (total inputs, total
/// weight, root weight, input count, children lexicographically), so
/// structural equality of values is equality of classes.
class WeightedRootedTree {
public:
    /// Canonicalizes (sorts children) and validates admissibility: the root
    /// constraints for this vertex, child constraints below.
    WeightedRootedTree(unsigned root_weight, unsigned input_count,
                       std::vector<WeightedRootedTree> children = {});

    unsigned root_weight() const { return root_weight_; }
    unsigned input_count() const { return input_count_; }
    const std::vector<WeightedRootedTree>& children() const { return children_; }

    /// n(T): inputs of the whole tree.
    unsigned inputs_total() const { return inputs_total_; }
    /// w(T): total weight of the whole tree.
    unsigned weight_total() const { return weight_total_; }
    /// Valency of the root, output leg included.
    unsigned root_valency() const {
        return static_cast<unsigned>(children_.size()) + input_count_ + 1;
    }
    bool usable_as_child() const { return root_weight_ >= 1; }

    friend bool operator==(const WeightedRootedTree& a, const WeightedRootedTree& b);
    friend std::strong_ordering operator<=>(const WeightedRootedTree& a,
                                            const WeightedRootedTree& b);

private:
    unsigned root_weight_;
    unsigned input_count_;
    unsigned inputs_total_;
    unsigned weight_total_;
    std::vector<WeightedRootedTree> children_;
};

/// All classes with n inputs and total weight k whose root satisfies the
/// child constraints (root weight >= 1); these are the trees that may be
/// attached as subtrees. Memoized; empty for infeasible inputs.
const std::vector<WeightedRootedTree>& enumerate_component_trees(unsigned n, unsigned k);

/// All root-admissible classes with n inputs and total weight k.
const std::vector<WeightedRootedTree>& enumerate_trees(unsigned n, unsigned k);

/// b_{n,k}: number of classes with n inputs and weight k.
std::size_t count_trees(unsigned n, unsigned k);

/// Character of the permutation representation induced from the stabilizer
/// of the class: for a root with r inputs and distinct child classes S_j of
/// multiplicity m_j,
///     ch(U_T) = h_r * prod_j h_{m_j} o ch(U_{S_j}),
/// independent of all weights. Memoized by class.
const SymFunc& char_U_T(const WeightedRootedTree& t);

/// The weight flip realizing Poincare duality on classes: the root weight
/// w goes to val(root)-3-w, every other weight w to val(v)-2-w. An
/// involution from weight k onto weight n-2-k.
WeightedRootedTree duality_involution(const WeightedRootedTree& t);

/// sum over classes T in cell (n,k) of ch(U_T)^2.
SymFunc cell_square_diagonal(unsigned n, unsigned k);
/// sum over classes T in cell (n,k) of e_2 o ch(U_T).
SymFunc cell_antisym_diagonal(unsigned n, unsigned k);
/// sum over classes T in cell (n,k) of h_2 o ch(U_T).
SymFunc cell_sym_diagonal(unsigned n, unsigned k);

/// Nested JSON form {"a":int,"r":int,"children":[...]}.
std::string tree_to_json(const WeightedRootedTree& t);
WeightedRootedTree tree_from_json(const std::string& text);

}  // namespace equichar
