#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hocat/fincat.hpp"
#include "hocat/perm.hpp"

namespace hocat {

// A collection: one finite category of generators per arity.
struct Collection {
    // arity -> generator category (may be absent for most arities)
    std::vector<FinCat> gens;  // indexed by arity; empty FinCat if none
    int max_arity() const { return static_cast<int>(gens.size()) - 1; }
    bool has(int arity) const {
        return arity >= 0 && arity <= max_arity() && gens[arity].n_objects() > 0;
    }
};

// An element of the free operad on a collection: a planar tree whose
// internal nodes carry collection generators and whose leaves are numbered
// by a permutation.  The bare leaf is the operad unit.
struct FreeTree {
    struct Node {
        bool leaf = true;
        int gen = 0;          // leaf label (>=1)
        int arity = 0;        // internal: generator arity
        int obj = -1;         // internal: object index in collection.gens[arity]
        std::vector<Node> child;
        std::strong_ordering operator<=>(const Node&) const = default;
        bool operator==(const Node&) const = default;
    };
    Node root;

    int arity() const;
    Perm leaf_perm() const;
    std::strong_ordering operator<=>(const FreeTree&) const = default;
    bool operator==(const FreeTree&) const = default;
    static FreeTree unit_leaf(int g = 1) { return {Node{true, g, 0, -1, {}}}; }
    std::string str(const Collection& K) const;
};

// Morphism of free-operad elements: same shape and leaf labels, a
// collection morphism per internal node (preorder).
struct FreeTreeMor {
    FreeTree src, dst;
    std::vector<int> node_mor;  // morphism indices in collection.gens[arity]
    std::strong_ordering operator<=>(const FreeTreeMor&) const = default;
    bool operator==(const FreeTreeMor&) const = default;
};

FreeTree tree_substitute(const FreeTree& a, const std::vector<FreeTree>& bs);
FreeTree tree_act(const FreeTree& a, const Perm& s);

// Shapes must agree node for node; composes the node morphisms.
FreeTreeMor tree_mor_compose(const Collection& K, const FreeTreeMor& g,
                             const FreeTreeMor& f);
FreeTreeMor tree_mor_identity(const FreeTree& t);
bool tree_mor_valid(const Collection& K, const FreeTreeMor& m);

// All trees of the given arity with at most `max_nodes` internal nodes.
std::vector<FreeTree> enumerate_trees(const Collection& K, int arity, int max_nodes);

// All morphisms a -> b (empty unless shapes and leaf labels agree).
std::vector<FreeTreeMor> tree_homset(const Collection& K, const FreeTree& a,
                                     const FreeTree& b);

} // namespace hocat
