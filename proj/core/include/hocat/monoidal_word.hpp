#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hocat/perm.hpp"

namespace hocat {

// A word of M_k(m): each generator 1..m occurs once, combined by the
// strictly associative operations b1..bk with common unit 0.  Stored as a
// reduced planar tree: leaves carry generators, internal nodes carry an
// operation index, have >= 2 children and never a child with the same
// operation.  The nullary word (m = 0) is a lone unit leaf.
struct MonoidalWord {
    struct Node {
        int op = 0;               // 0 for leaves
        int gen = 0;              // generator label; 0 only for the nullary word
        std::vector<Node> child;  // empty for leaves

        bool leaf() const { return child.empty(); }
        std::strong_ordering operator<=>(const Node&) const = default;
        bool operator==(const Node&) const = default;
    };

    Node root;

    int arity() const;
    bool is_nullary() const { return root.leaf() && root.gen == 0; }
    Perm leaf_perm() const;   // position |-> generator
    std::strong_ordering operator<=>(const MonoidalWord&) const = default;
    bool operator==(const MonoidalWord&) const = default;

    static MonoidalWord unit();                     // single generator 1
    static MonoidalWord nullary();                  // the unit word 0
    static MonoidalWord generator_leaf(int g);

    std::string str() const;                        // "(1 b2 3) b1 2"
    static std::optional<MonoidalWord> parse(const std::string& text);
};

// Operad composition: relabel the generators of bs[i-1] by the offset of
// the i-th block, substitute into the leaf labelled i, reduce.
MonoidalWord word_substitute(const MonoidalWord& a, const std::vector<MonoidalWord>& bs);

// Right action: leaf at position p takes the old generator at position s(p).
MonoidalWord word_act(const MonoidalWord& a, const Perm& s);

// gamma n S: generators outside S become the unit, the word reduces, and
// the survivors are relabelled order-preservingly to 1..|S|.
MonoidalWord word_restrict(const MonoidalWord& w, const std::vector<int>& S);

// Poset criterion for a morphism a -> b in M_k: every two-element restriction
// keeps its order with an operation of index >= i, or swaps with index > i.
bool word_leq(const MonoidalWord& a, const MonoidalWord& b, int k);

// All words of M_k(m).
std::vector<MonoidalWord> enumerate_words(int k, int m);

} // namespace hocat
