#include "doctest.h"
#include "hocat/free_tree.hpp"
#include "hocat/monoidal_word.hpp"

using namespace hocat;

namespace {

MonoidalWord W(const std::string& s) {
    auto w = MonoidalWord::parse(s);
    REQUIRE(w.has_value());
    return *w;
}

} // namespace

TEST_CASE("parsing and printing") {
    CHECK(W("1 b1 2").str() == "1 b1 2");
    CHECK(W("(1 b2 3) b1 (2 b2 4)").str() == "(1 b2 3) b1 (2 b2 4)");
    CHECK(W("1").arity() == 1);
    CHECK(W("(1 b1 2) b1 3") == W("1 b1 2 b1 3"));  // associativity folded
    CHECK(MonoidalWord::nullary().arity() == 0);
}

TEST_CASE("leaf permutation reads positions") {
    CHECK(W("2 b1 1").leaf_perm() == Perm({2, 1}));
    CHECK(W("(1 b2 3) b1 (2 b2 4)").leaf_perm() == Perm({1, 3, 2, 4}));
}

TEST_CASE("substitution follows the relabeling rule") {
    // (1 b1 2) * ((1 b2 2) + (1)) = (1 b2 2) b1 3
    auto r = word_substitute(W("1 b1 2"), {W("1 b2 2"), W("1")});
    CHECK(r == W("(1 b2 2) b1 3"));
    // unit laws
    auto a = W("(1 b2 3) b1 (2 b2 4)");
    CHECK(word_substitute(a, {W("1"), W("1"), W("1"), W("1")}) == a);
    CHECK(word_substitute(W("1"), {a}) == a);
    // nullary absorbs
    auto z = word_substitute(W("1 b1 2"), {MonoidalWord::nullary(), W("1")});
    CHECK(z == W("1"));
}

TEST_CASE("action relabels generators") {
    CHECK(word_act(W("1 b1 2"), Perm({2, 1})) == W("2 b1 1"));
    auto a = W("2 b1 1 b1 3");
    CHECK(word_act(a, Perm(3)) == a);
    // lambda(a . s) = s^{-1} o lambda(a); the shape is unchanged
    Perm s({3, 1, 2});
    CHECK(word_act(a, s).leaf_perm() == s.inverse() * a.leaf_perm());
    // right action law
    Perm t({2, 1, 3});
    CHECK(word_act(word_act(a, s), t) == word_act(a, s * t));
}

TEST_CASE("restriction reduces and relabels") {
    CHECK(word_restrict(W("(1 b2 3) b1 (2 b2 4)"), {1, 2}) == W("1 b1 2"));
    auto g = W("(1 b2 3) b1 (2 b2 4)");
    CHECK(word_restrict(g, {1, 2, 3, 4}) == g);
    CHECK(word_restrict(W("1 b1 2 b1 3"), {2}) == W("1"));
    CHECK(word_restrict(g, {3}) == W("1"));
    CHECK(word_restrict(g, {1, 3}) == W("1 b2 2"));
}

TEST_CASE("restriction is functorial on sampled words") {
    auto g = W("(1 b2 3) b1 (2 b2 4)");
    // (g n {1,2,4}) n {1,2} relabeled = g n {1,2}
    auto once = word_restrict(g, {1, 2, 4});
    auto twice = word_restrict(once, {1, 2});
    CHECK(twice == word_restrict(g, {1, 2}));
}

TEST_CASE("poset criterion") {
    // 1 b1 2 -> 2 b2 1 (swap with j=2 > i=1)
    CHECK(word_leq(W("1 b1 2"), W("2 b2 1"), 2));
    // 1 b2 2 -> 2 b1 1 needs j > 2
    CHECK(!word_leq(W("1 b2 2"), W("2 b1 1"), 2));
    CHECK(word_leq(W("1 b1 2"), W("1 b2 2"), 2));
    CHECK(!word_leq(W("1 b2 2"), W("1 b1 2"), 2));
    CHECK(word_leq(W("1 b1 2"), W("1 b1 2"), 2));
    // antisymmetry on M_2(2)
    for (const auto& a : enumerate_words(2, 2))
        for (const auto& b : enumerate_words(2, 2))
            if (word_leq(a, b, 2) && word_leq(b, a, 2)) CHECK(a == b);
}

TEST_CASE("word counts") {
    CHECK(enumerate_words(1, 3).size() == 6);   // 3! flat words
    CHECK(enumerate_words(1, 4).size() == 24);
    CHECK(enumerate_words(2, 2).size() == 4);
    CHECK(enumerate_words(2, 1).size() == 1);
    CHECK(enumerate_words(2, 0).size() == 1);
    // M_2(2) has 4 non-identity arrows
    int arrows = 0;
    for (const auto& a : enumerate_words(2, 2))
        for (const auto& b : enumerate_words(2, 2))
            if (!(a == b) && word_leq(a, b, 2)) ++arrows;
    CHECK(arrows == 4);
}

TEST_CASE("orbit structure of M_2(2)") {
    auto words = enumerate_words(2, 2);
    // two orbits of size two under the free action
    std::vector<MonoidalWord> reps;
    for (const auto& w : words) {
        auto rep = word_act(w, w.leaf_perm().inverse());
        CHECK(rep.leaf_perm().is_identity());
        if (std::find(reps.begin(), reps.end(), rep) == reps.end()) reps.push_back(rep);
    }
    CHECK(reps.size() == 2);
}

// --- free trees ---

namespace {

Collection one_binary() {
    Collection K;
    K.gens.resize(3);
    K.gens[2].add_object("g");
    K.gens[2].close_identities();
    return K;
}

} // namespace

TEST_CASE("free trees on one binary generator") {
    Collection K = one_binary();
    auto a2 = enumerate_trees(K, 2, 4);
    CHECK(a2.size() == 2);  // two leaf labelings
    auto a3 = enumerate_trees(K, 3, 4);
    CHECK(a3.size() == 12);  // 2 shapes x 3! labelings
    auto a1 = enumerate_trees(K, 1, 4);
    CHECK(a1.size() == 1);  // the bare leaf
}

TEST_CASE("tree substitution and action") {
    Collection K = one_binary();
    auto ts = enumerate_trees(K, 2, 4);
    FreeTree g = ts[0].leaf_perm().is_identity() ? ts[0] : ts[1];
    FreeTree big = tree_substitute(g, {g, FreeTree::unit_leaf()});
    CHECK(big.arity() == 3);
    CHECK(tree_act(big, Perm(3)) == big);
    Perm s({3, 1, 2});
    CHECK(tree_act(big, s).leaf_perm() == s.inverse() * big.leaf_perm());
    Perm t({2, 1, 3});
    CHECK(tree_act(tree_act(big, s), t) == tree_act(big, s * t));
    // substitution into the unit leaf is the identity
    CHECK(tree_substitute(FreeTree::unit_leaf(), {big}) == big);
}

TEST_CASE("tree homsets on a collection with arrows") {
    Collection K;
    K.gens.resize(3);
    K.gens[2].add_object("g");
    K.gens[2].add_object("h");
    K.gens[2].add_morphism("u", 0, 1);
    K.gens[2].close_identities();
    auto trees = enumerate_trees(K, 2, 2);
    CHECK(trees.size() == 4);  // 2 objects x 2 labelings
    // hom between same-labeling different-object trees is the u component
    FreeTree tg, th;
    bool found_g = false, found_h = false;
    for (const auto& t : trees) {
        if (!t.leaf_perm().is_identity()) continue;
        if (t.root.obj == 0) { tg = t; found_g = true; }
        if (t.root.obj == 1) { th = t; found_h = true; }
    }
    REQUIRE(found_g);
    REQUIRE(found_h);
    CHECK(tree_homset(K, tg, th).size() == 1);
    CHECK(tree_homset(K, th, tg).empty());
    CHECK(tree_homset(K, tg, tg).size() == 1);
    auto m = tree_homset(K, tg, th)[0];
    CHECK(tree_mor_valid(K, m));
}
