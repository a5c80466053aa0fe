#include "doctest.h"
#include "hocat/braid.hpp"

using namespace hocat;

namespace {

BraidWord w(int n, std::initializer_list<int> gens) {
    BraidWord b{n, {}};
    for (int g : gens) b.letters.push_back({g > 0 ? g : -g, g > 0 ? +1 : -1});
    return b;
}

} // namespace

TEST_CASE("underlying permutation is multiplicative") {
    CHECK(underlying_permutation(w(2, {1})) == Perm::transposition(2, 1));
    // s1 s2 s1 reverses three strands
    CHECK(underlying_permutation(w(3, {1, 2, 1})) == Perm::reversal(3));
    CHECK(underlying_permutation(w(3, {})).is_identity());
    auto u = w(4, {1, 3});
    auto v = w(4, {2, 1});
    CHECK(underlying_permutation(u * v) ==
          underlying_permutation(u) * underlying_permutation(v));
}

TEST_CASE("braid relations hold under both deciders") {
    CHECK(positive_equal_bfs(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
    CHECK(positive_equal_bfs(w(4, {1, 3}), w(4, {3, 1})));
    CHECK(!positive_equal_bfs(w(2, {1, 1}), w(2, {1})));
    CHECK(garside_nf(w(3, {1, 2, 1})) == garside_nf(w(3, {2, 1, 2})));
    CHECK(garside_nf(w(4, {1, 3})) == garside_nf(w(4, {3, 1})));
    CHECK(!(garside_nf(w(2, {1, 1})) == garside_nf(w(2, {1}))));
    CHECK(braid_equal(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
}

TEST_CASE("garside handles inverses") {
    auto u = w(3, {1, -1});
    CHECK(garside_nf(u) == garside_nf(w(3, {})));
    auto v = w(3, {1, 2, -2, -1});
    CHECK(braid_equal(v, w(3, {})));
    auto conj = w(3, {1, 2, -1});
    CHECK(!braid_equal(conj, w(3, {2})));
    CHECK(braid_equal(conj * conj.inverse(), w(3, {})));
    // far commutation with inverses
    CHECK(braid_equal(w(4, {1, -3}), w(4, {-3, 1})));
}

TEST_CASE("garside normal form is idempotent") {
    auto words = {w(3, {1, 2, 1, 1}), w(4, {1, 3, 2, -1}), w(3, {-1, -2}),
                  w(4, {2, 2, 2})};
    for (const auto& b : words) {
        auto nf = garside_nf(b);
        // rebuild a word from the normal form and renormalize
        BraidWord rb{b.strands, {}};
        BraidWord delta = permutation_braid(Perm::reversal(b.strands));
        for (int i = 0; i < nf.inf; ++i) rb = rb * delta;
        if (nf.inf < 0) {
            BraidWord del_inv = delta.inverse();
            for (int i = 0; i < -nf.inf; ++i) rb = rb * del_inv;
        }
        for (const auto& fct : nf.factors) rb = rb * permutation_braid(fct);
        CHECK(garside_nf(rb) == nf);
    }
}

TEST_CASE("exhaustive agreement of garside with the BFS oracle") {
    // all pairs of positive words of length <= 4 on 3 strands (kept small
    // here; the acceptance suite runs the full <=6 on <=4 strands)
    std::vector<BraidWord> words;
    std::vector<std::vector<int>> cur{{}};
    for (int len = 0; len <= 4; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& ws : cur) {
            BraidWord b{3, {}};
            for (int g : ws) b.letters.push_back({g, +1});
            words.push_back(b);
            for (int g = 1; g < 3; ++g) {
                auto ws2 = ws;
                ws2.push_back(g);
                next.push_back(ws2);
            }
        }
        cur = next;
    }
    int agree = 0;
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.length() != v.length()) continue;
            bool bfs = positive_equal_bfs(u, v);
            bool gar = garside_nf(u) == garside_nf(v);
            REQUIRE(bfs == gar);
            agree += bfs;
        }
    CHECK(agree > 0);
}

TEST_CASE("block sum shifts indices") {
    auto s = block_sum({w(2, {1}), w(2, {1})});
    CHECK(s.strands == 4);
    REQUIRE(s.letters.size() == 2);
    CHECK(s.letters[0].index == 1);
    CHECK(s.letters[1].index == 3);
    auto t = block_sum({w(1, {}), w(2, {1})});
    CHECK(t.strands == 3);
    REQUIRE(t.letters.size() == 1);
    CHECK(t.letters[0].index == 2);
}

TEST_CASE("block sum commutes with the projection") {
    auto u = w(3, {1, 2});
    auto v = w(2, {1});
    CHECK(underlying_permutation(block_sum({u, v})) ==
          underlying_permutation(u).block_sum(underlying_permutation(v)));
}

TEST_CASE("strand deletion") {
    // deleting strand 3 of s1 s2 keeps the s1 crossing only
    auto b = w(3, {1, 2});
    auto d = delete_strands(b, {3});
    CHECK(d.strands == 2);
    // strand 3 enters crossing 2: the s2 crossing involves strands at
    // positions 2,3 = original strands 2 and 3 after s1 swapped 1,2 -> the
    // s2 letter crosses original strands 1 and 3.  Deleting 3 drops it.
    REQUIRE(d.letters.size() == 1);
    CHECK(d.letters[0].index == 1);
    // deleting everything but one strand kills all letters
    CHECK(delete_strands(b, {1, 2}).length() == 0);
}

TEST_CASE("cabling respects permutations") {
    auto b = w(2, {1});
    auto c = cable(b, {2, 1});
    CHECK(c.strands == 3);
    CHECK(underlying_permutation(c) == Perm::block_perm(Perm({2, 1}), {2, 1}));
    auto c2 = cable(w(2, {1, 1}), {2, 2});
    CHECK(c2.strands == 4);
    CHECK(underlying_permutation(c2).is_identity() ==
          underlying_permutation(w(2, {1, 1})).is_identity());
}

TEST_CASE("text round trip") {
    auto b = w(3, {1, -2});
    CHECK(b.str() == "s1 s2^-1");
    auto p = BraidWord::parse(3, "s1 s2^-1");
    REQUIRE(p.has_value());
    CHECK(braid_equal(*p, b));
    CHECK(!BraidWord::parse(3, "s9").has_value());
}

TEST_CASE("braid_equal is a sampled congruence") {
    auto u = w(3, {1, 2, 1});
    auto v = w(3, {2, 1, 2});
    auto x = w(3, {2, -1});
    CHECK(braid_equal(u * x, v * x));
    CHECK(braid_equal(x * u, x * v));
}
