#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocat/perm.hpp"

namespace hocat {

// A braid group/monoid element as a word in the Artin generators.
// Letters are (index, sign); concatenation uv means "v acts first", so the
// projection to the symmetric group is letterwise left-to-right composition:
// p(l1 l2 ... lt) = t1 o t2 o ... o tt.
struct BraidWord {
    struct Letter {
        int index;  // 1..n-1
        int sign;   // +1 or -1
    };
    int strands = 1;
    std::vector<Letter> letters;

    bool positive() const;
    int length() const { return static_cast<int>(letters.size()); }
    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& rhs) const;  // this after rhs
    static BraidWord identity(int n) { return {n, {}}; }
    static BraidWord generator(int n, int i, int sign = +1);

    std::string str() const;                       // "s1 s2 s1^-1"
    static std::optional<BraidWord> parse(int strands, const std::string& text);
};

Perm underlying_permutation(const BraidWord& w);

// Operadic direct sum: indices of the j-th word shifted by the strand
// counts of the previous ones.
BraidWord block_sum(const std::vector<BraidWord>& ws);

// Garside left-greedy normal form w.r.t. the half twist: delta^inf . A1...Al
// with each Ai a permutation braid and each adjacent pair left-weighted.
struct GarsideNF {
    int strands = 1;
    int inf = 0;                 // exponent of the half twist
    std::vector<Perm> factors;   // canonical factors, none trivial, none delta
    bool operator==(const GarsideNF& o) const {
        return strands == o.strands && inf == o.inf && factors == o.factors;
    }
};

GarsideNF garside_nf(const BraidWord& w);

// The positive word of the permutation braid of p (a reduced word).
BraidWord permutation_braid(const Perm& p);

// Word problem.  Positive pairs on <=5 strands with <=12 letters go through
// the BFS rewriting closure, everything else through Garside normal forms.
bool braid_equal(const BraidWord& u, const BraidWord& v);

// Breadth-first closure under the length-preserving braid relations.
// Only valid for positive words; the test oracle.
bool positive_equal_bfs(const BraidWord& u, const BraidWord& v);

// Deletes the strands listed in `drop` (1-based bottom positions),
// renumbering the surviving ones.
BraidWord delete_strands(const BraidWord& w, const std::vector<int>& drop);

// Cabling: replaces strand i (bottom position) by a cable of widths[i-1]
// parallel strands.  Crossings become block crossings.
BraidWord cable(const BraidWord& w, const std::vector<int>& widths);

} // namespace hocat
