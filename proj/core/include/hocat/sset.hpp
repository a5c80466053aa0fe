#pragma once

#include <string>
#include <vector>

#include "hocat/catdiagram.hpp"
#include "hocat/fincat.hpp"
#include "hocat/report.hpp"

namespace hocat {

// A simplicial set truncated at dimension `cap`: simplex id lists per
// dimension and face/degeneracy tables on the stored range.
struct TruncSSet {
    int cap = 0;
    std::vector<std::vector<std::string>> simplex;      // [n][i] -> id
    // face[n][i][s]: the i-th face of simplex s in dimension n (n >= 1)
    std::vector<std::vector<std::vector<int>>> face;
    // degen[n][i][s]: the i-th degeneracy (defined for n < cap)
    std::vector<std::vector<std::vector<int>>> degen;

    int count(int n) const {
        return n <= cap ? static_cast<int>(simplex[n].size()) : 0;
    }
    bool degenerate(int n, int s) const;   // lies in the image of some s_i
    std::vector<int> nondegenerate_counts() const;
    CheckReport validate() const;          // simplicial identities on range
};

// Nerve truncated at dimension d: n-simplices are composable chains.
TruncSSet nerve(const FinCat& c, int d);

// A bisimplicial set truncated at (cap, cap) in both directions.
struct BisimplicialSet {
    int cap = 0;
    // cell[p][q]: ids; hface[p][q][i][s] (0<=i<=p), vface[p][q][i][s]
    std::vector<std::vector<std::vector<std::string>>> cell;
    std::vector<std::vector<std::vector<std::vector<int>>>> hface, vface;
    std::vector<std::vector<std::vector<std::vector<int>>>> hdegen, vdegen;
};

// Diagonal: n-simplices are the (n,n)-cells, faces/degeneracies applied in
// both directions.
TruncSSet diag(const BisimplicialSet& b);

// Levelwise external product of two nerves (used for diag tests).
BisimplicialSet nerve_box(const FinCat& a, const FinCat& b, int cap);

// A diagram of truncated simplicial sets over L, with a simplicial map per
// morphism of L (levelwise simplex maps).
struct SSetDiagram {
    const FinCat* base = nullptr;
    std::vector<TruncSSet> fiber;
    // mor_map[m][n][s]: image in fiber(dst) of n-simplex s of fiber(src)
    std::vector<std::vector<std::vector<int>>> mor_map;
    CheckReport validate() const;
};

// Applies the nerve to a Cat-diagram.
SSetDiagram nerve_diagram(const CatDiagram& X, int cap);

// Bousfield-Kan style homotopy colimit N(-/L) (x)_L Z without cofibrant
// replacement: levelwise coend of sets.
TruncSSet ss_hocolim(const FinCat& L, const SSetDiagram& Z);

} // namespace hocat
