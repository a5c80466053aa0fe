#pragma once

#include "hocat/algebra.hpp"

namespace hocat {

// The 2-sided bar construction B(M, M, X) in low degrees, arity-truncated.
// Level l materializes M^{l+1}(X) as a free algebra over the previous
// carrier.  Faces go down (d_0 evaluates, d_i recurses, the top face uses
// the algebra structure of X); degeneracies insert units, including the
// augmented s_{-1}.
struct BarComplex {
    std::shared_ptr<const Algebra> base;
    int cap = 0;
    int degrees = 0;                 // materialized levels 0..degrees
    std::vector<FreeAlgebra> level;  // level[l] = M^{l+1} X

    // transient morphism of level l+1 built from level-l morphisms
    struct MorData {
        OperadMor am;
        std::vector<int> gs;
    };

    int face_obj(int l, int i, int obj) const;   // level l -> l-1 (or base for l=0)
    int face_mor(int l, int i, int mor) const;
    int face_mor_data(int l, int i, const MorData& m) const;  // level l, not interned
    int degen_obj(int l, int i, int obj) const;  // i in [-1..l]; level l -> l+1
    MorData degen_mor(int l, int i, int mor) const;

    // spec-facing accessor: the degree-n algebra with its face/degeneracy
    // strict homomorphism object maps
    const Algebra& degree(int n) const { return *level[n].alg; }
};

BarComplex bar_complex(std::shared_ptr<const Algebra> X, int degrees, int cap,
                       const EnumBudget& bd = {});

// Simplicial-identity verification on the materialized range, object level
// exhaustive, morphism level sampled.
CheckReport check_bar(const BarComplex& B, int sample, unsigned seed);

} // namespace hocat
