#pragma once

#include "hocat/fincat.hpp"

namespace hocat {

// A functor L -> Cat given by a category per object of L and a functor per
// morphism.  fiber_mor[m] maps fiber(src(m)) -> fiber(dst(m)).
struct CatDiagram {
    const FinCat* base = nullptr;
    std::vector<FinCat> fiber;        // indexed by L objects
    std::vector<Functor> fiber_mor;   // indexed by L morphisms

    // Repairs internal pointers after copies/moves of the fiber vector.
    void rebind();
    CheckReport validate() const;
    CatDiagram opposite_fibers() const;   // X^op: L -> Cat, L |-> X(L)^op
    static CatDiagram constant(const FinCat& L, const FinCat& c);
};

// Contravariant diagram L^op -> Cat; fiber_mor[m]: fiber(dst(m)) -> fiber(src(m)).
struct CoCatDiagram {
    const FinCat* base = nullptr;
    std::vector<FinCat> fiber;
    std::vector<Functor> fiber_mor;

    void rebind();
    CheckReport validate() const;
    // The diagram a |-> a/L with restriction by precomposition.
    static CoCatDiagram under_slices(const FinCat& L);
    static CoCatDiagram constant(const FinCat& L, const FinCat& c);
};

// Thomason's construction L.int.X: objects (L0, x in X(L0)); morphisms (l: L0->L1, xi: X(l)x -> x').
FinCat grothendieck(const FinCat& L, const CatDiagram& X);

// The dual construction X.int.L with morphisms (l: L'->L, x: X -> X(l)X') and
// composition (l2,y)o(l1,x) = (l1 o l2, X(l1)y o x).
FinCat dual_grothendieck(const CatDiagram& X);

// Coend of W(L) x X(L) over L: disjoint union of products modulo the
// congruence (W(l)w, x) ~ (w, X(l)x), closed under composition.
// Throws if the quotient fails to be a category (missing composites).
FinCat cat_coend(const CoCatDiagram& W, const CatDiagram& X);

} // namespace hocat
