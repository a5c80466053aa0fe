#pragma once

#include "hocat/catdiagram.hpp"
#include "hocat/hocolim.hpp"

namespace hocat {

// A 2-cell between cones: a component morphism of S per carrier object,
// one family per object of L.
struct ConeCell2 {
    std::vector<std::function<int(int)>> comp;  // per L object: K -> mor of S
};

// Universal homotopy morphism j: legs send K to [id;(K,L)], cells are
// evaluation atoms, 2-cells are index atoms.
DiagramCone universal_cone(const HocolimWindow& W);

// The unique strict homomorphism r: hocolim X -> S with r o j = k,
// materialized as object/morphism maps on the window.
struct StrictHom {
    std::shared_ptr<const Algebra> src, dst;
    std::vector<int> obj_map, mor_map;
    LaxMorphism as_lax() const;
};

StrictHom induced_r(const HocolimWindow& W, const DiagramCone& k);

// t: r => r' from a 2-cell s between cones; components per window object.
std::vector<int> two_cell_t(const HocolimWindow& W, const DiagramCone& k,
                            const ConeCell2& s);

// Change of the indexing category along F: N -> L.
AlgDiagram restrict_diagram(const AlgDiagram& X, const Functor& F);
StrictHom change_index(const HocolimWindow& WN, const HocolimWindow& WL,
                       const Functor& F);
// tau_*: components per object of the N-window, as window-L morphisms.
std::vector<int> tau_star(const HocolimWindow& WN, const HocolimWindow& WL,
                          const NatTransformation& tau);

// Strictification package over the trivial index category.
struct Strictification {
    FinCat point;                    // the one-object index
    AlgDiagram diagram;              // constant at the input algebra
    HocolimWindow window;            // str A
    DiagramCone j;                   // the universal cone (single leg)
    StrictHom r;                     // counit, r o j = id
    std::vector<int> s;              // s: id => j o r, per window object
};

std::shared_ptr<Strictification> strictify(std::shared_ptr<const Algebra> A,
                                           int max_arity, const EnumBudget& bd = {});

// Section k: X -> str X for a free algebra, with r o k = id.
StrictHom free_section(const Strictification& st, const FreeAlgebra& F);

// Evaluation counit hocolim cS -> S for a constant diagram.
StrictHom eval_counit(const HocolimWindow& W);

// Initial-operad case: the window as a finite category plus the comparison
// with the Grothendieck construction.
FinCat window_as_fincat(const HocolimWindow& W);
AlgDiagram cat_diagram_as_alg(const CatDiagram& X, std::shared_ptr<const Operad> initial);

} // namespace hocat
