#pragma once

#include <map>
#include <optional>

#include "hocat/algebra.hpp"

namespace hocat {

// An object [A; (K_1,L_1),...,(K_n,L_n)] in normal form: A is the chosen
// orbit representative and the pairs carry the matching reindexing.
struct HCObject {
    OperadElt A;
    std::vector<std::pair<int, int>> pairs;  // (carrier object, L object)

    bool operator==(const HCObject& o) const { return A == o.A && pairs == o.pairs; }
    bool operator<(const HCObject& o) const {
        if (!(A == o.A)) return A < o.A;
        return pairs < o.pairs;
    }
    std::string str() const;
};

// Five-part morphism data in normal form.  Fibers are stored explicitly and
// ascending; gamma targets subst(A2, C) twisted by the permutation the
// fibers induce.
struct HCMorphism {
    HCObject src, dst;
    std::vector<std::vector<int>> fibers;  // per target slot, 1-based inputs
    std::vector<OperadElt> C;
    OperadMor gamma;
    std::vector<int> lambda;  // L-morphisms, one per input
    std::vector<int> f;       // carrier morphisms, one per target slot

    std::string str() const;
};

// The homotopy colimit of a validated diagram, materialized lazily: objects
// and morphisms are built on demand and normalized; nothing enumerates the
// whole (generally infinite) category.
class Hocolim {
public:
    explicit Hocolim(const AlgDiagram& X);

    const AlgDiagram& diagram() const { return *X_; }
    const Operad& op() const { return *X_->op; }

    HCObject object(const OperadElt& A,
                    const std::vector<std::pair<int, int>>& pairs) const;

    // Normalizes raw five-part data (moves 1, 2, 4, then 3 for operads with
    // the Normalize strategy).
    HCMorphism morphism(const HCObject& raw_src, const HCObject& raw_dst,
                        std::vector<std::vector<int>> fibers,
                        std::vector<OperadElt> C, OperadMor gamma,
                        std::vector<int> lambda, std::vector<int> f) const;

    bool mor_equal(const HCMorphism& a, const HCMorphism& b) const;

    HCMorphism identity(const HCObject& y) const;
    HCMorphism compose(const HCMorphism& v, const HCMorphism& u) const;
    // The 4.1b composite before renormalization (for replay tests).
    HCMorphism compose_raw(const HCMorphism& v, const HCMorphism& u) const;

    HCObject act(const OperadElt& B, const std::vector<HCObject>& ys) const;
    HCMorphism act_mor(const OperadMor& B, const std::vector<HCMorphism>& us) const;

    // atoms
    HCMorphism atom_operad(const OperadMor& g,
                           const std::vector<std::pair<int, int>>& pairs) const;
    HCMorphism atom_index(int l_mor, int K) const;
    HCMorphism atom_eval(const OperadElt& C, const std::vector<int>& Ks, int L) const;
    HCMorphism atom_carrier(int f_mor, int L) const;

    // Four-stage atom decomposition of a normalized morphism; composing the
    // stages back(via compose) returns the morphism.
    std::vector<HCMorphism> decompose_atoms(const HCMorphism& m) const;

    // the permutation the fibers induce (sigma^{-1} lists the fibers)
    static Perm fiber_perm(const std::vector<std::vector<int>>& fibers, int m);

private:
    const AlgDiagram* X_;

    void validate_typing(const HCMorphism& m) const;
    HCMorphism normalize(HCMorphism m) const;
};

// A finite window of the homotopy colimit: all objects up to the arity
// bound over the diagram's carriers, with the morphisms between them.
struct HocolimWindow {
    std::shared_ptr<Hocolim> hc;
    std::shared_ptr<Algebra> alg;      // carrier = the window as a FinCat
    std::vector<HCObject> objs;
    std::vector<HCMorphism> mors;

    int obj_index(const HCObject& o) const;
    int mor_index(const HCMorphism& m) const;
};

HocolimWindow materialize_hocolim(const AlgDiagram& X, int max_arity,
                                  const EnumBudget& bd = {});

} // namespace hocat
