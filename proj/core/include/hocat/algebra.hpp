#pragma once

#include <functional>
#include <memory>
#include <stdexcept>

#include "hocat/fincat.hpp"
#include "hocat/operad.hpp"

namespace hocat {

// Raised when an action evaluation would leave a truncated carrier.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An algebra over a Cat-operad with a finite carrier (possibly a bounded
// window of an infinite algebra, flagged `partial`).  The action maps are
// closures; they throw CapError rather than truncating silently.
struct Algebra {
    std::shared_ptr<const Operad> op;
    FinCat carrier;
    bool partial = false;
    int cap = 0;  // arity cap where applicable (0 = unbounded)

    std::function<int(const OperadElt&, const std::vector<int>&)> act_obj;
    std::function<int(const OperadMor&, const std::vector<int>&)> act_mor;
};

int evaluate(const Algebra& a, const OperadElt& A, const std::vector<int>& ks);
int evaluate_mor(const Algebra& a, const OperadMor& m, const std::vector<int>& us);

CheckReport check_algebra(const Algebra& a, int m_max, int sample, unsigned seed,
                          const EnumBudget& bd = {});

// Lax morphism with explicit coherence cells
// cell(A; K1..Kn): A(fK1,...,fKn) -> f(A(K1,...,Kn)).
struct LaxMorphism {
    std::shared_ptr<const Algebra> src, dst;
    std::vector<int> obj_map;  // carrier object map
    std::vector<int> mor_map;  // carrier morphism map
    std::function<int(const OperadElt&, const std::vector<int>&)> cell;

    int f_obj(int k) const { return obj_map[k]; }
    int f_mor(int u) const { return mor_map[u]; }
    static LaxMorphism strict(std::shared_ptr<const Algebra> src,
                              std::shared_ptr<const Algebra> dst,
                              std::vector<int> obj_map, std::vector<int> mor_map);
    static LaxMorphism identity_of(std::shared_ptr<const Algebra> a);
};

CheckReport check_lax(const LaxMorphism& m, int m_max, int sample, unsigned seed,
                      const EnumBudget& bd = {});
LaxMorphism compose_lax(const LaxMorphism& g, const LaxMorphism& f);
// Extensional comparison within bounds (functor maps plus cells).
bool lax_equal(const LaxMorphism& a, const LaxMorphism& b, int m_max,
               const EnumBudget& bd = {});

// Strict functor L -> Cat^M Lax: an algebra per object, a lax morphism per
// morphism of L, with strict functoriality.
struct AlgDiagram {
    const FinCat* base = nullptr;
    std::shared_ptr<const Operad> op;
    std::vector<std::shared_ptr<const Algebra>> fiber;
    std::vector<LaxMorphism> fiber_mor;

    static AlgDiagram constant(const FinCat& L, std::shared_ptr<const Algebra> a);
};

CheckReport check_diagram(const AlgDiagram& X, int m_max, int sample, unsigned seed,
                          const EnumBudget& bd = {});

// A cone: lax legs k_L: X(L) -> S plus 2-cell components
// k_lambda(K): k_{L0}(K) -> k_{L1}(X(lambda)K) subject to the cocycle and
// the lax-compatibility conditions.
struct DiagramCone {
    const AlgDiagram* X = nullptr;
    std::shared_ptr<const Algebra> target;
    std::vector<LaxMorphism> leg;                      // per L object
    std::vector<std::function<int(int)>> cell2;        // per L morphism

    static DiagramCone identity_cone(const AlgDiagram& constant_diagram);
};

CheckReport check_cone(const DiagramCone& k, int m_max, int sample, unsigned seed,
                       const EnumBudget& bd = {});

// Free algebra on a finite category, truncated at the arity cap.  Carrier
// objects are orbit-normalized pairs (A in O(n); x1..xn in X), n <= cap.
struct FreeAlgebra {
    struct FObj {
        OperadElt A;
        std::vector<int> xs;
    };
    struct FMor {
        int src = -1, dst = -1;
        OperadMor am;          // A -> act(B, sigma)
        std::vector<int> gs;   // x_i -> y_{sigma(i)} in the base category
    };

    std::shared_ptr<Algebra> alg;
    const FinCat* base = nullptr;
    std::vector<FObj> objs;
    std::vector<FMor> mors;

    int obj_index(const OperadElt& A, const std::vector<int>& xs) const;
    int mor_index(const FMor& m) const;
    // Normalizes a raw pair/morphism and returns its carrier index.
    int intern_obj(const OperadElt& A, const std::vector<int>& xs) const;
    int intern_mor(const OperadMor& am, const std::vector<int>& gs) const;
};

FreeAlgebra free_algebra(const FinCat& X, std::shared_ptr<const Operad> O, int cap,
                         const EnumBudget& bd = {});

// Strict permutative category data; builds the corresponding algebra over
// the SigmaTilde operad.
struct PermutativeData {
    FinCat cat;
    int unit_obj = 0;
    std::vector<std::vector<int>> ten_obj;  // object tensor table
    std::vector<std::vector<int>> ten_mor;  // morphism tensor table
    std::vector<std::vector<int>> sym;      // c_{A,B} components
};

std::shared_ptr<Algebra> permutative_algebra(PermutativeData d);

// Discrete commutative-monoid carrier as an M_k-algebra (all words of every
// operation evaluate through the monoid sum; morphisms are identities).
std::shared_ptr<Algebra> discrete_monoid_algebra(std::shared_ptr<const Operad> O,
                                                 int n_elements,
                                                 std::function<int(int, int)> add,
                                                 int unit);

} // namespace hocat
