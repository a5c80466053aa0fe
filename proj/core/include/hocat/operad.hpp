#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocat/braid.hpp"
#include "hocat/free_tree.hpp"
#include "hocat/monoidal_word.hpp"
#include "hocat/perm.hpp"
#include "hocat/report.hpp"

namespace hocat {

// An object of M(n) for one of the shipped operad families.
struct OperadElt {
    enum class Tag { Initial, Word, PermObj, Tree };
    Tag tag = Tag::Initial;
    MonoidalWord word;  // Tag::Word
    Perm perm;          // Tag::PermObj
    FreeTree tree;      // Tag::Tree

    int arity() const;
    static OperadElt initial();
    static OperadElt of(MonoidalWord w);
    static OperadElt of(Perm p);
    static OperadElt of(FreeTree t);
    bool operator==(const OperadElt& o) const;
    bool operator<(const OperadElt& o) const;   // total order for orbit reps
    std::string str() const;
};

// A morphism of M(n).  The extra data depends on the family: nothing for
// poset witnesses and translation categories, a braid word for Br/Br+,
// node morphisms for free operads.
struct OperadMor {
    OperadElt src, dst;
    BraidWord braid;             // Br families
    std::vector<int> node_mor;   // Free family (preorder, -1 = identity)

    bool operator==(const OperadMor& o) const;  // structural equality
    std::string str() const;
};

// Initial object of a factorization-category component, as in Def-6.7-style
// normalization: rho: A -> B * (E_1 + ... + E_n) and comparisons E_i -> C_i.
struct FactorizationInitial {
    std::vector<OperadElt> factors;
    OperadMor rho;
    std::vector<OperadMor> comparisons;
};

struct EnumBudget {
    int max_tree_nodes = 4;  // free operads
    int braid_len = 4;       // Br hom enumeration cap
};

// Interface of a Sigma-free Cat-operad.  Implementations must be pure and
// immutable; everything here is safe to call concurrently.
class Operad {
public:
    virtual ~Operad() = default;

    virtual std::string name() const = 0;
    virtual bool has_nullary() const = 0;
    virtual OperadElt unit() const = 0;
    virtual OperadElt nullary() const;  // throws if !has_nullary()

    virtual std::vector<OperadElt> objects(int arity, const EnumBudget& b = {}) const = 0;
    virtual std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                          const EnumBudget& bd = {}) const = 0;
    // Canonical witness when hom is inhabited, per family: the unique poset
    // or translation arrow, the permutation braid (positive lift for Br+ if
    // one exists within the cap), identity for the initial operad.
    virtual std::optional<OperadMor> hom_witness(const OperadElt& a,
                                                 const OperadElt& b) const = 0;

    virtual OperadElt substitute(const OperadElt& A,
                                 const std::vector<OperadElt>& Bs) const = 0;
    virtual OperadMor substitute_mor(const OperadMor& a,
                                     const std::vector<OperadMor>& bs) const = 0;

    virtual OperadElt act(const OperadElt& A, const Perm& s) const = 0;
    virtual OperadMor act_mor(const OperadMor& m, const Perm& s) const = 0;

    // The unique permutation with A = act(orbit_rep(A), twist(A)).
    virtual Perm twist(const OperadElt& A) const = 0;
    OperadElt orbit_rep(const OperadElt& A) const;

    virtual OperadMor identity(const OperadElt& a) const;
    virtual OperadMor compose(const OperadMor& g, const OperadMor& f) const = 0;
    virtual bool mor_equal(const OperadMor& a, const OperadMor& b) const;

    enum class EqStrategy { Normalize, Solve };
    virtual EqStrategy eq_strategy() const { return EqStrategy::Normalize; }

    // Def-6.7 machinery.  factorization_initial returns an initial object of
    // the component of (Cs, alpha) in C(A, B, r1..rn); the shipped behavior
    // per family follows the corresponding lemma (restriction formula for
    // M_k, the queried object for the translation and braid families, the
    // tree cut for free operads).
    virtual FactorizationInitial factorization_initial(
        const OperadElt& A, const OperadElt& B, const std::vector<OperadElt>& Cs,
        const OperadMor& alpha) const = 0;

    // The canonical initial object used by normalization (minimal in the
    // element order among initial objects of the component).  Only for
    // Normalize-strategy operads.
    virtual FactorizationInitial normalize_factorization(
        const OperadElt& A, const OperadElt& B, const std::vector<OperadElt>& Cs,
        const OperadMor& alpha) const;

    // Solves (id_B * (b_1+...+b_n)) o alpha = beta for b_k: C_k -> D_k.
    // Generic implementation searches homsets; Br overrides with strand
    // algebra.
    virtual std::optional<std::vector<OperadMor>> factor_block(
        const OperadElt& B, const std::vector<OperadElt>& Cs,
        const std::vector<OperadElt>& Ds, const OperadMor& alpha,
        const OperadMor& beta, const EnumBudget& bd = {}) const;
};

std::shared_ptr<const Operad> make_initial_operad();
std::shared_ptr<const Operad> make_mk_operad(int k);
// M_infinity realized at level k; identical to M_k plus the stability view.
std::shared_ptr<const Operad> make_minf_operad(int k);
std::shared_ptr<const Operad> make_sigma_tilde();
std::shared_ptr<const Operad> make_sigma_hat();
std::shared_ptr<const Operad> make_br(bool positive, int word_cap = 64);
std::shared_ptr<const Operad> make_free_operad(Collection K);

// Selector strings: "initial", "Mk:k", "Minf:k", "SigmaTilde", "SigmaHat",
// "Br", "BrPlus", "Free:<collection-file>".
std::shared_ptr<const Operad> operad_by_selector(const std::string& sel);

// Operad morphisms of Section-8 type, by name: "beta" (M2 -> Br+),
// "mu" (Br+ -> Br), "lambda" (Mk -> SigmaTilde), "iota" (Mk -> Mk+1).
OperadElt operad_map_apply(const std::string& name, const OperadElt& x);
OperadMor operad_map_apply_mor(const std::string& name, const OperadMor& m);

// Law checkers (report-only).
CheckReport check_operad_axioms(const Operad& O, int m_max, int sample,
                                unsigned seed, const EnumBudget& bd = {});
CheckReport check_factorization(const Operad& O, int m_max, int sample,
                                unsigned seed, const EnumBudget& bd = {});

} // namespace hocat
