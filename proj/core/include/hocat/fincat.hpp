#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hocat/report.hpp"

namespace hocat {

// A finite category given by explicit object/morphism tables and a total
// composition table on composable pairs.  Ids are interned strings; all
// queries go through int indices.  Values are immutable once built.
class FinCat {
public:
    struct MorData {
        std::string id;
        int src = -1;
        int dst = -1;
    };

    FinCat() = default;

    int add_object(const std::string& id);
    // Adds a non-identity morphism; identities are created by add_object.
    int add_morphism(const std::string& id, int src, int dst);
    void set_compose(int g, int f, int gf);
    // Fills composites with identities; leaves the rest untouched.
    void close_identities();

    int n_objects() const { return static_cast<int>(objects_.size()); }
    int n_morphisms() const { return static_cast<int>(mors_.size()); }
    const std::string& object_id(int o) const { return objects_[o]; }
    const MorData& mor(int m) const { return mors_[m]; }
    int identity(int o) const { return ident_[o]; }
    bool is_identity(int m) const { return ident_[mors_[m].src] == m; }

    int object_index(const std::string& id) const;      // -1 if absent
    int mor_index(const std::string& id) const;         // -1 if absent

    // g after f; -1 when the pair is not composable or unset.
    int compose(int g, int f) const { return comp_[g][f]; }
    bool composable(int g, int f) const { return mors_[f].dst == mors_[g].src; }

    std::vector<int> hom(int a, int b) const;           // morphisms a -> b

    CheckReport validate() const;

    FinCat opposite() const;
    static FinCat product(const FinCat& a, const FinCat& b);
    static FinCat point();                               // one object
    static FinCat interval();                            // 0 -> 1

private:
    std::vector<std::string> objects_;
    std::vector<MorData> mors_;
    std::vector<int> ident_;
    std::vector<std::vector<int>> comp_;
    std::unordered_map<std::string, int> obj_ix_, mor_ix_;
};

// Object/morphism maps between finite categories.
struct Functor {
    const FinCat* src = nullptr;
    const FinCat* dst = nullptr;
    std::vector<int> obj_map;   // src object -> dst object
    std::vector<int> mor_map;   // src morphism -> dst morphism

    static Functor identity(const FinCat& c);
    static Functor compose(const Functor& g, const Functor& f);
    CheckReport validate() const;
    bool operator==(const Functor& o) const {
        return obj_map == o.obj_map && mor_map == o.mor_map;
    }
};

struct NatTransformation {
    const Functor* from = nullptr;
    const Functor* to = nullptr;
    std::vector<int> component;  // src object -> morphism of dst category
    CheckReport validate() const;
};

// Two-sided comma category a/L/b, plus the one-sided slices.
// Objects of a/L/b are triples (c, f: a->c, g: c->b).
FinCat comma_two_sided(const FinCat& L, int a, int b);
FinCat comma_under(const FinCat& L, int a);   // a/L
FinCat comma_over(const FinCat& L, int b);    // L/b

// Exhaustive isomorphism search with degree-sequence pruning.
// Inputs capped at 12 objects.
std::optional<std::pair<Functor, Functor>> iso_categories(const FinCat& c,
                                                          const FinCat& d);

} // namespace hocat
