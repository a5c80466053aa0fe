#include "hocat/fincat.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hocat {

std::string CheckReport::summary() const {
    std::string s = subject + ": " + (ok() ? "ok" : "FAILED") + " (" +
                    std::to_string(checked) + " checked";
    if (skipped) s += ", " + std::to_string(skipped) + " skipped";
    s += ")";
    for (const auto& i : issues) s += "\n  [" + i.law + "] " + i.detail;
    return s;
}

int FinCat::add_object(const std::string& id) {
    if (obj_ix_.count(id)) throw std::invalid_argument("duplicate object id " + id);
    int o = n_objects();
    objects_.push_back(id);
    obj_ix_[id] = o;
    int m = add_morphism("id:" + id, o, o);
    ident_.push_back(m);
    return o;
}

int FinCat::add_morphism(const std::string& id, int src, int dst) {
    if (mor_ix_.count(id)) throw std::invalid_argument("duplicate morphism id " + id);
    int m = n_morphisms();
    mors_.push_back({id, src, dst});
    mor_ix_[id] = m;
    for (auto& row : comp_) row.push_back(-1);
    comp_.emplace_back(n_morphisms(), -1);
    return m;
}

void FinCat::set_compose(int g, int f, int gf) {
    comp_[g][f] = gf;
}

void FinCat::close_identities() {
    for (int m = 0; m < n_morphisms(); ++m) {
        comp_[m][ident_[mors_[m].src]] = m;
        comp_[ident_[mors_[m].dst]][m] = m;
    }
}

int FinCat::object_index(const std::string& id) const {
    auto it = obj_ix_.find(id);
    return it == obj_ix_.end() ? -1 : it->second;
}

int FinCat::mor_index(const std::string& id) const {
    auto it = mor_ix_.find(id);
    return it == mor_ix_.end() ? -1 : it->second;
}

std::vector<int> FinCat::hom(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < n_morphisms(); ++m)
        if (mors_[m].src == a && mors_[m].dst == b) out.push_back(m);
    return out;
}

CheckReport FinCat::validate() const {
    CheckReport rep;
    rep.subject = "FinCat";
    for (int o = 0; o < n_objects(); ++o) {
        if (ident_[o] < 0 || ident_[o] >= n_morphisms() ||
            mors_[ident_[o]].src != o || mors_[ident_[o]].dst != o)
            rep.fail("identity assignment", "object " + objects_[o]);
    }
    for (int g = 0; g < n_morphisms(); ++g) {
        for (int f = 0; f < n_morphisms(); ++f) {
            int gf = comp_[g][f];
            bool comp_ok = composable(g, f);
            ++rep.checked;
            if (comp_ok && gf < 0)
                rep.fail("composition totality",
                         mors_[g].id + " o " + mors_[f].id + " undefined");
            if (!comp_ok && gf >= 0)
                rep.fail("composition closure/typing",
                         mors_[g].id + " o " + mors_[f].id + " set on non-composable pair");
            if (comp_ok && gf >= 0) {
                if (mors_[gf].src != mors_[f].src || mors_[gf].dst != mors_[g].dst)
                    rep.fail("composition closure/typing",
                             mors_[g].id + " o " + mors_[f].id + " = " + mors_[gf].id +
                                 " has wrong endpoints");
            }
        }
    }
    if (!rep.ok()) return rep;  // later laws assume a well-typed table
    for (int f = 0; f < n_morphisms(); ++f) {
        if (comp_[f][ident_[mors_[f].src]] != f || comp_[ident_[mors_[f].dst]][f] != f)
            rep.fail("unit law", mors_[f].id);
    }
    for (int h = 0; h < n_morphisms(); ++h)
        for (int g = 0; g < n_morphisms(); ++g) {
            if (!composable(h, g)) continue;
            for (int f = 0; f < n_morphisms(); ++f) {
                if (!composable(g, f)) continue;
                ++rep.checked;
                if (comp_[comp_[h][g]][f] != comp_[h][comp_[g][f]])
                    rep.fail("associativity",
                             mors_[h].id + " o " + mors_[g].id + " o " + mors_[f].id);
            }
        }
    return rep;
}

FinCat FinCat::opposite() const {
    FinCat op;
    for (int o = 0; o < n_objects(); ++o) op.add_object(objects_[o]);
    std::vector<int> map(n_morphisms());
    for (int m = 0; m < n_morphisms(); ++m) {
        if (is_identity(m)) { map[m] = op.ident_[mors_[m].src]; continue; }
        map[m] = op.add_morphism(mors_[m].id, mors_[m].dst, mors_[m].src);
    }
    for (int g = 0; g < n_morphisms(); ++g)
        for (int f = 0; f < n_morphisms(); ++f)
            if (comp_[g][f] >= 0) op.set_compose(map[f], map[g], map[comp_[g][f]]);
    return op;
}

FinCat FinCat::product(const FinCat& a, const FinCat& b) {
    FinCat p;
    auto oid = [&](int x, int y) { return a.objects_[x] + "|" + b.objects_[y]; };
    for (int x = 0; x < a.n_objects(); ++x)
        for (int y = 0; y < b.n_objects(); ++y) p.add_object(oid(x, y));
    auto obj = [&](int x, int y) { return x * b.n_objects() + y; };
    std::vector<std::vector<int>> map(a.n_morphisms(),
                                      std::vector<int>(b.n_morphisms()));
    for (int f = 0; f < a.n_morphisms(); ++f)
        for (int g = 0; g < b.n_morphisms(); ++g) {
            if (a.is_identity(f) && b.is_identity(g)) {
                map[f][g] = p.ident_[obj(a.mors_[f].src, b.mors_[g].src)];
            } else {
                map[f][g] = p.add_morphism(a.mors_[f].id + "|" + b.mors_[g].id,
                                           obj(a.mors_[f].src, b.mors_[g].src),
                                           obj(a.mors_[f].dst, b.mors_[g].dst));
            }
        }
    for (int f1 = 0; f1 < a.n_morphisms(); ++f1)
        for (int g1 = 0; g1 < b.n_morphisms(); ++g1)
            for (int f0 = 0; f0 < a.n_morphisms(); ++f0)
                for (int g0 = 0; g0 < b.n_morphisms(); ++g0) {
                    int cf = a.comp_[f1][f0], cg = b.comp_[g1][g0];
                    if (cf >= 0 && cg >= 0)
                        p.set_compose(map[f1][g1], map[f0][g0], map[cf][cg]);
                }
    return p;
}

FinCat FinCat::point() {
    FinCat c;
    c.add_object("*");
    c.close_identities();
    return c;
}

FinCat FinCat::interval() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_morphism("u", 0, 1);
    c.close_identities();
    return c;
}

Functor Functor::identity(const FinCat& c) {
    Functor f;
    f.src = f.dst = &c;
    f.obj_map.resize(c.n_objects());
    f.mor_map.resize(c.n_morphisms());
    for (int o = 0; o < c.n_objects(); ++o) f.obj_map[o] = o;
    for (int m = 0; m < c.n_morphisms(); ++m) f.mor_map[m] = m;
    return f;
}

Functor Functor::compose(const Functor& g, const Functor& f) {
    assert(f.dst == g.src);
    Functor h;
    h.src = f.src;
    h.dst = g.dst;
    h.obj_map.resize(f.obj_map.size());
    h.mor_map.resize(f.mor_map.size());
    for (size_t o = 0; o < f.obj_map.size(); ++o) h.obj_map[o] = g.obj_map[f.obj_map[o]];
    for (size_t m = 0; m < f.mor_map.size(); ++m) h.mor_map[m] = g.mor_map[f.mor_map[m]];
    return h;
}

CheckReport Functor::validate() const {
    CheckReport rep;
    rep.subject = "Functor";
    if (!src || !dst) { rep.fail("totality", "missing endpoints"); return rep; }
    if (static_cast<int>(obj_map.size()) != src->n_objects() ||
        static_cast<int>(mor_map.size()) != src->n_morphisms()) {
        rep.fail("totality", "maps not total on the source");
        return rep;
    }
    for (int m = 0; m < src->n_morphisms(); ++m) {
        ++rep.checked;
        const auto& md = src->mor(m);
        const auto& im = dst->mor(mor_map[m]);
        if (im.src != obj_map[md.src] || im.dst != obj_map[md.dst])
            rep.fail("typing", md.id);
    }
    for (int o = 0; o < src->n_objects(); ++o)
        if (mor_map[src->identity(o)] != dst->identity(obj_map[o]))
            rep.fail("identity preservation", src->object_id(o));
    for (int g = 0; g < src->n_morphisms(); ++g)
        for (int f = 0; f < src->n_morphisms(); ++f) {
            int gf = src->compose(g, f);
            if (gf < 0) continue;
            ++rep.checked;
            if (dst->compose(mor_map[g], mor_map[f]) != mor_map[gf])
                rep.fail("composition preservation",
                         src->mor(g).id + " o " + src->mor(f).id);
        }
    return rep;
}

CheckReport NatTransformation::validate() const {
    CheckReport rep;
    rep.subject = "NatTransformation";
    if (!from || !to || from->src != to->src || from->dst != to->dst) {
        rep.fail("typing", "endpoint functors disagree");
        return rep;
    }
    const FinCat& A = *from->src;
    const FinCat& B = *from->dst;
    for (int o = 0; o < A.n_objects(); ++o) {
        const auto& c = B.mor(component[o]);
        if (c.src != from->obj_map[o] || c.dst != to->obj_map[o])
            rep.fail("component typing", A.object_id(o));
    }
    if (!rep.ok()) return rep;
    for (int m = 0; m < A.n_morphisms(); ++m) {
        ++rep.checked;
        const auto& md = A.mor(m);
        int lhs = B.compose(component[md.dst], from->mor_map[m]);
        int rhs = B.compose(to->mor_map[m], component[md.src]);
        if (lhs != rhs) rep.fail("naturality", md.id);
    }
    return rep;
}

namespace {

// Shared builder for the comma categories.  Objects are (c, f, g) triples
// with f: a->c and g: c->b; either leg may be disabled.  Morphisms are
// mediating arrows l of L making both triangles commute, composing as in L.
FinCat build_comma(const FinCat& L, int a, int b, bool use_f, bool use_g) {
    FinCat out;
    struct Obj { int c, f, g; };
    std::vector<Obj> objs;
    for (int c = 0; c < L.n_objects(); ++c) {
        std::vector<int> fs = use_f ? L.hom(a, c) : std::vector<int>{-1};
        std::vector<int> gs = use_g ? L.hom(c, b) : std::vector<int>{-1};
        for (int f : fs)
            for (int g : gs) {
                std::string id = "(" + L.object_id(c);
                if (use_f) id += "," + L.mor(f).id;
                if (use_g) id += "," + L.mor(g).id;
                id += ")";
                objs.push_back({c, f, g});
                out.add_object(id);
            }
    }
    struct Arrow { int i, j, l; };
    std::vector<Arrow> arrows;
    std::vector<std::vector<std::vector<int>>> ix(
        objs.size(), std::vector<std::vector<int>>(objs.size(),
                                                   std::vector<int>(L.n_morphisms(), -1)));
    for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = 0; j < objs.size(); ++j)
            for (int l : L.hom(objs[i].c, objs[j].c)) {
                if (use_f && L.compose(l, objs[i].f) != objs[j].f) continue;
                if (use_g && L.compose(objs[j].g, l) != objs[i].g) continue;
                int m;
                if (i == j && L.is_identity(l))
                    m = out.identity(static_cast<int>(i));
                else
                    m = out.add_morphism("[" + L.mor(l).id + "]" + std::to_string(i) +
                                             ">" + std::to_string(j),
                                         static_cast<int>(i), static_cast<int>(j));
                ix[i][j][l] = m;
                arrows.push_back({static_cast<int>(i), static_cast<int>(j), l});
            }
    for (const auto& u : arrows)
        for (const auto& v : arrows) {
            if (u.j != v.i) continue;
            int lv = L.compose(v.l, u.l);
            out.set_compose(ix[v.i][v.j][v.l], ix[u.i][u.j][u.l], ix[u.i][v.j][lv]);
        }
    return out;
}

} // namespace

FinCat comma_two_sided(const FinCat& L, int a, int b) {
    if (a < 0 || a >= L.n_objects() || b < 0 || b >= L.n_objects())
        throw std::invalid_argument("comma_two_sided: unknown object");
    return build_comma(L, a, b, true, true);
}

FinCat comma_under(const FinCat& L, int a) { return build_comma(L, a, -1, true, false); }

FinCat comma_over(const FinCat& L, int b) { return build_comma(L, -1, b, false, true); }

namespace {

// backtracking object matcher for iso_categories
struct IsoSearch {
    const FinCat& c;
    const FinCat& d;
    std::vector<int> omap;          // c object -> d object
    std::vector<bool> used;

    explicit IsoSearch(const FinCat& c_, const FinCat& d_)
        : c(c_), d(d_), omap(c_.n_objects(), -1), used(d_.n_objects(), false) {}

    bool feasible(int oc, int od) const {
        // degree-sequence pruning: per-endpoint hom sizes to already-placed
        if (c.hom(oc, oc).size() != d.hom(od, od).size()) return false;
        for (int p = 0; p < c.n_objects(); ++p) {
            if (omap[p] < 0) continue;
            if (c.hom(oc, p).size() != d.hom(od, omap[p]).size()) return false;
            if (c.hom(p, oc).size() != d.hom(omap[p], od).size()) return false;
        }
        return true;
    }

    bool extend(int oc, std::optional<std::pair<Functor, Functor>>& out) {
        if (oc == c.n_objects()) return check_morphisms(out);
        for (int od = 0; od < d.n_objects(); ++od) {
            if (used[od] || !feasible(oc, od)) continue;
            omap[oc] = od;
            used[od] = true;
            if (extend(oc + 1, out)) return true;
            used[od] = false;
            omap[oc] = -1;
        }
        return false;
    }

    bool check_morphisms(std::optional<std::pair<Functor, Functor>>& out) {
        // match hom-sets one by one, backtracking over bijections
        std::vector<int> mmap(c.n_morphisms(), -1);
        std::vector<int> minv(d.n_morphisms(), -1);
        if (!match_hom(0, mmap, minv)) return false;
        // verify composition both ways
        for (int g = 0; g < c.n_morphisms(); ++g)
            for (int f = 0; f < c.n_morphisms(); ++f) {
                int gf = c.compose(g, f);
                int dgf = d.compose(mmap[g], mmap[f]);
                if ((gf < 0) != (dgf < 0)) return false;
                if (gf >= 0 && mmap[gf] != dgf) return false;
            }
        Functor fwd, bwd;
        fwd.src = &c; fwd.dst = &d; fwd.obj_map = omap; fwd.mor_map = mmap;
        bwd.src = &d; bwd.dst = &c;
        bwd.obj_map.resize(d.n_objects());
        for (int o = 0; o < c.n_objects(); ++o) bwd.obj_map[omap[o]] = o;
        bwd.mor_map = minv;
        out = std::make_pair(fwd, bwd);
        return true;
    }

    bool match_hom(int m, std::vector<int>& mmap, std::vector<int>& minv) {
        if (m == c.n_morphisms()) return true;
        if (mmap[m] >= 0) return match_hom(m + 1, mmap, minv);
        if (c.is_identity(m)) {
            int im = d.identity(omap[c.mor(m).src]);
            if (minv[im] >= 0) return false;
            mmap[m] = im; minv[im] = m;
            if (match_hom(m + 1, mmap, minv)) return true;
            mmap[m] = -1; minv[im] = -1;
            return false;
        }
        const auto& md = c.mor(m);
        for (int dm : d.hom(omap[md.src], omap[md.dst])) {
            if (minv[dm] >= 0 || d.is_identity(dm)) continue;
            mmap[m] = dm; minv[dm] = m;
            if (match_hom(m + 1, mmap, minv)) return true;
            mmap[m] = -1; minv[dm] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::pair<Functor, Functor>> iso_categories(const FinCat& c,
                                                          const FinCat& d) {
    if (c.n_objects() != d.n_objects() || c.n_morphisms() != d.n_morphisms())
        return std::nullopt;
    if (c.n_objects() > 12)
        throw std::invalid_argument("iso_categories: inputs capped at 12 objects");
    IsoSearch s(c, d);
    std::optional<std::pair<Functor, Functor>> out;
    s.extend(0, out);
    return out;
}

} // namespace hocat
