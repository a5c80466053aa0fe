#include "hocat/catdiagram.hpp"

#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hocat {

void CatDiagram::rebind() {
    for (int m = 0; m < base->n_morphisms(); ++m) {
        fiber_mor[m].src = &fiber[base->mor(m).src];
        fiber_mor[m].dst = &fiber[base->mor(m).dst];
    }
}

CheckReport CatDiagram::validate() const {
    CheckReport rep;
    rep.subject = "CatDiagram";
    const FinCat& L = *base;
    for (int m = 0; m < L.n_morphisms(); ++m) {
        auto fr = fiber_mor[m].validate();
        if (!fr.ok()) rep.fail("fiber functor", L.mor(m).id);
        rep.checked += fr.checked;
    }
    for (int o = 0; o < L.n_objects(); ++o)
        if (!(fiber_mor[L.identity(o)] == Functor::identity(fiber[o])))
            rep.fail("functoriality (identity)", L.object_id(o));
    for (int g = 0; g < L.n_morphisms(); ++g)
        for (int f = 0; f < L.n_morphisms(); ++f) {
            int gf = L.compose(g, f);
            if (gf < 0) continue;
            ++rep.checked;
            if (!(Functor::compose(fiber_mor[g], fiber_mor[f]) == fiber_mor[gf]))
                rep.fail("functoriality (composition)", L.mor(g).id + " o " + L.mor(f).id);
        }
    return rep;
}

CatDiagram CatDiagram::opposite_fibers() const {
    CatDiagram d;
    d.base = base;
    for (const auto& c : fiber) d.fiber.push_back(c.opposite());
    // object/morphism indices are preserved by FinCat::opposite
    d.fiber_mor = fiber_mor;
    d.rebind();
    return d;
}

CatDiagram CatDiagram::constant(const FinCat& L, const FinCat& c) {
    CatDiagram d;
    d.base = &L;
    d.fiber.assign(L.n_objects(), c);
    d.fiber_mor.resize(L.n_morphisms());
    for (int m = 0; m < L.n_morphisms(); ++m) {
        d.fiber_mor[m] = Functor::identity(c);
    }
    d.rebind();
    return d;
}

void CoCatDiagram::rebind() {
    for (int m = 0; m < base->n_morphisms(); ++m) {
        fiber_mor[m].src = &fiber[base->mor(m).dst];
        fiber_mor[m].dst = &fiber[base->mor(m).src];
    }
}

CheckReport CoCatDiagram::validate() const {
    CheckReport rep;
    rep.subject = "CoCatDiagram";
    const FinCat& L = *base;
    for (int m = 0; m < L.n_morphisms(); ++m) {
        auto fr = fiber_mor[m].validate();
        if (!fr.ok()) rep.fail("fiber functor", L.mor(m).id);
        rep.checked += fr.checked;
    }
    for (int o = 0; o < L.n_objects(); ++o)
        if (!(fiber_mor[L.identity(o)] == Functor::identity(fiber[o])))
            rep.fail("functoriality (identity)", L.object_id(o));
    for (int g = 0; g < L.n_morphisms(); ++g)
        for (int f = 0; f < L.n_morphisms(); ++f) {
            int gf = L.compose(g, f);
            if (gf < 0) continue;
            ++rep.checked;
            // contravariance: W(g o f) = W(f) o W(g)
            if (!(Functor::compose(fiber_mor[f], fiber_mor[g]) == fiber_mor[gf]))
                rep.fail("functoriality (composition)", L.mor(g).id + " o " + L.mor(f).id);
        }
    return rep;
}

CoCatDiagram CoCatDiagram::under_slices(const FinCat& L) {
    CoCatDiagram W;
    W.base = &L;
    for (int a = 0; a < L.n_objects(); ++a) W.fiber.push_back(comma_under(L, a));
    W.fiber_mor.resize(L.n_morphisms());
    for (int m = 0; m < L.n_morphisms(); ++m) {
        int a = L.mor(m).src, b = L.mor(m).dst;
        const FinCat& src = W.fiber[b];  // b/L
        const FinCat& dst = W.fiber[a];  // a/L
        Functor F;
        F.src = &src;
        F.dst = &dst;
        F.obj_map.resize(src.n_objects());
        F.mor_map.resize(src.n_morphisms());
        // objects of b/L are "(c,f)" with f: b->c; map by precomposition with m
        for (int o = 0; o < src.n_objects(); ++o) {
            // recover (c, f) from the id scheme built in comma_under
            // ids are unique, so parse via search over L
            F.obj_map[o] = -1;
        }
        // build index maps structurally instead of via ids
        struct Obj { int c, f; };
        auto list_objs = [&](int base_obj) {
            std::vector<Obj> v;
            for (int c = 0; c < L.n_objects(); ++c)
                for (int f : L.hom(base_obj, c)) v.push_back({c, f});
            return v;
        };
        auto objs_b = list_objs(b), objs_a = list_objs(a);
        auto find_a = [&](int c, int f) {
            for (size_t i = 0; i < objs_a.size(); ++i)
                if (objs_a[i].c == c && objs_a[i].f == f) return static_cast<int>(i);
            return -1;
        };
        for (size_t i = 0; i < objs_b.size(); ++i)
            F.obj_map[i] = find_a(objs_b[i].c, L.compose(objs_b[i].f, m));
        // morphisms of b/L are mediating arrows l with l o f_i = f_j
        for (int mm = 0; mm < src.n_morphisms(); ++mm) {
            int i = src.mor(mm).src, j = src.mor(mm).dst;
            // find the l realizing mm: unique l with matching triangles and id
            int found = -1;
            for (int l : L.hom(objs_b[i].c, objs_b[j].c)) {
                if (L.compose(l, objs_b[i].f) != objs_b[j].f) continue;
                std::string want = (i == j && L.is_identity(l))
                                       ? src.mor(src.identity(i)).id
                                       : "[" + L.mor(l).id + "]" + std::to_string(i) +
                                             ">" + std::to_string(j);
                if (src.mor(mm).id == want) { found = l; break; }
            }
            assert(found >= 0);
            int ia = F.obj_map[i], ja = F.obj_map[j];
            if (ia == ja && L.is_identity(found)) {
                F.mor_map[mm] = dst.identity(ia);
            } else {
                std::string want = "[" + L.mor(found).id + "]" + std::to_string(ia) +
                                   ">" + std::to_string(ja);
                F.mor_map[mm] = dst.mor_index(want);
                if (F.mor_map[mm] < 0) F.mor_map[mm] = dst.identity(ia);
            }
        }
        W.fiber_mor[m] = F;
    }
    return W;
}

CoCatDiagram CoCatDiagram::constant(const FinCat& L, const FinCat& c) {
    CoCatDiagram W;
    W.base = &L;
    W.fiber.assign(L.n_objects(), c);
    W.fiber_mor.resize(L.n_morphisms());
    for (int m = 0; m < L.n_morphisms(); ++m) W.fiber_mor[m] = Functor::identity(c);
    W.rebind();
    return W;
}

FinCat grothendieck(const FinCat& L, const CatDiagram& X) {
    FinCat out;
    struct Obj { int l, x; };
    std::vector<Obj> objs;
    std::vector<std::vector<int>> ox(L.n_objects());
    for (int l = 0; l < L.n_objects(); ++l) {
        ox[l].resize(X.fiber[l].n_objects());
        for (int x = 0; x < X.fiber[l].n_objects(); ++x) {
            ox[l][x] = static_cast<int>(objs.size());
            objs.push_back({l, x});
            out.add_object("(" + L.object_id(l) + "," + X.fiber[l].object_id(x) + ")");
        }
    }
    struct Arrow { int i, j, l, xi; };
    std::vector<Arrow> arrows;
    std::vector<std::vector<std::vector<int>>> ix(
        objs.size(), std::vector<std::vector<int>>(objs.size()));
    for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = 0; j < objs.size(); ++j)
            for (int l : L.hom(objs[i].l, objs[j].l)) {
                const FinCat& fj = X.fiber[objs[j].l];
                int moved = X.fiber_mor[l].obj_map[objs[i].x];
                for (int xi : fj.hom(moved, objs[j].x)) {
                    int m;
                    if (i == j && L.is_identity(l) && fj.is_identity(xi))
                        m = out.identity(static_cast<int>(i));
                    else
                        m = out.add_morphism("(" + L.mor(l).id + "," + fj.mor(xi).id +
                                                 ")" + std::to_string(i) + ">" +
                                                 std::to_string(j),
                                             static_cast<int>(i), static_cast<int>(j));
                    ix[i][j].push_back(m);
                    arrows.push_back({static_cast<int>(i), static_cast<int>(j), l, xi});
                }
            }
    auto find_arrow = [&](int i, int j, int l, int xi) {
        for (size_t t = 0; t < arrows.size(); ++t)
            if (arrows[t].i == i && arrows[t].j == j && arrows[t].l == l &&
                arrows[t].xi == xi)
                return static_cast<int>(t);
        return -1;
    };
    // composite of (l1,xi1): i->j and (l2,xi2): j->k is (l2 l1, xi2 o X(l2)(xi1))
    std::vector<int> arrow_mor(arrows.size());
    {
        size_t t = 0;
        for (size_t i = 0; i < objs.size(); ++i)
            for (size_t j = 0; j < objs.size(); ++j)
                for (size_t q = 0; q < ix[i][j].size(); ++q) arrow_mor[t++] = ix[i][j][q];
        // arrows were pushed in the same loop order as ix entries
    }
    for (size_t u = 0; u < arrows.size(); ++u)
        for (size_t v = 0; v < arrows.size(); ++v) {
            if (arrows[u].j != arrows[v].i) continue;
            int l = L.compose(arrows[v].l, arrows[u].l);
            const FinCat& fk = X.fiber[objs[arrows[v].j].l];
            int xi = fk.compose(arrows[v].xi, X.fiber_mor[arrows[v].l].mor_map[arrows[u].xi]);
            int t = find_arrow(arrows[u].i, arrows[v].j, l, xi);
            assert(t >= 0);
            out.set_compose(arrow_mor[v], arrow_mor[u], arrow_mor[t]);
        }
    return out;
}

FinCat dual_grothendieck(const CatDiagram& X) {
    const FinCat& L = *X.base;
    FinCat out;
    struct Obj { int l, x; };
    std::vector<Obj> objs;
    for (int l = 0; l < L.n_objects(); ++l)
        for (int x = 0; x < X.fiber[l].n_objects(); ++x) {
            objs.push_back({l, x});
            out.add_object("(" + L.object_id(l) + "," + X.fiber[l].object_id(x) + ")");
        }
    struct Arrow { int i, j, l, x; };
    std::vector<Arrow> arrows;
    std::vector<int> arrow_mor;
    // (l,x): (L0,X0) -> (L1,X1) with l: L1->L0 in L and x: X0 -> X(l)(X1)
    for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = 0; j < objs.size(); ++j)
            for (int l : L.hom(objs[j].l, objs[i].l)) {
                const FinCat& fi = X.fiber[objs[i].l];
                int moved = X.fiber_mor[l].obj_map[objs[j].x];
                for (int x : fi.hom(objs[i].x, moved)) {
                    int m;
                    if (i == j && L.is_identity(l) && fi.is_identity(x))
                        m = out.identity(static_cast<int>(i));
                    else
                        m = out.add_morphism("(" + L.mor(l).id + "," + fi.mor(x).id +
                                                 ")" + std::to_string(i) + ">" +
                                                 std::to_string(j),
                                             static_cast<int>(i), static_cast<int>(j));
                    arrows.push_back({static_cast<int>(i), static_cast<int>(j), l, x});
                    arrow_mor.push_back(m);
                }
            }
    auto find_arrow = [&](int i, int j, int l, int x) {
        for (size_t t = 0; t < arrows.size(); ++t)
            if (arrows[t].i == i && arrows[t].j == j && arrows[t].l == l && arrows[t].x == x)
                return static_cast<int>(t);
        return -1;
    };
    for (size_t u = 0; u < arrows.size(); ++u)       // u = (l1,x): i->j
        for (size_t v = 0; v < arrows.size(); ++v) { // v = (l2,y): j->k
            if (arrows[u].j != arrows[v].i) continue;
            int l = L.compose(arrows[u].l, arrows[v].l);  // l1 o l2: Lk -> Li
            const FinCat& fi = X.fiber[objs[arrows[u].i].l];
            int y_moved = X.fiber_mor[arrows[u].l].mor_map[arrows[v].x];
            int x = fi.compose(y_moved, arrows[u].x);
            int t = find_arrow(arrows[u].i, arrows[v].j, l, x);
            assert(t >= 0);
            out.set_compose(arrow_mor[v], arrow_mor[u], arrow_mor[t]);
        }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

} // namespace

FinCat cat_coend(const CoCatDiagram& W, const CatDiagram& X) {
    const FinCat& L = *W.base;
    assert(X.base == W.base || X.base->n_objects() == L.n_objects());
    // build the disjoint union of products W(L) x X(L)
    std::vector<FinCat> prods;
    std::vector<int> obj_off, mor_off;
    int nobj = 0, nmor = 0;
    for (int l = 0; l < L.n_objects(); ++l) {
        prods.push_back(FinCat::product(W.fiber[l], X.fiber[l]));
        obj_off.push_back(nobj);
        mor_off.push_back(nmor);
        nobj += prods.back().n_objects();
        nmor += prods.back().n_morphisms();
    }
    auto pobj = [&](int l, int w, int x) {
        return obj_off[l] + w * X.fiber[l].n_objects() + x;
    };
    auto pmor = [&](int l, int wm, int xm) {
        return mor_off[l] + wm * X.fiber[l].n_morphisms() + xm;
    };
    UnionFind uo(nobj), um(nmor);
    // generating identifications: for l: a->b, (W(l)w, x) ~ (w, X(l)x)
    // with w in W(b), x in X(a)
    for (int m = 0; m < L.n_morphisms(); ++m) {
        int a = L.mor(m).src, b = L.mor(m).dst;
        for (int w = 0; w < W.fiber[b].n_objects(); ++w)
            for (int x = 0; x < X.fiber[a].n_objects(); ++x)
                uo.unite(pobj(a, W.fiber_mor[m].obj_map[w], x),
                         pobj(b, w, X.fiber_mor[m].obj_map[x]));
        for (int wm = 0; wm < W.fiber[b].n_morphisms(); ++wm)
            for (int xm = 0; xm < X.fiber[a].n_morphisms(); ++xm)
                um.unite(pmor(a, W.fiber_mor[m].mor_map[wm], xm),
                         pmor(b, wm, X.fiber_mor[m].mor_map[xm]));
    }
    // global morphism data (src, dst, identity flag) in union space
    std::vector<int> msrc(nmor), mdst(nmor);
    std::vector<bool> mid(nmor);
    for (int l = 0; l < L.n_objects(); ++l)
        for (int mm = 0; mm < prods[l].n_morphisms(); ++mm) {
            int g = mor_off[l] + mm;
            msrc[g] = obj_off[l] + prods[l].mor(mm).src;
            mdst[g] = obj_off[l] + prods[l].mor(mm).dst;
            mid[g] = prods[l].is_identity(mm);
        }
    // congruence closure over the finite composition tables
    bool changed = true;
    while (changed) {
        changed = false;
        // endpoints of identified morphisms are identified
        for (int g = 0; g < nmor; ++g)
            for (int h = g + 1; h < nmor; ++h) {
                if (um.find(g) != um.find(h)) continue;
                changed |= uo.unite(msrc[g], msrc[h]);
                changed |= uo.unite(mdst[g], mdst[h]);
            }
        // identities over identified objects are identified
        for (int g = 0; g < nmor; ++g)
            for (int h = g + 1; h < nmor; ++h)
                if (mid[g] && mid[h] && uo.find(msrc[g]) == uo.find(msrc[h]))
                    changed |= um.unite(g, h);
        // composites of identified pairs are identified
        std::map<std::pair<int, int>, int> comp_of;
        for (int l = 0; l < L.n_objects(); ++l)
            for (int g = 0; g < prods[l].n_morphisms(); ++g)
                for (int f = 0; f < prods[l].n_morphisms(); ++f) {
                    int gf = prods[l].compose(g, f);
                    if (gf < 0) continue;
                    auto key = std::make_pair(um.find(mor_off[l] + g),
                                              um.find(mor_off[l] + f));
                    auto [it, fresh] = comp_of.emplace(key, mor_off[l] + gf);
                    if (!fresh) changed |= um.unite(it->second, mor_off[l] + gf);
                }
    }
    // assemble the quotient
    FinCat out;
    std::vector<int> oclass(nobj, -1), mclass(nmor, -1);
    int qo = 0, qm = 0;
    for (int o = 0; o < nobj; ++o) {
        int r = uo.find(o);
        if (oclass[r] < 0) oclass[r] = out.add_object("q" + std::to_string(qo++));
        oclass[o] = oclass[r];
    }
    // classes containing an identity become the identity of the object class
    for (int m = 0; m < nmor; ++m) {
        if (!mid[m]) continue;
        int r = um.find(m);
        if (mclass[r] < 0) mclass[r] = out.identity(oclass[msrc[m]]);
    }
    for (int m = 0; m < nmor; ++m) {
        int r = um.find(m);
        if (mclass[r] < 0)
            mclass[r] = out.add_morphism("qm" + std::to_string(qm++), oclass[msrc[r]],
                                         oclass[mdst[r]]);
    }
    for (int m = 0; m < nmor; ++m) mclass[m] = mclass[um.find(m)];
    // composition on classes: need a literally composable representative pair
    for (int g = 0; g < nmor; ++g) {
        for (int f = 0; f < nmor; ++f) {
            if (uo.find(mdst[f]) != uo.find(msrc[g])) continue;
            // search a representative pair in the same local product
            int found = -1;
            for (int l = 0; l < L.n_objects() && found < 0; ++l)
                for (int g2 = 0; g2 < prods[l].n_morphisms() && found < 0; ++g2) {
                    if (um.find(mor_off[l] + g2) != um.find(g)) continue;
                    for (int f2 = 0; f2 < prods[l].n_morphisms(); ++f2) {
                        if (um.find(mor_off[l] + f2) != um.find(f)) continue;
                        int gf = prods[l].compose(g2, f2);
                        if (gf >= 0) { found = mor_off[l] + gf; break; }
                    }
                }
            if (found < 0)
                throw std::runtime_error(
                    "cat_coend: congruence closure produced a non-category "
                    "(missing composite)");
            out.set_compose(mclass[g], mclass[f], mclass[found]);
        }
    }
    auto rep = out.validate();
    if (!rep.ok())
        throw std::runtime_error("cat_coend: quotient failed validation: " +
                                 rep.summary());
    return out;
}

} // namespace hocat
