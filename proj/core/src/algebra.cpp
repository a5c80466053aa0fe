#include "hocat/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace hocat {

int evaluate(const Algebra& a, const OperadElt& A, const std::vector<int>& ks) {
    if (A.arity() != static_cast<int>(ks.size()))
        throw std::invalid_argument("evaluate: arity mismatch");
    return a.act_obj(A, ks);
}

int evaluate_mor(const Algebra& a, const OperadMor& m, const std::vector<int>& us) {
    if (m.src.arity() != static_cast<int>(us.size()))
        throw std::invalid_argument("evaluate_mor: arity mismatch");
    return a.act_mor(m, us);
}

namespace {

struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned s) : g(s) {}
    int upto(int n) { return n <= 1 ? 0 : std::uniform_int_distribution<int>(0, n - 1)(g); }
};

std::vector<int> reindex_by_inverse(const std::vector<int>& ks, const Perm& s) {
    Perm si = s.inverse();
    std::vector<int> out(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) out[i] = ks[si(static_cast<int>(i) + 1) - 1];
    return out;
}

} // namespace

CheckReport check_algebra(const Algebra& a, int m_max, int sample, unsigned seed,
                          const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "algebra laws over " + a.op->name();
    Rng rng(seed);
    const Operad& O = *a.op;
    int nobj = a.carrier.n_objects();
    if (nobj == 0) {
        rep.fail("carrier", "empty carrier");
        return rep;
    }
    auto rand_obj = [&] { return rng.upto(nobj); };

    // unit law
    for (int k = 0; k < nobj; ++k) {
        ++rep.checked;
        try {
            if (evaluate(a, O.unit(), {k}) != k)
                rep.fail("unit law", a.carrier.object_id(k));
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }

    // equivariance on objects: theta(A.s, K) = theta(A, K o s^{-1})
    for (int t = 0; t < sample; ++t) {
        int n = 1 + rng.upto(std::min(3, m_max));
        auto pool = O.objects(n, bd);
        if (pool.empty()) continue;
        const OperadElt& A = pool[rng.upto(static_cast<int>(pool.size()))];
        auto perms = Perm::all(n);
        const Perm& s = perms[rng.upto(static_cast<int>(perms.size()))];
        std::vector<int> ks;
        for (int i = 0; i < n; ++i) ks.push_back(rand_obj());
        ++rep.checked;
        try {
            int lhs = evaluate(a, O.act(A, s), ks);
            int rhs = evaluate(a, A, reindex_by_inverse(ks, s));
            if (lhs != rhs) rep.fail("equivariance", A.str() + " . " + s.str());
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }

    // associativity: theta(A*(B.), ks) = theta(A, theta(B_i, blocks))
    for (int t = 0; t < sample; ++t) {
        int n = 1 + rng.upto(2);
        auto poolA = O.objects(n, bd);
        if (poolA.empty()) continue;
        const OperadElt& A = poolA[rng.upto(static_cast<int>(poolA.size()))];
        std::vector<OperadElt> Bs;
        std::vector<std::vector<int>> blocks;
        std::vector<int> flat;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int r = O.has_nullary() ? rng.upto(3) : 1 + rng.upto(2);
            auto poolB = O.objects(r, bd);
            if (poolB.empty()) { ok = false; break; }
            Bs.push_back(poolB[rng.upto(static_cast<int>(poolB.size()))]);
            std::vector<int> blk;
            for (int j = 0; j < r; ++j) blk.push_back(rand_obj());
            for (int x : blk) flat.push_back(x);
            blocks.push_back(blk);
        }
        if (!ok) continue;
        ++rep.checked;
        try {
            int lhs = evaluate(a, O.substitute(A, Bs), flat);
            std::vector<int> mids;
            for (int i = 0; i < n; ++i) mids.push_back(evaluate(a, Bs[i], blocks[i]));
            int rhs = evaluate(a, A, mids);
            if (lhs != rhs) rep.fail("associativity", A.str());
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }

    // functoriality of the morphism action, sampled
    for (int t = 0; t < sample; ++t) {
        int n = 1 + rng.upto(std::min(2, m_max));
        auto pool = O.objects(n, bd);
        if (pool.empty()) continue;
        const OperadElt& A1 = pool[rng.upto(static_cast<int>(pool.size()))];
        const OperadElt& A2 = pool[rng.upto(static_cast<int>(pool.size()))];
        auto al = O.hom_witness(A1, A2);
        if (!al) continue;
        std::vector<int> us, vs;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int u = rng.upto(a.carrier.n_morphisms());
            us.push_back(u);
        }
        // pick composable continuations
        for (int i = 0; i < n && ok; ++i) {
            int dst = a.carrier.mor(us[i]).dst;
            std::vector<int> cand;
            for (int m = 0; m < a.carrier.n_morphisms(); ++m)
                if (a.carrier.mor(m).src == dst) cand.push_back(m);
            if (cand.empty()) ok = false;
            else vs.push_back(cand[rng.upto(static_cast<int>(cand.size()))]);
        }
        if (!ok) continue;
        auto be = O.hom_witness(A2, A2);
        if (!be) continue;
        ++rep.checked;
        try {
            std::vector<int> comp;
            for (int i = 0; i < n; ++i) comp.push_back(a.carrier.compose(vs[i], us[i]));
            int lhs = evaluate_mor(a, O.compose(*be, *al), comp);
            int rhs = a.carrier.compose(evaluate_mor(a, *be, vs),
                                        evaluate_mor(a, *al, us));
            if (lhs != rhs) rep.fail("morphism functoriality", al->str());
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }
    return rep;
}

LaxMorphism LaxMorphism::strict(std::shared_ptr<const Algebra> src,
                                std::shared_ptr<const Algebra> dst,
                                std::vector<int> obj_map, std::vector<int> mor_map) {
    LaxMorphism m;
    m.src = std::move(src);
    m.dst = std::move(dst);
    m.obj_map = std::move(obj_map);
    m.mor_map = std::move(mor_map);
    auto d = m.dst;
    auto om = m.obj_map;
    m.cell = [d, om](const OperadElt& A, const std::vector<int>& Ks) {
        std::vector<int> fk;
        for (int k : Ks) fk.push_back(om[k]);
        return d->carrier.identity(evaluate(*d, A, fk));
    };
    return m;
}

LaxMorphism LaxMorphism::identity_of(std::shared_ptr<const Algebra> a) {
    std::vector<int> om(a->carrier.n_objects()), mm(a->carrier.n_morphisms());
    for (size_t i = 0; i < om.size(); ++i) om[i] = static_cast<int>(i);
    for (size_t i = 0; i < mm.size(); ++i) mm[i] = static_cast<int>(i);
    return strict(a, a, std::move(om), std::move(mm));
}

CheckReport check_lax(const LaxMorphism& m, int m_max, int sample, unsigned seed,
                      const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "lax morphism coherence";
    Rng rng(seed);
    const Algebra& A = *m.src;
    const Algebra& B = *m.dst;
    const Operad& O = *A.op;

    // (3) unit cell
    for (int k = 0; k < A.carrier.n_objects(); ++k) {
        ++rep.checked;
        try {
            if (m.cell(O.unit(), {k}) != B.carrier.identity(m.obj_map[k]))
                rep.fail("3.3(3) unit cell", A.carrier.object_id(k));
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }

    // (1) naturality in both variables
    for (int t = 0; t < sample; ++t) {
        int n = 1 + rng.upto(std::min(3, m_max));
        auto pool = O.objects(n, bd);
        if (pool.empty()) continue;
        const OperadElt& A1 = pool[rng.upto(static_cast<int>(pool.size()))];
        const OperadElt& A2 = pool[rng.upto(static_cast<int>(pool.size()))];
        auto alpha = O.hom_witness(A1, A2);
        if (!alpha) continue;
        std::vector<int> us, Ks, K2s;
        for (int i = 0; i < n; ++i) {
            int u = rng.upto(A.carrier.n_morphisms());
            us.push_back(u);
            Ks.push_back(A.carrier.mor(u).src);
            K2s.push_back(A.carrier.mor(u).dst);
        }
        ++rep.checked;
        try {
            std::vector<int> fu, fK;
            for (int u : us) fu.push_back(m.mor_map[u]);
            int left = B.carrier.compose(m.mor_map[evaluate_mor(A, *alpha, us)],
                                         m.cell(A1, Ks));
            int right = B.carrier.compose(m.cell(A2, K2s), evaluate_mor(B, *alpha, fu));
            if (left != right)
                rep.fail("3.3(1) naturality", alpha->str());
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }

    // (2) multiplicativity over operad composition
    for (int t = 0; t < sample; ++t) {
        int n = 1 + rng.upto(2);
        auto poolA = O.objects(n, bd);
        if (poolA.empty()) continue;
        const OperadElt& A0 = poolA[rng.upto(static_cast<int>(poolA.size()))];
        std::vector<OperadElt> Bs;
        std::vector<std::vector<int>> blocks;
        std::vector<int> flat;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int r = O.has_nullary() ? rng.upto(3) : 1 + rng.upto(2);
            auto poolB = O.objects(r, bd);
            if (poolB.empty()) { ok = false; break; }
            Bs.push_back(poolB[rng.upto(static_cast<int>(poolB.size()))]);
            std::vector<int> blk;
            for (int j = 0; j < r; ++j) blk.push_back(rng.upto(A.carrier.n_objects()));
            for (int x : blk) flat.push_back(x);
            blocks.push_back(blk);
        }
        if (!ok) continue;
        ++rep.checked;
        try {
            int lhs = m.cell(O.substitute(A0, Bs), flat);
            // rhs: cell(A0; B_i(blocks)) o A0(cell(B_i; blocks))
            std::vector<int> mids, cells;
            for (int i = 0; i < n; ++i) {
                mids.push_back(evaluate(A, Bs[i], blocks[i]));
                cells.push_back(m.cell(Bs[i], blocks[i]));
            }
            int rhs = B.carrier.compose(m.cell(A0, mids),
                                        evaluate_mor(B, O.identity(A0), cells));
            if (lhs != rhs) rep.fail("3.3(2) multiplicativity", A0.str());
        } catch (const CapError&) {
            ++rep.skipped;
        }
    }
    return rep;
}

LaxMorphism compose_lax(const LaxMorphism& g, const LaxMorphism& f) {
    if (f.dst.get() != g.src.get())
        throw std::invalid_argument("compose_lax: carrier mismatch");
    LaxMorphism h;
    h.src = f.src;
    h.dst = g.dst;
    h.obj_map.resize(f.obj_map.size());
    h.mor_map.resize(f.mor_map.size());
    for (size_t i = 0; i < f.obj_map.size(); ++i) h.obj_map[i] = g.obj_map[f.obj_map[i]];
    for (size_t i = 0; i < f.mor_map.size(); ++i) h.mor_map[i] = g.mor_map[f.mor_map[i]];
    auto gf = f;    // copies keep the closures alive
    auto gg = g;
    h.cell = [gf, gg](const OperadElt& A, const std::vector<int>& Ks) {
        std::vector<int> fK;
        for (int k : Ks) fK.push_back(gf.obj_map[k]);
        int upper = gg.mor_map[gf.cell(A, Ks)];
        int lower = gg.cell(A, fK);
        return gg.dst->carrier.compose(upper, lower);
    };
    return h;
}

bool lax_equal(const LaxMorphism& a, const LaxMorphism& b, int m_max,
               const EnumBudget& bd) {
    if (a.obj_map != b.obj_map || a.mor_map != b.mor_map) return false;
    const Operad& O = *a.src->op;
    int nobj = a.src->carrier.n_objects();
    for (int n = 1; n <= m_max; ++n) {
        auto pool = O.objects(n, bd);
        std::vector<int> ks(n, 0);
        while (true) {
            for (const auto& A : pool) {
                try {
                    if (a.cell(A, ks) != b.cell(A, ks)) return false;
                } catch (const CapError&) {
                }
            }
            int d = 0;
            while (d < n && ++ks[d] == nobj) ks[d++] = 0;
            if (d == n) break;
        }
    }
    return true;
}

AlgDiagram AlgDiagram::constant(const FinCat& L, std::shared_ptr<const Algebra> a) {
    AlgDiagram X;
    X.base = &L;
    X.op = a->op;
    X.fiber.assign(L.n_objects(), a);
    for (int m = 0; m < L.n_morphisms(); ++m)
        X.fiber_mor.push_back(LaxMorphism::identity_of(a));
    return X;
}

CheckReport check_diagram(const AlgDiagram& X, int m_max, int sample, unsigned seed,
                          const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "algebra diagram";
    const FinCat& L = *X.base;
    for (int o = 0; o < L.n_objects(); ++o) {
        auto r = check_algebra(*X.fiber[o], m_max, sample, seed + o, bd);
        rep.checked += r.checked;
        rep.skipped += r.skipped;
        if (!r.ok()) rep.fail("fiber algebra " + L.object_id(o), r.issues[0].law);
    }
    for (int m = 0; m < L.n_morphisms(); ++m) {
        auto r = check_lax(X.fiber_mor[m], m_max, sample, seed + 31 * m, bd);
        rep.checked += r.checked;
        rep.skipped += r.skipped;
        if (!r.ok())
            rep.fail("lax morphism at " + L.mor(m).id,
                     r.issues[0].law + ": " + r.issues[0].detail);
    }
    for (int o = 0; o < L.n_objects(); ++o) {
        ++rep.checked;
        if (!lax_equal(X.fiber_mor[L.identity(o)], LaxMorphism::identity_of(
                           std::const_pointer_cast<const Algebra>(X.fiber[o])),
                       std::min(m_max, 2), bd))
            rep.fail("X(id) = id", L.object_id(o));
    }
    for (int g = 0; g < L.n_morphisms(); ++g)
        for (int f = 0; f < L.n_morphisms(); ++f) {
            int gf = L.compose(g, f);
            if (gf < 0) continue;
            ++rep.checked;
            if (!lax_equal(X.fiber_mor[gf],
                           compose_lax(X.fiber_mor[g], X.fiber_mor[f]),
                           std::min(m_max, 2), bd))
                rep.fail("X(g o f) = X(g) o X(f)", L.mor(g).id + " o " + L.mor(f).id);
        }
    return rep;
}

DiagramCone DiagramCone::identity_cone(const AlgDiagram& X) {
    DiagramCone k;
    k.X = &X;
    k.target = X.fiber[0];
    for (int o = 0; o < X.base->n_objects(); ++o)
        k.leg.push_back(LaxMorphism::identity_of(X.fiber[o]));
    for (int m = 0; m < X.base->n_morphisms(); ++m) {
        const auto& lax = X.fiber_mor[m];
        auto tgt = k.target;
        k.cell2.push_back([tgt, lax](int K) {
            return tgt->carrier.identity(lax.obj_map[K]);
        });
    }
    return k;
}

CheckReport check_cone(const DiagramCone& k, int m_max, int sample, unsigned seed,
                       const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "diagram cone";
    const AlgDiagram& X = *k.X;
    const FinCat& L = *X.base;
    const Algebra& S = *k.target;
    Rng rng(seed);

    for (int o = 0; o < L.n_objects(); ++o) {
        auto r = check_lax(k.leg[o], m_max, sample, seed + o, bd);
        rep.checked += r.checked;
        rep.skipped += r.skipped;
        if (!r.ok()) rep.fail("cone leg at " + L.object_id(o), r.issues[0].law);
    }
    // k_id = id
    for (int o = 0; o < L.n_objects(); ++o) {
        int m = L.identity(o);
        for (int K = 0; K < X.fiber[o]->carrier.n_objects(); ++K) {
            ++rep.checked;
            if (k.cell2[m](K) != S.carrier.identity(k.leg[o].obj_map[K]))
                rep.fail("k_id = id", L.object_id(o));
        }
    }
    // cocycle k_{l1 o l0} = (k_{l1} o1 X(l0)) o2 k_{l0}
    for (int g = 0; g < L.n_morphisms(); ++g)
        for (int f = 0; f < L.n_morphisms(); ++f) {
            int gf = L.compose(g, f);
            if (gf < 0) continue;
            int src_o = L.mor(f).src;
            for (int K = 0; K < X.fiber[src_o]->carrier.n_objects(); ++K) {
                ++rep.checked;
                int lhs = k.cell2[gf](K);
                int rhs = S.carrier.compose(k.cell2[g](X.fiber_mor[f].obj_map[K]),
                                            k.cell2[f](K));
                if (lhs != rhs)
                    rep.fail("cocycle", L.mor(g).id + " o " + L.mor(f).id);
            }
        }
    // naturality of the 2-cells in the carrier variable
    for (int m = 0; m < L.n_morphisms(); ++m) {
        int a = L.mor(m).src, b = L.mor(m).dst;
        const auto& Xl = X.fiber_mor[m];
        for (int u = 0; u < X.fiber[a]->carrier.n_morphisms(); ++u) {
            ++rep.checked;
            const auto& md = X.fiber[a]->carrier.mor(u);
            int lhs = S.carrier.compose(k.cell2[m](md.dst), k.leg[a].mor_map[u]);
            int rhs = S.carrier.compose(k.leg[b].mor_map[Xl.mor_map[u]],
                                        k.cell2[m](md.src));
            if (lhs != rhs) rep.fail("2-cell naturality", L.mor(m).id);
        }
        (void)b;
    }
    // lax compatibility of the 2-cells (Appendix-A condition)
    for (int m = 0; m < L.n_morphisms(); ++m) {
        int a = L.mor(m).src, b = L.mor(m).dst;
        const auto& Xl = X.fiber_mor[m];
        const Operad& O = *X.op;
        for (int t = 0; t < sample; ++t) {
            int n = 1 + rng.upto(std::min(2, m_max));
            auto pool = O.objects(n, bd);
            if (pool.empty()) continue;
            const OperadElt& A = pool[rng.upto(static_cast<int>(pool.size()))];
            std::vector<int> Ks;
            for (int i = 0; i < n; ++i)
                Ks.push_back(rng.upto(X.fiber[a]->carrier.n_objects()));
            ++rep.checked;
            try {
                int AK = evaluate(*X.fiber[a], A, Ks);
                int lhs = S.carrier.compose(k.cell2[m](AK), k.leg[a].cell(A, Ks));
                std::vector<int> XlK, jlams;
                for (int K : Ks) {
                    XlK.push_back(Xl.obj_map[K]);
                    jlams.push_back(k.cell2[m](K));
                }
                int rhs = S.carrier.compose(
                    k.leg[b].mor_map[Xl.cell(A, Ks)],
                    S.carrier.compose(k.leg[b].cell(A, XlK),
                                      evaluate_mor(S, O.identity(A), jlams)));
                if (lhs != rhs) rep.fail("2-cell lax compatibility", L.mor(m).id);
            } catch (const CapError&) {
                ++rep.skipped;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// free algebras

namespace {

std::string fobj_key(const OperadElt& A, const std::vector<int>& xs) {
    std::string s = A.str();
    for (int x : xs) s += "|" + std::to_string(x);
    return s;
}

std::string fmor_key(int src, int dst, const OperadMor& am, const std::vector<int>& gs) {
    std::string s = std::to_string(src) + ">" + std::to_string(dst) + ":" + am.str();
    for (int g : gs) s += "|" + std::to_string(g);
    return s;
}

struct FreeAlgebraTables {
    std::map<std::string, int> obj_ix, mor_ix;
};

} // namespace

int FreeAlgebra::obj_index(const OperadElt& A, const std::vector<int>& xs) const {
    for (size_t i = 0; i < objs.size(); ++i)
        if (objs[i].A == A && objs[i].xs == xs) return static_cast<int>(i);
    return -1;
}

int FreeAlgebra::mor_index(const FMor& m) const {
    for (size_t i = 0; i < mors.size(); ++i) {
        const FMor& o = mors[i];
        if (o.src == m.src && o.dst == m.dst && o.gs == m.gs &&
            alg->op->mor_equal(o.am, m.am))
            return static_cast<int>(i);
    }
    return -1;
}

int FreeAlgebra::intern_obj(const OperadElt& A, const std::vector<int>& xs) const {
    const Operad& O = *alg->op;
    Perm tau = O.twist(A);
    OperadElt rep = O.act(A, tau.inverse());
    Perm ti = tau.inverse();
    std::vector<int> nxs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) nxs[i] = xs[ti(static_cast<int>(i) + 1) - 1];
    int ix = obj_index(rep, nxs);
    if (ix < 0) throw CapError("free algebra: object outside the arity cap");
    return ix;
}

int FreeAlgebra::intern_mor(const OperadMor& am_raw, const std::vector<int>& gs_raw) const {
    const Operad& O = *alg->op;
    // normalize the source to its orbit representative
    Perm tau = O.twist(am_raw.src);
    Perm ti = tau.inverse();
    OperadMor am = O.act_mor(am_raw, ti);
    std::vector<int> gs(gs_raw.size());
    for (size_t i = 0; i < gs_raw.size(); ++i)
        gs[i] = gs_raw[ti(static_cast<int>(i) + 1) - 1];
    // endpoints
    std::vector<int> sxs(gs.size()), dxs_blind;
    for (size_t i = 0; i < gs.size(); ++i) sxs[i] = base->mor(gs[i]).src;
    int src = obj_index(am.src, sxs);
    // target: am.dst = act(rep_dst, sigma); slot i of the target tuple
    // receives the codomain of g over sigma
    Perm sigma = O.twist(am.dst);
    OperadElt drep = O.act(am.dst, sigma.inverse());
    std::vector<int> dxs(gs.size());
    for (size_t i = 1; i <= gs.size(); ++i) {
        // g_i lands in slot sigma(i) of the un-normalized target tuple
        dxs[sigma(static_cast<int>(i)) - 1] = base->mor(gs[i - 1]).dst;
    }
    int dst = obj_index(drep, dxs);
    if (src < 0 || dst < 0) throw CapError("free algebra: morphism outside the cap");
    FMor m;
    m.src = src;
    m.dst = dst;
    m.am = am;
    m.gs = gs;
    int ix = mor_index(m);
    if (ix < 0) throw CapError("free algebra: morphism not materialized");
    return ix;
}

FreeAlgebra free_algebra(const FinCat& X, std::shared_ptr<const Operad> O, int cap,
                         const EnumBudget& bd) {
    if (cap < 1) throw std::invalid_argument("free_algebra: cap must be >= 1");
    auto fa = std::make_shared<FreeAlgebra>();
    FreeAlgebra& F = *fa;
    F.base = &X;
    auto alg = std::make_shared<Algebra>();
    F.alg = alg;
    alg->op = O;
    alg->partial = true;
    alg->cap = cap;

    // objects: orbit representatives paired with base tuples
    for (int n = 0; n <= cap; ++n) {
        if (n == 0 && !O->has_nullary()) continue;
        for (const auto& A : O->objects(n, bd)) {
            if (!O->twist(A).is_identity()) continue;
            std::vector<int> xs(n, 0);
            while (true) {
                F.objs.push_back({A, xs});
                alg->carrier.add_object("[" + fobj_key(A, xs) + "]");
                int d = 0;
                while (d < n && ++xs[d] == X.n_objects()) xs[d++] = 0;
                if (d == n || n == 0) break;
            }
        }
    }
    // morphisms: (sigma, alpha: A -> B . sigma, g_i: x_i -> y_{sigma(i)})
    for (size_t si = 0; si < F.objs.size(); ++si)
        for (size_t di = 0; di < F.objs.size(); ++di) {
            const auto& so = F.objs[si];
            const auto& dd = F.objs[di];
            int n = so.A.arity();
            if (dd.A.arity() != n) continue;
            for (const auto& sigma : Perm::all(n)) {
                OperadElt tgt = O->act(dd.A, sigma);
                for (const auto& alpha : O->homset(so.A, tgt, bd)) {
                    // choices of g_i
                    std::vector<std::vector<int>> choice(n);
                    bool ok = true;
                    for (int i = 1; i <= n; ++i) {
                        choice[i - 1] = X.hom(so.xs[i - 1], dd.xs[sigma(i) - 1]);
                        if (choice[i - 1].empty()) { ok = false; break; }
                    }
                    if (!ok) continue;
                    std::vector<size_t> ix(n, 0);
                    while (true) {
                        FreeAlgebra::FMor m;
                        m.src = static_cast<int>(si);
                        m.dst = static_cast<int>(di);
                        m.am = alpha;
                        for (int i = 0; i < n; ++i) m.gs.push_back(choice[i][ix[i]]);
                        bool is_id = si == di && sigma.is_identity() &&
                                     O->mor_equal(m.am, O->identity(so.A));
                        if (is_id)
                            for (int i = 0; i < n; ++i)
                                if (!X.is_identity(m.gs[i])) is_id = false;
                        if (is_id) {
                            // already present as the carrier identity
                            F.mors.resize(
                                std::max(F.mors.size(),
                                         static_cast<size_t>(
                                             alg->carrier.identity(
                                                 static_cast<int>(si)) +
                                             1)));
                            F.mors[alg->carrier.identity(static_cast<int>(si))] = m;
                        } else {
                            int mi = alg->carrier.add_morphism(
                                "m" + std::to_string(alg->carrier.n_morphisms()),
                                static_cast<int>(si), static_cast<int>(di));
                            F.mors.resize(std::max(F.mors.size(),
                                                   static_cast<size_t>(mi + 1)));
                            F.mors[mi] = m;
                        }
                        int d = 0;
                        while (d < n && ++ix[d] == choice[d].size()) ix[d++] = 0;
                        if (d == n || n == 0) break;
                    }
                }
            }
        }
    // composition table
    for (int g = 0; g < alg->carrier.n_morphisms(); ++g)
        for (int f = 0; f < alg->carrier.n_morphisms(); ++f) {
            if (!alg->carrier.composable(g, f)) continue;
            const auto& mg = F.mors[g];
            const auto& mf = F.mors[f];
            // raw composite: act beta by sigma_f then compose
            Perm sf = O->twist(mf.am.dst);
            OperadMor beta = O->act_mor(mg.am, sf);
            OperadMor am = O->compose(beta, mf.am);
            std::vector<int> gs(mf.gs.size());
            for (size_t i = 1; i <= mf.gs.size(); ++i)
                gs[i - 1] = X.compose(mg.gs[sf(static_cast<int>(i)) - 1],
                                      mf.gs[i - 1]);
            FreeAlgebra::FMor m;
            m.src = mf.src;
            m.dst = mg.dst;
            m.am = am;
            m.gs = gs;
            int ix = F.mor_index(m);
            if (ix < 0) throw std::logic_error("free algebra: composite not found");
            alg->carrier.set_compose(g, f, ix);
        }

    // action closures
    const FreeAlgebra* fptr = fa.get();
    std::shared_ptr<const Operad> Op = O;
    alg->act_obj = [fptr, Op](const OperadElt& B, const std::vector<int>& ks) {
        std::vector<OperadElt> As;
        std::vector<int> xs;
        for (int k : ks) {
            As.push_back(fptr->objs[k].A);
            for (int x : fptr->objs[k].xs) xs.push_back(x);
        }
        OperadElt S = Op->substitute(B, As);
        if (S.arity() > fptr->alg->cap)
            throw CapError("free algebra action beyond cap");
        return fptr->intern_obj(S, xs);
    };
    alg->act_mor = [fptr, Op](const OperadMor& B, const std::vector<int>& us) {
        std::vector<OperadMor> ams;
        std::vector<int> gs;
        for (int u : us) {
            ams.push_back(fptr->mors[u].am);
            for (int g : fptr->mors[u].gs) gs.push_back(g);
        }
        OperadMor S = Op->substitute_mor(B, ams);
        if (S.src.arity() > fptr->alg->cap)
            throw CapError("free algebra action beyond cap");
        return fptr->intern_mor(S, gs);
    };

    alg->carrier.close_identities();
    // keep the registry alive alongside the algebra
    struct Holder {
        std::shared_ptr<FreeAlgebra> keep;
    };
    FreeAlgebra out = *fa;
    out.alg = alg;
    // the closures capture fa.get(); retain fa through the algebra object
    static std::vector<std::shared_ptr<FreeAlgebra>> registry;
    registry.push_back(fa);
    return out;
}

std::shared_ptr<Algebra> permutative_algebra(PermutativeData d) {
    auto data = std::make_shared<PermutativeData>(std::move(d));
    auto alg = std::make_shared<Algebra>();
    alg->op = make_sigma_tilde();
    alg->carrier = data->cat;
    alg->partial = false;

    auto fold_obj = [data](const std::vector<int>& xs) {
        int acc = data->unit_obj;
        for (int x : xs) acc = data->ten_obj[acc][x];
        return acc;
    };
    alg->act_obj = [data, fold_obj](const OperadElt& A, const std::vector<int>& ks) {
        // theta(pi; K) = tensor of K_{pi(j)}
        std::vector<int> ordered;
        for (int j = 1; j <= A.perm.degree(); ++j) ordered.push_back(ks[A.perm(j) - 1]);
        return fold_obj(ordered);
    };
    alg->act_mor = [data, fold_obj](const OperadMor& m, const std::vector<int>& us) {
        const FinCat& C = data->cat;
        int n = m.src.perm.degree();
        // tensor the u's in source order, then the canonical symmetry
        // morphism tensor in the source arrangement
        int acc = C.identity(data->unit_obj);
        std::vector<int> src_list;
        for (int j = 1; j <= n; ++j) src_list.push_back(us[m.src.perm(j) - 1]);
        for (int u : src_list) acc = data->ten_mor[acc][u];
        // now the permutation isomorphism from target-of-acc arrangement to
        // the dst arrangement, realized by adjacent symmetries
        std::vector<int> order;  // current value at each slot: source index
        for (int j = 1; j <= n; ++j) order.push_back(m.src.perm(j));
        std::vector<int> objs;
        for (int j : order) objs.push_back(C.mor(us[j - 1]).dst);
        std::vector<int> want;
        for (int j = 1; j <= n; ++j) want.push_back(m.dst.perm(j));
        int iso = C.identity(fold_obj(objs));
        // bubble the current order into the wanted order
        for (int pos = 0; pos < n; ++pos) {
            // find want[pos] in order at >= pos and bubble it left
            int at = pos;
            while (order[at] != want[pos]) ++at;
            for (int t = at; t > pos; --t) {
                // swap slots t-1, t with a symmetry component
                int left = data->unit_obj, right = data->unit_obj;
                for (int q = 0; q < t - 1; ++q) left = data->ten_obj[left][objs[q]];
                for (size_t q = t + 1; q < objs.size(); ++q)
                    right = data->ten_obj[right][objs[q]];
                int cab = data->sym[objs[t - 1]][objs[t]];
                // id_left (x) c (x) id_right
                int step = data->ten_mor[C.identity(left)][cab];
                step = data->ten_mor[step][C.identity(right)];
                iso = C.compose(step, iso);
                std::swap(order[t - 1], order[t]);
                std::swap(objs[t - 1], objs[t]);
            }
        }
        return C.compose(iso, acc);
    };
    return alg;
}

std::shared_ptr<Algebra> discrete_monoid_algebra(std::shared_ptr<const Operad> O,
                                                 int n_elements,
                                                 std::function<int(int, int)> add,
                                                 int unit) {
    auto alg = std::make_shared<Algebra>();
    alg->op = O;
    for (int i = 0; i < n_elements; ++i)
        alg->carrier.add_object("e" + std::to_string(i));
    alg->carrier.close_identities();
    auto addf = std::move(add);
    alg->act_obj = [addf, unit](const OperadElt& A, const std::vector<int>& ks) {
        // commutative sum of the arguments; word structure is irrelevant
        (void)A;
        int acc = unit;
        for (int k : ks) acc = addf(acc, k);
        return acc;
    };
    const Algebra* aptr = alg.get();
    alg->act_mor = [aptr](const OperadMor& m, const std::vector<int>& us) {
        std::vector<int> ks;
        for (int u : us) ks.push_back(aptr->carrier.mor(u).src);
        int src = aptr->act_obj(m.src, ks);
        return aptr->carrier.identity(src);
    };
    return alg;
}

} // namespace hocat
