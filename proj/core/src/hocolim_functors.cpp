#include "hocat/hocolim_ops.hpp"

#include <cassert>
#include <stdexcept>

namespace hocat {

DiagramCone universal_cone(const HocolimWindow& W) {
    const AlgDiagram& X = W.hc->diagram();
    const FinCat& L = *X.base;
    DiagramCone k;
    k.X = &X;
    k.target = W.alg;
    auto hc = W.hc;
    auto* Wp = &W;
    for (int l = 0; l < L.n_objects(); ++l) {
        const auto& XL = X.fiber[l];
        LaxMorphism leg;
        leg.src = XL;
        leg.dst = W.alg;
        leg.obj_map.resize(XL->carrier.n_objects());
        leg.mor_map.resize(XL->carrier.n_morphisms());
        for (int K = 0; K < XL->carrier.n_objects(); ++K) {
            int ix = Wp->obj_index(hc->object(X.op->unit(), {{K, l}}));
            if (ix < 0) throw CapError("universal_cone: window too small");
            leg.obj_map[K] = ix;
        }
        for (int u = 0; u < XL->carrier.n_morphisms(); ++u) {
            int ix = Wp->mor_index(hc->atom_carrier(u, l));
            if (ix < 0) throw CapError("universal_cone: window too small");
            leg.mor_map[u] = ix;
        }
        leg.cell = [hc, Wp, l](const OperadElt& A, const std::vector<int>& Ks) {
            int ix = Wp->mor_index(hc->atom_eval(A, Ks, l));
            if (ix < 0) throw CapError("universal_cone: evaluation atom outside window");
            return ix;
        };
        k.leg.push_back(std::move(leg));
    }
    for (int m = 0; m < L.n_morphisms(); ++m) {
        k.cell2.push_back([hc, Wp, m](int K) {
            int ix = Wp->mor_index(hc->atom_index(m, K));
            if (ix < 0) throw CapError("universal_cone: index atom outside window");
            return ix;
        });
    }
    return k;
}

LaxMorphism StrictHom::as_lax() const {
    return LaxMorphism::strict(src, dst, obj_map, mor_map);
}

StrictHom induced_r(const HocolimWindow& W, const DiagramCone& k) {
    const AlgDiagram& X = W.hc->diagram();
    const Operad& O = *X.op;
    const Algebra& S = *k.target;
    StrictHom r;
    r.src = W.alg;
    r.dst = k.target;
    r.obj_map.resize(W.objs.size());
    r.mor_map.resize(W.mors.size());
    for (size_t o = 0; o < W.objs.size(); ++o) {
        const HCObject& y = W.objs[o];
        std::vector<int> xs;
        for (const auto& [K, l] : y.pairs) xs.push_back(k.leg[l].obj_map[K]);
        r.obj_map[o] = evaluate(S, y.A, xs);
    }
    for (size_t mi = 0; mi < W.mors.size(); ++mi) {
        const HCMorphism& m = W.mors[mi];
        int arity_m = m.src.A.arity();
        Perm sigma = Hocolim::fiber_perm(m.fibers, arity_m);
        Perm si = sigma.inverse();
        // x'_i = k_{L_{si(i)}}(K_{si(i)})
        std::vector<int> xs(arity_m);
        for (int i = 1; i <= arity_m; ++i) {
            const auto& [K, l] = m.src.pairs[si(i) - 1];
            xs[i - 1] = k.leg[l].obj_map[K];
        }
        // stage 1: gamma evaluated in S
        OperadMor g0 = O.act_mor(m.gamma, si);
        std::vector<int> id_xs;
        for (int x : xs) id_xs.push_back(S.carrier.identity(x));
        int st = evaluate_mor(S, g0, id_xs);
        // stage 2: index 2-cells
        OperadElt B = O.substitute(m.dst.A, m.C);
        {
            std::vector<int> cells(arity_m);
            for (int i = 1; i <= arity_m; ++i) {
                int orig = si(i);
                cells[i - 1] = k.cell2[m.lambda[orig - 1]](m.src.pairs[orig - 1].first);
            }
            st = S.carrier.compose(evaluate_mor(S, O.identity(B), cells), st);
        }
        // stage 3: evaluation cells of the legs
        int n = m.dst.A.arity();
        {
            std::vector<int> cells(n);
            for (int kk = 0; kk < n; ++kk) {
                int Lk = m.dst.pairs[kk].second;
                std::vector<int> args;
                for (int i : m.fibers[kk])
                    args.push_back(
                        X.fiber_mor[m.lambda[i - 1]].obj_map[m.src.pairs[i - 1].first]);
                cells[kk] = k.leg[Lk].cell(m.C[kk], args);
            }
            st = S.carrier.compose(evaluate_mor(S, O.identity(m.dst.A), cells), st);
        }
        // stage 4: carrier morphisms through the legs
        {
            std::vector<int> fs(n);
            for (int kk = 0; kk < n; ++kk)
                fs[kk] = k.leg[m.dst.pairs[kk].second].mor_map[m.f[kk]];
            st = S.carrier.compose(evaluate_mor(S, O.identity(m.dst.A), fs), st);
        }
        r.mor_map[mi] = st;
    }
    return r;
}

std::vector<int> two_cell_t(const HocolimWindow& W, const DiagramCone& k,
                            const ConeCell2& s) {
    const Algebra& S = *k.target;
    const Operad& O = *W.hc->diagram().op;
    std::vector<int> t(W.objs.size());
    for (size_t o = 0; o < W.objs.size(); ++o) {
        const HCObject& y = W.objs[o];
        std::vector<int> comps;
        for (const auto& [K, l] : y.pairs) comps.push_back(s.comp[l](K));
        t[o] = evaluate_mor(S, O.identity(y.A), comps);
    }
    return t;
}

AlgDiagram restrict_diagram(const AlgDiagram& X, const Functor& F) {
    AlgDiagram Y;
    Y.base = F.src;
    Y.op = X.op;
    for (int o = 0; o < F.src->n_objects(); ++o) Y.fiber.push_back(X.fiber[F.obj_map[o]]);
    for (int m = 0; m < F.src->n_morphisms(); ++m)
        Y.fiber_mor.push_back(X.fiber_mor[F.mor_map[m]]);
    return Y;
}

StrictHom change_index(const HocolimWindow& WN, const HocolimWindow& WL,
                       const Functor& F) {
    StrictHom h;
    h.src = WN.alg;
    h.dst = WL.alg;
    h.obj_map.resize(WN.objs.size());
    h.mor_map.resize(WN.mors.size());
    for (size_t o = 0; o < WN.objs.size(); ++o) {
        HCObject y = WN.objs[o];
        for (auto& [K, l] : y.pairs) l = F.obj_map[l];
        int ix = WL.obj_index(WL.hc->object(y.A, y.pairs));
        if (ix < 0) throw CapError("change_index: object outside the target window");
        h.obj_map[o] = ix;
    }
    for (size_t mi = 0; mi < WN.mors.size(); ++mi) {
        HCMorphism m = WN.mors[mi];
        HCObject src = m.src, dst = m.dst;
        for (auto& [K, l] : src.pairs) l = F.obj_map[l];
        for (auto& [K, l] : dst.pairs) l = F.obj_map[l];
        std::vector<int> lambda;
        for (int lm : m.lambda) lambda.push_back(F.mor_map[lm]);
        HCMorphism img = WL.hc->morphism(src, dst, m.fibers, m.C, m.gamma, lambda, m.f);
        int ix = WL.mor_index(img);
        if (ix < 0) throw CapError("change_index: morphism outside the target window");
        h.mor_map[mi] = ix;
    }
    return h;
}

std::vector<int> tau_star(const HocolimWindow& WN, const HocolimWindow& WL,
                          const NatTransformation& tau) {
    const Operad& O = *WN.hc->diagram().op;
    const Functor& F = *tau.from;
    const Functor& H = *tau.to;
    std::vector<int> out(WN.objs.size());
    for (size_t o = 0; o < WN.objs.size(); ++o) {
        const HCObject& y = WN.objs[o];
        // component: the morphism with index atoms tau(N_i)
        HCObject src = y, dst = y;
        for (auto& [K, l] : src.pairs) l = F.obj_map[l];
        std::vector<std::pair<int, int>> dpairs;
        std::vector<int> lambda, f;
        std::vector<std::vector<int>> fibers;
        std::vector<OperadElt> C;
        const AlgDiagram& XL = WL.hc->diagram();
        for (size_t i = 0; i < y.pairs.size(); ++i) {
            int N = y.pairs[i].second;
            int lm = tau.component[N];
            lambda.push_back(lm);
            int img = XL.fiber_mor[lm].obj_map[y.pairs[i].first];
            dpairs.emplace_back(img, H.obj_map[N]);
            fibers.push_back({static_cast<int>(i) + 1});
            C.push_back(O.unit());
            f.push_back(XL.fiber[H.obj_map[N]]->carrier.identity(img));
        }
        HCObject raw_dst{y.A, dpairs};
        HCMorphism comp = WL.hc->morphism(src, raw_dst, fibers, C, O.identity(y.A),
                                          lambda, f);
        int ix = WL.mor_index(comp);
        if (ix < 0) throw CapError("tau_star: component outside the window");
        out[o] = ix;
    }
    return out;
}

std::shared_ptr<Strictification> strictify(std::shared_ptr<const Algebra> A,
                                           int max_arity, const EnumBudget& bd) {
    auto st = std::make_shared<Strictification>();
    st->point = FinCat::point();
    st->diagram = AlgDiagram::constant(st->point, A);
    st->window = materialize_hocolim(st->diagram, max_arity, bd);
    st->j = universal_cone(st->window);
    // r from the identity cone of the constant diagram
    DiagramCone idc = DiagramCone::identity_cone(st->diagram);
    st->r = induced_r(st->window, idc);
    // s: id => j o r, component at [A;(K_i)] is the evaluation atom ev(A)
    st->s.resize(st->window.objs.size());
    for (size_t o = 0; o < st->window.objs.size(); ++o) {
        const HCObject& y = st->window.objs[o];
        std::vector<int> Ks;
        for (const auto& [K, l] : y.pairs) Ks.push_back(K);
        int ix = st->window.mor_index(st->window.hc->atom_eval(y.A, Ks, 0));
        if (ix < 0) throw CapError("strictify: evaluation atom outside window");
        st->s[o] = ix;
    }
    return st;
}

StrictHom free_section(const Strictification& st, const FreeAlgebra& F) {
    // k(B; y1..yn) = [B; ((id,y1),*),...]
    const auto& W = st.window;
    const Operad& O = *F.alg->op;
    StrictHom k;
    k.src = F.alg;
    k.dst = W.alg;
    k.obj_map.resize(F.objs.size());
    k.mor_map.resize(F.mors.size());
    for (size_t o = 0; o < F.objs.size(); ++o) {
        const auto& fo = F.objs[o];
        std::vector<std::pair<int, int>> pairs;
        for (int y : fo.xs) pairs.emplace_back(F.intern_obj(O.unit(), {y}), 0);
        int ix = W.obj_index(W.hc->object(fo.A, pairs));
        if (ix < 0) throw CapError("free_section: object outside window");
        k.obj_map[o] = ix;
    }
    for (size_t mi = 0; mi < F.mors.size(); ++mi) {
        const auto& fm = F.mors[mi];
        // image of (am, gs): the operad part becomes a gamma-atom, the gs
        // become carrier atoms of the wrapped generators
        const HCObject& src = W.objs[k.obj_map[fm.src]];
        const HCObject& dst = W.objs[k.obj_map[fm.dst]];
        int n = src.A.arity();
        Perm sigma = O.twist(fm.am.dst);
        std::vector<std::vector<int>> fibers(n);
        std::vector<OperadElt> C(n, O.unit());
        std::vector<int> lambda(n, st.point.identity(0));
        std::vector<int> f(n);
        // fibers encode sigma: input i lands in slot sigma(i)
        for (int i = 1; i <= n; ++i) fibers[sigma(i) - 1] = {i};
        for (int i = 1; i <= n; ++i) {
            // g_i: x_i -> y_{sigma(i)} wrapped as a unit pair morphism
            f[sigma(i) - 1] = F.intern_mor(O.identity(O.unit()), {fm.gs[i - 1]});
        }
        HCMorphism img =
            W.hc->morphism(src, dst, fibers, C, fm.am, lambda, f);
        int ix = W.mor_index(img);
        if (ix < 0) throw CapError("free_section: morphism outside window");
        k.mor_map[mi] = ix;
    }
    return k;
}

StrictHom eval_counit(const HocolimWindow& W) {
    const AlgDiagram& X = W.hc->diagram();
    for (size_t i = 1; i < X.fiber.size(); ++i)
        if (X.fiber[i].get() != X.fiber[0].get())
            throw std::invalid_argument("eval_counit: diagram is not constant");
    DiagramCone idc = DiagramCone::identity_cone(X);
    return induced_r(W, idc);
}

FinCat window_as_fincat(const HocolimWindow& W) {
    return W.alg->carrier;
}

AlgDiagram cat_diagram_as_alg(const CatDiagram& X, std::shared_ptr<const Operad> initial) {
    AlgDiagram Y;
    Y.base = X.base;
    Y.op = initial;
    for (const auto& c : X.fiber) {
        auto a = std::make_shared<Algebra>();
        a->op = initial;
        a->carrier = c;
        a->act_obj = [](const OperadElt&, const std::vector<int>& ks) { return ks[0]; };
        auto ap = a.get();
        a->act_mor = [ap](const OperadMor&, const std::vector<int>& us) {
            (void)ap;
            return us[0];
        };
        Y.fiber.push_back(a);
    }
    for (int m = 0; m < X.base->n_morphisms(); ++m) {
        Y.fiber_mor.push_back(LaxMorphism::strict(Y.fiber[X.base->mor(m).src],
                                                  Y.fiber[X.base->mor(m).dst],
                                                  X.fiber_mor[m].obj_map,
                                                  X.fiber_mor[m].mor_map));
    }
    return Y;
}

} // namespace hocat
