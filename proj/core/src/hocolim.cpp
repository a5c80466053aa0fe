#include "hocat/hocolim.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hocat {

std::string HCObject::str() const {
    std::string s = "[" + A.str() + ";";
    for (const auto& [k, l] : pairs)
        s += " (" + std::to_string(k) + "," + std::to_string(l) + ")";
    return s + "]";
}

std::string HCMorphism::str() const {
    std::string s = src.str() + " => " + dst.str() + " {phi";
    for (const auto& F : fibers) {
        s += " {";
        for (size_t i = 0; i < F.size(); ++i) s += (i ? "," : "") + std::to_string(F[i]);
        s += "}";
    }
    s += "; C";
    for (const auto& c : C) s += " " + c.str();
    s += "; g " + gamma.str() + "; l";
    for (int l : lambda) s += " " + std::to_string(l);
    s += "; f";
    for (int x : f) s += " " + std::to_string(x);
    return s + "}";
}

Hocolim::Hocolim(const AlgDiagram& X) : X_(&X) {}

Perm Hocolim::fiber_perm(const std::vector<std::vector<int>>& fibers, int m) {
    std::vector<int> concat;
    for (const auto& F : fibers) concat.insert(concat.end(), F.begin(), F.end());
    assert(static_cast<int>(concat.size()) == m);
    return Perm(concat).inverse();
}

HCObject Hocolim::object(const OperadElt& A,
                         const std::vector<std::pair<int, int>>& pairs) const {
    const Operad& O = op();
    if (A.arity() != static_cast<int>(pairs.size()))
        throw std::invalid_argument("hc_object: arity/pair mismatch");
    for (const auto& [k, l] : pairs) {
        if (l < 0 || l >= X_->base->n_objects())
            throw std::invalid_argument("hc_object: bad index object");
        if (k < 0 || k >= X_->fiber[l]->carrier.n_objects())
            throw std::invalid_argument("hc_object: bad carrier object");
    }
    Perm tau = O.twist(A);
    HCObject o;
    o.A = O.act(A, tau.inverse());
    Perm ti = tau.inverse();
    o.pairs.resize(pairs.size());
    for (size_t i = 1; i <= pairs.size(); ++i)
        o.pairs[i - 1] = pairs[ti(static_cast<int>(i)) - 1];
    return o;
}

void Hocolim::validate_typing(const HCMorphism& m) const {
    const Operad& O = op();
    int arity_m = m.src.A.arity(), arity_n = m.dst.A.arity();
    if (static_cast<int>(m.lambda.size()) != arity_m ||
        static_cast<int>(m.fibers.size()) != arity_n ||
        static_cast<int>(m.C.size()) != arity_n ||
        static_cast<int>(m.f.size()) != arity_n)
        throw std::invalid_argument("hc_morphism: size mismatch");
    // fibers partition 1..m
    std::vector<bool> seen(arity_m + 1, false);
    for (size_t k = 0; k < m.fibers.size(); ++k) {
        if (static_cast<int>(m.fibers[k].size()) != m.C[k].arity())
            throw std::invalid_argument("hc_morphism: factor arity mismatch");
        for (int i : m.fibers[k]) {
            if (i < 1 || i > arity_m || seen[i])
                throw std::invalid_argument("hc_morphism: fibers do not partition");
            seen[i] = true;
        }
    }
    for (int i = 1; i <= arity_m; ++i)
        if (!seen[i]) throw std::invalid_argument("hc_morphism: fibers miss an input");
    // lambda typing and f typing
    const FinCat& L = *X_->base;
    for (int i = 1; i <= arity_m; ++i) {
        int lam = m.lambda[i - 1];
        int k = 0;
        for (size_t t = 0; t < m.fibers.size(); ++t)
            if (std::find(m.fibers[t].begin(), m.fibers[t].end(), i) != m.fibers[t].end())
                k = static_cast<int>(t);
        if (L.mor(lam).src != m.src.pairs[i - 1].second ||
            L.mor(lam).dst != m.dst.pairs[k].second)
            throw std::invalid_argument("hc_morphism: lambda typing");
    }
    // gamma endpoints
    Perm sigma = fiber_perm(m.fibers, arity_m);
    OperadElt want = O.act(O.substitute(m.dst.A, m.C), sigma);
    if (!(m.gamma.src == m.src.A) || !(m.gamma.dst == want))
        throw std::invalid_argument("hc_morphism: gamma endpoints");
    // f_k: C_k(lambda K(fiber)) -> K'_k
    for (size_t k = 0; k < m.fibers.size(); ++k) {
        int Lk = m.dst.pairs[k].second;
        const Algebra& XL = *X_->fiber[Lk];
        std::vector<int> args;
        for (int i : m.fibers[k])
            args.push_back(X_->fiber_mor[m.lambda[i - 1]].obj_map[m.src.pairs[i - 1].first]);
        int want_src = evaluate(XL, m.C[k], args);
        const auto& fd = XL.carrier.mor(m.f[k]);
        if (fd.src != want_src || fd.dst != m.dst.pairs[k].first)
            throw std::invalid_argument("hc_morphism: f typing");
    }
}

HCMorphism Hocolim::normalize(HCMorphism m) const {
    const Operad& O = op();
    int arity_m = m.src.A.arity();
    // move 2: sort each fiber, acting on the factor
    for (size_t k = 0; k < m.fibers.size(); ++k) {
        if (std::is_sorted(m.fibers[k].begin(), m.fibers[k].end())) continue;
        Perm rho = sorting_perm(m.fibers[k]);
        std::vector<int> sorted(m.fibers[k].size());
        for (size_t j = 1; j <= sorted.size(); ++j)
            sorted[j - 1] = m.fibers[k][rho(static_cast<int>(j)) - 1];
        m.fibers[k] = sorted;
        m.C[k] = O.act(m.C[k], rho);
    }
    // recompute gamma target decomposition implicitly; then move 3
    validate_typing(m);
    if (O.eq_strategy() == Operad::EqStrategy::Normalize) {
        Perm sigma = fiber_perm(m.fibers, arity_m);
        OperadMor alpha = O.act_mor(m.gamma, sigma.inverse());
        auto fi = O.normalize_factorization(alpha.src, m.dst.A, m.C, alpha);
        // rewrite (C, gamma) to the canonical initial object and transport f
        std::vector<int> f2(m.f.size());
        for (size_t k = 0; k < m.fibers.size(); ++k) {
            int Lk = m.dst.pairs[k].second;
            const Algebra& XL = *X_->fiber[Lk];
            std::vector<int> arg_ids;
            for (int i : m.fibers[k]) {
                int obj =
                    X_->fiber_mor[m.lambda[i - 1]].obj_map[m.src.pairs[i - 1].first];
                arg_ids.push_back(XL.carrier.identity(obj));
            }
            int cmp_mor = evaluate_mor(XL, fi.comparisons[k], arg_ids);
            f2[k] = XL.carrier.compose(m.f[k], cmp_mor);
        }
        m.C = fi.factors;
        m.gamma = O.act_mor(fi.rho, sigma);
        m.f = f2;
        validate_typing(m);
    }
    return m;
}

HCMorphism Hocolim::morphism(const HCObject& raw_src, const HCObject& raw_dst,
                             std::vector<std::vector<int>> fibers,
                             std::vector<OperadElt> C, OperadMor gamma,
                             std::vector<int> lambda, std::vector<int> f) const {
    const Operad& O = op();
    HCMorphism m;
    // normalize endpoints first (moves 4 and 1)
    Perm t1 = O.twist(raw_src.A);
    Perm t2 = O.twist(raw_dst.A);
    m.src = object(raw_src.A, raw_src.pairs);
    m.dst = object(raw_dst.A, raw_dst.pairs);
    int arity_m = raw_src.A.arity();
    if (!t1.is_identity()) {
        // move 4 with t = t1^{-1}: relabel inputs i -> t1(i)
        Perm ti = t1.inverse();
        std::vector<int> lambda2(arity_m);
        for (int i = 1; i <= arity_m; ++i) lambda2[i - 1] = lambda[ti(i) - 1];
        for (auto& F : fibers)
            for (auto& i : F) i = t1(i);
        lambda = std::move(lambda2);
        gamma = O.act_mor(gamma, ti);
    }
    if (!t2.is_identity()) {
        // move 1 with t = t2^{-1}: slot k' holds old slot t2^{-1}(k')
        Perm ti = t2.inverse();
        int arity_n = raw_dst.A.arity();
        std::vector<std::vector<int>> fibers2(arity_n);
        std::vector<OperadElt> C2(arity_n);
        std::vector<int> f2(arity_n);
        for (int k = 1; k <= arity_n; ++k) {
            fibers2[k - 1] = fibers[ti(k) - 1];
            C2[k - 1] = C[ti(k) - 1];
            f2[k - 1] = f[ti(k) - 1];
        }
        fibers = std::move(fibers2);
        C = std::move(C2);
        f = std::move(f2);
    }
    m.fibers = std::move(fibers);
    m.C = std::move(C);
    m.gamma = std::move(gamma);
    m.lambda = std::move(lambda);
    m.f = std::move(f);
    return normalize(std::move(m));
}

bool Hocolim::mor_equal(const HCMorphism& a, const HCMorphism& b) const {
    const Operad& O = op();
    if (!(a.src == b.src) || !(a.dst == b.dst)) return false;
    if (a.fibers != b.fibers || a.lambda != b.lambda) return false;
    if (O.eq_strategy() == Operad::EqStrategy::Normalize) {
        if (a.C.size() != b.C.size()) return false;
        for (size_t k = 0; k < a.C.size(); ++k)
            if (!(a.C[k] == b.C[k])) return false;
        return O.mor_equal(a.gamma, b.gamma) && a.f == b.f;
    }
    // Solve strategy: find block morphisms carrying b's data to a's
    Perm sigma = fiber_perm(a.fibers, a.src.A.arity());
    OperadMor alpha = O.act_mor(b.gamma, sigma.inverse());
    OperadMor beta = O.act_mor(a.gamma, sigma.inverse());
    auto sol = O.factor_block(a.dst.A, b.C, a.C, alpha, beta, {});
    if (!sol) return false;
    // f transport: a.f[k] o theta(sol_k) must equal b.f[k]
    for (size_t k = 0; k < a.fibers.size(); ++k) {
        int Lk = a.dst.pairs[k].second;
        const Algebra& XL = *X_->fiber[Lk];
        std::vector<int> arg_ids;
        for (int i : a.fibers[k]) {
            int obj = X_->fiber_mor[a.lambda[i - 1]].obj_map[a.src.pairs[i - 1].first];
            arg_ids.push_back(XL.carrier.identity(obj));
        }
        int cmp = evaluate_mor(XL, (*sol)[k], arg_ids);
        if (XL.carrier.compose(a.f[k], cmp) != b.f[k]) return false;
    }
    return true;
}

HCMorphism Hocolim::identity(const HCObject& y) const {
    const Operad& O = op();
    int n = y.A.arity();
    HCMorphism m;
    m.src = m.dst = y;
    m.fibers.resize(n);
    for (int i = 1; i <= n; ++i) m.fibers[i - 1] = {i};
    m.C.assign(n, O.unit());
    m.gamma = O.identity(y.A);
    for (int i = 0; i < n; ++i) {
        m.lambda.push_back(X_->base->identity(y.pairs[i].second));
        m.f.push_back(X_->fiber[y.pairs[i].second]->carrier.identity(y.pairs[i].first));
    }
    validate_typing(m);
    return m;
}

HCMorphism Hocolim::compose_raw(const HCMorphism& v, const HCMorphism& u) const {
    const Operad& O = op();
    if (!(u.dst == v.src)) throw std::invalid_argument("hc_compose: not composable");
    int p = v.dst.A.arity();
    const FinCat& L = *X_->base;
    HCMorphism w;
    w.src = u.src;
    w.dst = v.dst;
    // E_k = D_k * (C_{j} for j in v's fiber k)
    for (int k = 0; k < p; ++k) {
        std::vector<OperadElt> cs;
        std::vector<int> fiber;
        for (int j : v.fibers[k]) {
            cs.push_back(u.C[j - 1]);
            fiber.insert(fiber.end(), u.fibers[j - 1].begin(), u.fibers[j - 1].end());
        }
        w.C.push_back(O.substitute(v.C[k], cs));
        w.fibers.push_back(fiber);
    }
    // gamma3 = (gamma2 * id_C) . sigma1  o  gamma1
    {
        std::vector<OperadMor> idC;
        for (const auto& c : u.C) idC.push_back(O.identity(c));
        Perm sigma1 = fiber_perm(u.fibers, u.src.A.arity());
        OperadMor mid = O.act_mor(O.substitute_mor(v.gamma, idC), sigma1);
        w.gamma = O.compose(mid, u.gamma);
    }
    // mu_i = rho_{phi(i)} o lambda_i
    int arity_m = u.src.A.arity();
    std::vector<int> phi_u(arity_m + 1, 0);
    for (size_t k = 0; k < u.fibers.size(); ++k)
        for (int i : u.fibers[k]) phi_u[i] = static_cast<int>(k) + 1;
    for (int i = 1; i <= arity_m; ++i)
        w.lambda.push_back(L.compose(v.lambda[phi_u[i] - 1], u.lambda[i - 1]));
    // h_k: g_k o D_k(rho(f_j)) o D_k(rho-cells)
    for (int k = 0; k < p; ++k) {
        int Lk = v.dst.pairs[k].second;
        const Algebra& XL = *X_->fiber[Lk];
        std::vector<int> cells, mapped_f;
        for (int j : v.fibers[k]) {
            const LaxMorphism& rho = X_->fiber_mor[v.lambda[j - 1]];
            std::vector<int> args;
            for (int i : u.fibers[j - 1])
                args.push_back(
                    X_->fiber_mor[u.lambda[i - 1]].obj_map[u.src.pairs[i - 1].first]);
            cells.push_back(rho.cell(u.C[j - 1], args));
            mapped_f.push_back(rho.mor_map[u.f[j - 1]]);
        }
        OperadMor idD = O.identity(v.C[k]);
        int st1 = evaluate_mor(XL, idD, cells);
        int st2 = evaluate_mor(XL, idD, mapped_f);
        w.f.push_back(XL.carrier.compose(v.f[k], XL.carrier.compose(st2, st1)));
    }
    return w;
}

HCMorphism Hocolim::compose(const HCMorphism& v, const HCMorphism& u) const {
    return normalize(compose_raw(v, u));
}

HCObject Hocolim::act(const OperadElt& B, const std::vector<HCObject>& ys) const {
    const Operad& O = op();
    std::vector<OperadElt> As;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& y : ys) {
        As.push_back(y.A);
        pairs.insert(pairs.end(), y.pairs.begin(), y.pairs.end());
    }
    return object(O.substitute(B, As), pairs);
}

HCMorphism Hocolim::act_mor(const OperadMor& B, const std::vector<HCMorphism>& us) const {
    const Operad& O = op();
    std::vector<OperadElt> srcA, dstA;
    std::vector<std::pair<int, int>> spairs, dpairs;
    std::vector<std::vector<int>> fibers;
    std::vector<OperadElt> C;
    std::vector<OperadMor> gammas;
    std::vector<int> lambda, f;
    int in_off = 0;
    for (const auto& u : us) {
        srcA.push_back(u.src.A);
        dstA.push_back(u.dst.A);
        spairs.insert(spairs.end(), u.src.pairs.begin(), u.src.pairs.end());
        dpairs.insert(dpairs.end(), u.dst.pairs.begin(), u.dst.pairs.end());
        for (const auto& F : u.fibers) {
            std::vector<int> shifted;
            for (int i : F) shifted.push_back(i + in_off);
            fibers.push_back(shifted);
        }
        C.insert(C.end(), u.C.begin(), u.C.end());
        gammas.push_back(u.gamma);
        lambda.insert(lambda.end(), u.lambda.begin(), u.lambda.end());
        f.insert(f.end(), u.f.begin(), u.f.end());
        in_off += u.src.A.arity();
    }
    HCObject raw_src{O.substitute(B.src, srcA), spairs};
    HCObject raw_dst{O.substitute(B.dst, dstA), dpairs};
    OperadMor gamma = O.substitute_mor(B, gammas);
    return morphism(raw_src, raw_dst, std::move(fibers), std::move(C), std::move(gamma),
                    std::move(lambda), std::move(f));
}

HCMorphism Hocolim::atom_operad(const OperadMor& g,
                                const std::vector<std::pair<int, int>>& pairs) const {
    const Operad& O = op();
    int n = g.src.arity();
    HCObject raw_src{g.src, pairs};
    HCObject raw_dst{g.dst, pairs};
    std::vector<std::vector<int>> fibers(n);
    for (int i = 1; i <= n; ++i) fibers[i - 1] = {i};
    std::vector<OperadElt> C(n, O.unit());
    // gamma: src -> dst * (units) = dst, i.e. g itself
    std::vector<int> lambda, f;
    for (int i = 0; i < n; ++i) {
        lambda.push_back(X_->base->identity(pairs[i].second));
        f.push_back(X_->fiber[pairs[i].second]->carrier.identity(pairs[i].first));
    }
    return morphism(raw_src, raw_dst, std::move(fibers), std::move(C), g,
                    std::move(lambda), std::move(f));
}

HCMorphism Hocolim::atom_index(int l_mor, int K) const {
    const Operad& O = op();
    const FinCat& L = *X_->base;
    int a = L.mor(l_mor).src, b = L.mor(l_mor).dst;
    HCObject raw_src{O.unit(), {{K, a}}};
    HCObject raw_dst{O.unit(), {{X_->fiber_mor[l_mor].obj_map[K], b}}};
    return morphism(raw_src, raw_dst, {{1}}, {O.unit()}, O.identity(O.unit()), {l_mor},
                    {X_->fiber[b]->carrier.identity(X_->fiber_mor[l_mor].obj_map[K])});
}

HCMorphism Hocolim::atom_eval(const OperadElt& Celt, const std::vector<int>& Ks,
                              int L) const {
    const Operad& O = op();
    std::vector<std::pair<int, int>> spairs;
    for (int k : Ks) spairs.emplace_back(k, L);
    int CK = evaluate(*X_->fiber[L], Celt, Ks);
    HCObject raw_src{Celt, spairs};
    HCObject raw_dst{O.unit(), {{CK, L}}};
    int n = Celt.arity();
    std::vector<std::vector<int>> fibers(1);
    for (int i = 1; i <= n; ++i) fibers[0].push_back(i);
    std::vector<int> lambda(n, X_->base->identity(L));
    return morphism(raw_src, raw_dst, std::move(fibers), {Celt},
                    O.identity(Celt), std::move(lambda),
                    {X_->fiber[L]->carrier.identity(CK)});
}

HCMorphism Hocolim::atom_carrier(int f_mor, int L) const {
    const Operad& O = op();
    const auto& md = X_->fiber[L]->carrier.mor(f_mor);
    HCObject raw_src{O.unit(), {{md.src, L}}};
    HCObject raw_dst{O.unit(), {{md.dst, L}}};
    return morphism(raw_src, raw_dst, {{1}}, {O.unit()}, O.identity(O.unit()),
                    {X_->base->identity(L)}, {f_mor});
}

std::vector<HCMorphism> Hocolim::decompose_atoms(const HCMorphism& m) const {
    const Operad& O = op();
    const FinCat& L = *X_->base;
    std::vector<HCMorphism> stages;
    int arity_m = m.src.A.arity();
    Perm sigma = fiber_perm(m.fibers, arity_m);
    Perm si = sigma.inverse();
    // permutation-free source: S0 = (A1 . sigma^{-1}; K_{sigma^{-1}(.)})
    OperadElt A0 = O.act(m.src.A, si);
    std::vector<std::pair<int, int>> p0(arity_m);
    for (int i = 1; i <= arity_m; ++i) p0[i - 1] = m.src.pairs[si(i) - 1];
    OperadElt B = O.substitute(m.dst.A, m.C);
    // stage 1: gamma-atom
    {
        OperadMor g0 = O.act_mor(m.gamma, si);  // A0 -> B
        HCMorphism st = atom_operad(g0, p0);
        if (!mor_equal(st, identity(st.src))) stages.push_back(st);
    }
    // stage 2: B(lambda_1,...,lambda_m) on the relabeled inputs
    std::vector<std::pair<int, int>> p1(arity_m);
    {
        std::vector<std::vector<int>> fibers(arity_m);
        std::vector<OperadElt> C(arity_m, O.unit());
        std::vector<int> lam;
        std::vector<int> f;
        for (int i = 1; i <= arity_m; ++i) {
            int orig = si(i);
            fibers[i - 1] = {i};
            int lm = m.lambda[orig - 1];
            lam.push_back(lm);
            int img = X_->fiber_mor[lm].obj_map[m.src.pairs[orig - 1].first];
            p1[i - 1] = {img, L.mor(lm).dst};
            f.push_back(X_->fiber[p1[i - 1].second]->carrier.identity(img));
        }
        HCObject raw_src{A0, p0};
        HCObject raw_dst{A0, p1};
        HCMorphism st = morphism(raw_src, raw_dst, std::move(fibers), std::move(C),
                                 O.identity(A0), std::move(lam), std::move(f));
        if (!mor_equal(st, identity(st.src))) stages.push_back(st);
    }
    // stage 3: A2(ev(C_1),...,ev(C_n))
    int n = m.dst.A.arity();
    std::vector<std::pair<int, int>> p2(n);
    {
        std::vector<std::vector<int>> fibers(n);
        std::vector<int> lam, f;
        int pos = 1;
        for (int k = 0; k < n; ++k) {
            int Lk = m.dst.pairs[k].second;
            std::vector<int> args;
            for (size_t j = 0; j < m.fibers[k].size(); ++j) {
                fibers[k].push_back(pos++);
                int orig = m.fibers[k][j];
                args.push_back(
                    X_->fiber_mor[m.lambda[orig - 1]].obj_map[m.src.pairs[orig - 1].first]);
            }
            int CK = evaluate(*X_->fiber[Lk], m.C[k], args);
            p2[k] = {CK, Lk};
            f.push_back(X_->fiber[Lk]->carrier.identity(CK));
        }
        for (int i = 0; i < arity_m; ++i)
            lam.push_back(L.identity(p1[i].second));
        HCObject raw_src{B, p1};
        HCObject raw_dst{m.dst.A, p2};
        HCMorphism st = morphism(raw_src, raw_dst, std::move(fibers),
                                 m.C, O.identity(B), std::move(lam), std::move(f));
        if (!mor_equal(st, identity(st.src))) stages.push_back(st);
    }
    // stage 4: A2(f_1,...,f_n)
    {
        std::vector<std::vector<int>> fibers(n);
        std::vector<OperadElt> C(n, O.unit());
        std::vector<int> lam, f;
        for (int k = 1; k <= n; ++k) {
            fibers[k - 1] = {k};
            lam.push_back(L.identity(p2[k - 1].second));
            f.push_back(m.f[k - 1]);
        }
        HCObject raw_src{m.dst.A, p2};
        HCMorphism st = morphism(raw_src, m.dst, std::move(fibers), std::move(C),
                                 O.identity(m.dst.A), std::move(lam), std::move(f));
        if (!mor_equal(st, identity(st.src))) stages.push_back(st);
    }
    if (stages.empty()) stages.push_back(identity(m.src));
    return stages;
}

// ---------------------------------------------------------------------------

int HocolimWindow::obj_index(const HCObject& o) const {
    for (size_t i = 0; i < objs.size(); ++i)
        if (objs[i] == o) return static_cast<int>(i);
    return -1;
}

int HocolimWindow::mor_index(const HCMorphism& m) const {
    for (size_t i = 0; i < mors.size(); ++i)
        if (hc->mor_equal(mors[i], m)) return static_cast<int>(i);
    return -1;
}

HocolimWindow materialize_hocolim(const AlgDiagram& X, int max_arity,
                                  const EnumBudget& bd) {
    HocolimWindow W;
    W.hc = std::make_shared<Hocolim>(X);
    const Operad& O = *X.op;
    const FinCat& L = *X.base;
    auto alg = std::make_shared<Algebra>();
    W.alg = alg;
    alg->op = X.op;
    alg->partial = true;
    alg->cap = max_arity;

    // objects: orbit representatives with all pair tuples
    for (int n = 0; n <= max_arity; ++n) {
        if (n == 0 && !O.has_nullary()) continue;
        for (const auto& A : O.objects(n, bd)) {
            if (!O.twist(A).is_identity()) continue;
            // tuples of (K, L)
            std::vector<std::pair<int, int>> all;
            for (int l = 0; l < L.n_objects(); ++l)
                for (int k = 0; k < X.fiber[l]->carrier.n_objects(); ++k)
                    all.emplace_back(k, l);
            if (all.empty() && n > 0) continue;
            std::vector<size_t> ix(n, 0);
            while (true) {
                HCObject o;
                o.A = A;
                for (int i = 0; i < n; ++i) o.pairs.push_back(all[ix[i]]);
                W.objs.push_back(o);
                alg->carrier.add_object(o.str());
                int d = 0;
                while (d < n && ++ix[d] == all.size()) ix[d++] = 0;
                if (d == n || n == 0) break;
            }
        }
    }
    // morphisms: enumerate five-part data between enumerated objects
    auto record = [&](const HCMorphism& m) {
        int si = W.obj_index(m.src), di = W.obj_index(m.dst);
        if (si < 0 || di < 0) return;
        for (const auto& prev : W.mors)
            if (prev.src == m.src && prev.dst == m.dst && W.hc->mor_equal(prev, m))
                return;
        bool is_id = W.hc->mor_equal(m, W.hc->identity(m.src));
        if (is_id && si == di) {
            W.mors.resize(std::max(W.mors.size(),
                                   static_cast<size_t>(alg->carrier.identity(si) + 1)));
            W.mors[alg->carrier.identity(si)] = m;
            return;
        }
        int mi = alg->carrier.add_morphism("hm" + std::to_string(alg->carrier.n_morphisms()),
                                           si, di);
        W.mors.resize(std::max(W.mors.size(), static_cast<size_t>(mi + 1)));
        W.mors[mi] = m;
    };
    for (const auto& so : W.objs)
        for (const auto& dd : W.objs) {
            int mm = so.A.arity(), nn = dd.A.arity();
            // all maps phi: {1..mm} -> {1..nn} as ascending fibers
            if (nn == 0 && mm > 0) continue;
            std::vector<int> phi(mm, 1);
            while (true) {
                std::vector<std::vector<int>> fibers(nn);
                for (int i = 1; i <= mm; ++i) fibers[phi[i - 1] - 1].push_back(i);
                // lambda candidates per input
                std::vector<std::vector<int>> lam_choices(mm);
                bool ok = true;
                for (int i = 1; i <= mm && ok; ++i) {
                    int k = phi[i - 1];
                    lam_choices[i - 1] =
                        L.hom(so.pairs[i - 1].second, dd.pairs[k - 1].second);
                    if (lam_choices[i - 1].empty()) ok = false;
                }
                if (ok) {
                    // C candidates per slot
                    std::vector<std::vector<OperadElt>> c_choices(nn);
                    for (int k = 0; k < nn && ok; ++k) {
                        c_choices[k] =
                            O.objects(static_cast<int>(fibers[k].size()), bd);
                        if (c_choices[k].empty()) ok = false;
                    }
                    if (ok) {
                        std::vector<size_t> lix(mm, 0);
                        while (ok) {
                            std::vector<int> lambda(mm);
                            for (int i = 0; i < mm; ++i)
                                lambda[i] = lam_choices[i][lix[i]];
                            std::vector<size_t> cix(nn, 0);
                            while (true) {
                                std::vector<OperadElt> C(nn, O.unit());
                                for (int k = 0; k < nn; ++k) C[k] = c_choices[k][cix[k]];
                                Perm sigma = Hocolim::fiber_perm(fibers, mm);
                                OperadElt tgt = O.act(O.substitute(dd.A, C), sigma);
                                for (const auto& gamma : O.homset(so.A, tgt, bd)) {
                                    // f candidates per slot
                                    std::vector<std::vector<int>> f_choices(nn);
                                    bool fok = true;
                                    for (int k = 0; k < nn && fok; ++k) {
                                        int Lk = dd.pairs[k].second;
                                        const Algebra& XL = *X.fiber[Lk];
                                        std::vector<int> args;
                                        for (int i : fibers[k])
                                            args.push_back(
                                                X.fiber_mor[lambda[i - 1]]
                                                    .obj_map[so.pairs[i - 1].first]);
                                        int src_obj = evaluate(XL, C[k], args);
                                        f_choices[k] =
                                            XL.carrier.hom(src_obj, dd.pairs[k].first);
                                        if (f_choices[k].empty()) fok = false;
                                    }
                                    if (!fok) continue;
                                    std::vector<size_t> fix(nn, 0);
                                    while (true) {
                                        std::vector<int> f(nn);
                                        for (int k = 0; k < nn; ++k)
                                            f[k] = f_choices[k][fix[k]];
                                        try {
                                            record(W.hc->morphism(so, dd, fibers, C,
                                                                   gamma, lambda, f));
                                        } catch (const std::exception&) {
                                        }
                                        int d = 0;
                                        while (d < nn &&
                                               ++fix[d] == f_choices[d].size())
                                            fix[d++] = 0;
                                        if (d == nn || nn == 0) break;
                                    }
                                }
                                int d = 0;
                                while (d < nn && ++cix[d] == c_choices[d].size())
                                    cix[d++] = 0;
                                if (d == nn || nn == 0) break;
                            }
                            int d = 0;
                            while (d < mm && ++lix[d] == lam_choices[d].size())
                                lix[d++] = 0;
                            if (d == mm || mm == 0) break;
                        }
                    }
                }
                int d = 0;
                while (d < mm && ++phi[d] > nn) phi[d++] = 1;
                if (d == mm || mm == 0) break;
            }
        }
    // composition table
    for (int g = 0; g < alg->carrier.n_morphisms(); ++g)
        for (int f = 0; f < alg->carrier.n_morphisms(); ++f) {
            if (!alg->carrier.composable(g, f)) continue;
            HCMorphism comp = W.hc->compose(W.mors[g], W.mors[f]);
            int ix = W.mor_index(comp);
            if (ix < 0)
                throw std::logic_error("hocolim window: composite escaped the window");
            alg->carrier.set_compose(g, f, ix);
        }
    alg->carrier.close_identities();

    // action closures
    auto* Wp = new HocolimWindow(W);  // closure-owned snapshot
    std::shared_ptr<HocolimWindow> keep(Wp);
    alg->act_obj = [keep](const OperadElt& B, const std::vector<int>& ks) {
        std::vector<HCObject> ys;
        for (int k : ks) ys.push_back(keep->objs[k]);
        HCObject o = keep->hc->act(B, ys);
        int ix = keep->obj_index(o);
        if (ix < 0) throw CapError("hocolim action beyond the window");
        return ix;
    };
    alg->act_mor = [keep](const OperadMor& B, const std::vector<int>& us) {
        std::vector<HCMorphism> ms;
        for (int u : us) ms.push_back(keep->mors[u]);
        HCMorphism m = keep->hc->act_mor(B, ms);
        int ix = keep->mor_index(m);
        if (ix < 0) throw CapError("hocolim action beyond the window");
        return ix;
    };
    return W;
}

} // namespace hocat
