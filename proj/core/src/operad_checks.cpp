#include <algorithm>
#include <map>
#include <random>

#include "hocat/operad.hpp"

namespace hocat {

namespace {

using Pool = std::vector<std::vector<OperadElt>>;  // by arity

Pool build_pool(const Operad& O, int m_max, const EnumBudget& bd) {
    Pool pool(m_max + 1);
    for (int n = 0; n <= m_max; ++n) {
        if (n == 0 && !O.has_nullary()) continue;
        pool[n] = O.objects(n, bd);
    }
    return pool;
}

// arity tuples r_1..r_n >= 0 with given sum
void arity_tuples(int n, int sum, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(n);
    struct R {
        int n;
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int i, int rem) {
            if (i == n) {
                if (rem == 0) out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[i] = v;
                go(i + 1, rem - v);
            }
        }
    } r{n, out, cur};
    r.go(0, sum);
}

struct Sampler {
    std::mt19937 rng;
    explicit Sampler(unsigned seed) : rng(seed) {}
    int upto(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
    const OperadElt* pick(const Pool& pool, int arity) {
        if (arity >= static_cast<int>(pool.size()) || pool[arity].empty()) return nullptr;
        return &pool[arity][upto(static_cast<int>(pool[arity].size()))];
    }
};

long count_tuples(const Pool& pool, const std::vector<int>& rs) {
    long c = 1;
    for (int r : rs) {
        if (r >= static_cast<int>(pool.size())) return 0;
        c *= static_cast<long>(pool[r].size());
        if (c == 0 || c > 1000000) return c;
    }
    return c;
}

} // namespace

CheckReport check_operad_axioms(const Operad& O, int m_max, int sample, unsigned seed,
                                const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "operad axioms: " + O.name();
    Pool pool = build_pool(O, m_max, bd);
    Sampler smp(seed);
    const long kExhaustLimit = 20000;

    // Sigma-freeness on objects and sampled morphisms
    for (int n = 1; n <= m_max; ++n) {
        auto perms = Perm::all(n);
        for (const auto& A : pool[n])
            for (const auto& s : perms) {
                if (s.is_identity()) continue;
                ++rep.checked;
                if (O.act(A, s) == A) {
                    rep.fail("Sigma-freeness", A.str() + " fixed by " + s.str());
                    if (rep.issues.size() > 8) return rep;
                }
            }
    }

    // unit laws
    for (int n = 0; n <= m_max; ++n)
        for (const auto& A : pool[n]) {
            std::vector<OperadElt> units(n, O.unit());
            ++rep.checked;
            if (!(O.substitute(A, units) == A))
                rep.fail("unit law (right)", A.str());
            ++rep.checked;
            if (!(O.substitute(O.unit(), {A}) == A))
                rep.fail("unit law (left)", A.str());
        }

    // equivariance law 1: (A.t) * B = (A * B o t^{-1}) . blockperm(t, |B|)
    for (int n = 1; n <= m_max && rep.issues.size() < 8; ++n) {
        if (pool[n].empty()) continue;
        std::vector<std::vector<int>> tuples;
        for (int m = 0; m <= m_max; ++m) arity_tuples(n, m, tuples);
        auto perms = Perm::all(n);
        for (const auto& rs : tuples) {
            long total = count_tuples(pool, rs) * static_cast<long>(pool[n].size()) *
                         static_cast<long>(perms.size());
            bool exhaustive = total > 0 && total <= kExhaustLimit;
            long trials = exhaustive ? total : sample;
            if (count_tuples(pool, rs) == 0) continue;
            for (long t = 0; t < trials && rep.issues.size() < 8; ++t) {
                const OperadElt* A;
                std::vector<OperadElt> Bs;
                Perm tau(n);
                if (exhaustive) {
                    long ix = t;
                    A = &pool[n][ix % pool[n].size()];
                    ix /= pool[n].size();
                    tau = perms[ix % perms.size()];
                    ix /= perms.size();
                    for (int i = 0; i < n; ++i) {
                        Bs.push_back(pool[rs[i]][ix % pool[rs[i]].size()]);
                        ix /= pool[rs[i]].size();
                    }
                } else {
                    A = smp.pick(pool, n);
                    tau = perms[smp.upto(static_cast<int>(perms.size()))];
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        auto* b = smp.pick(pool, rs[i]);
                        if (!b) { ok = false; break; }
                        Bs.push_back(*b);
                    }
                    if (!ok || !A) continue;
                }
                std::vector<int> sizes;
                std::vector<OperadElt> Brearr;
                Perm ti = tau.inverse();
                for (int i = 1; i <= n; ++i) Brearr.push_back(Bs[ti(i) - 1]);
                for (const auto& b : Bs) sizes.push_back(b.arity());
                ++rep.checked;
                OperadElt lhs = O.substitute(O.act(*A, tau), Bs);
                OperadElt rhs =
                    O.act(O.substitute(*A, Brearr), Perm::block_perm(tau, sizes));
                if (!(lhs == rhs))
                    rep.fail("equivariance (outer)",
                             A->str() + " . " + tau.str());
            }
        }
    }

    // equivariance law 2: A * (B_i . p_i) = (A * B) . (+_k p_{lambda(A)(k)})
    for (int n = 1; n <= m_max && rep.issues.size() < 8; ++n) {
        if (pool[n].empty()) continue;
        std::vector<std::vector<int>> tuples;
        for (int m = 0; m <= m_max; ++m) arity_tuples(n, m, tuples);
        for (const auto& rs : tuples) {
            if (count_tuples(pool, rs) == 0) continue;
            long perm_count = 1;
            for (int r : rs) {
                for (int f = 2; f <= r; ++f) perm_count *= f;
                if (perm_count > 1000) break;
            }
            long total = count_tuples(pool, rs) * static_cast<long>(pool[n].size()) *
                         perm_count;
            bool exhaustive = total > 0 && total <= kExhaustLimit && perm_count <= 1000;
            long trials = exhaustive ? total : sample;
            for (long t = 0; t < trials && rep.issues.size() < 8; ++t) {
                const OperadElt* A = smp.pick(pool, n);
                if (!A) break;
                std::vector<OperadElt> Bs;
                std::vector<Perm> rhos;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    auto* b = smp.pick(pool, rs[i]);
                    if (!b) { ok = false; break; }
                    Bs.push_back(*b);
                    auto perms = Perm::all(rs[i]);
                    rhos.push_back(perms[smp.upto(static_cast<int>(perms.size()))]);
                }
                if (!ok) continue;
                std::vector<OperadElt> acted;
                for (int i = 0; i < n; ++i) acted.push_back(O.act(Bs[i], rhos[i]));
                Perm tw(0);
                for (int k = 0; k < n; ++k) tw = tw.block_sum(rhos[k]);
                ++rep.checked;
                OperadElt lhs = O.substitute(*A, acted);
                OperadElt rhs = O.act(O.substitute(*A, Bs), tw);
                if (!(lhs == rhs))
                    rep.fail("equivariance (inner)", A->str());
            }
        }
    }

    // associativity, sampled: (A*(B_i))*(C_ij) vs A*(B_i*(C_i.))
    for (int t = 0; t < sample && rep.issues.size() < 8; ++t) {
        int n = 1 + smp.upto(std::min(2, m_max));
        const OperadElt* A = smp.pick(pool, n);
        if (!A) continue;
        std::vector<OperadElt> Bs;
        std::vector<int> rs;
        int remaining = m_max;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int r = smp.upto(std::min(2, remaining) + 1);
            if (!O.has_nullary() && r == 0) r = 1;
            auto* b = smp.pick(pool, r);
            if (!b) { ok = false; break; }
            Bs.push_back(*b);
            rs.push_back(r);
            remaining -= r;
        }
        if (!ok) continue;
        int m = 0;
        for (int r : rs) m += r;
        std::vector<OperadElt> Cs;
        std::vector<std::vector<OperadElt>> Cblocks(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < rs[i]; ++j) {
                int s = smp.upto(2) + (O.has_nullary() ? 0 : 1);
                auto* c = smp.pick(pool, s);
                if (!c) c = &pool[1][0];
                Cblocks[i].push_back(*c);
            }
        // flat C list follows the leaf order of A * B
        OperadElt AB = O.substitute(*A, Bs);
        (void)AB;
        // inner first
        std::vector<OperadElt> inner;
        for (int i = 0; i < n; ++i) inner.push_back(O.substitute(Bs[i], Cblocks[i]));
        OperadElt rhs = O.substitute(*A, inner);
        // outer first: C's flattened in block order
        std::vector<OperadElt> flat;
        for (int i = 0; i < n; ++i)
            for (const auto& c : Cblocks[i]) flat.push_back(c);
        // the flat arguments attach to A*B by generator index; generator
        // blocks are exactly the B blocks in order
        OperadElt lhs = O.substitute(O.substitute(*A, Bs), flat);
        ++rep.checked;
        if (!(lhs == rhs)) rep.fail("associativity", A->str());
        (void)m;
    }

    // morphism-level functoriality of substitution, sampled
    for (int t = 0; t < sample && rep.issues.size() < 8; ++t) {
        int n = 1 + smp.upto(std::min(2, m_max));
        auto* A1 = smp.pick(pool, n);
        auto* A2 = smp.pick(pool, n);
        if (!A1 || !A2) continue;
        auto a01 = O.hom_witness(*A1, *A2);
        if (!a01) continue;
        auto a12 = O.hom_witness(*A2, *A2);
        std::vector<OperadMor> f01, f12;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            auto* B1 = smp.pick(pool, 1);
            auto* B2 = smp.pick(pool, 1);
            if (!B1 || !B2) { ok = false; break; }
            auto h = O.hom_witness(*B1, *B2);
            if (!h) { ok = false; break; }
            f01.push_back(*h);
            f12.push_back(O.identity(*B2));
        }
        if (!ok || !a12) continue;
        ++rep.checked;
        OperadMor lhs = O.compose(O.substitute_mor(*a12, f12), O.substitute_mor(*a01, f01));
        OperadMor rhs = O.substitute_mor(O.compose(*a12, *a01), f01);
        if (!O.mor_equal(lhs, rhs)) rep.fail("functoriality of *", a01->str());
    }

    return rep;
}

CheckReport check_factorization(const Operad& O, int m_max, int sample, unsigned seed,
                                const EnumBudget& bd) {
    CheckReport rep;
    rep.subject = "factorization condition: " + O.name();
    Pool pool = build_pool(O, m_max, bd);
    Sampler smp(seed);

    long budget = sample;
    for (int n = 1; n <= std::min(3, m_max) && budget > 0; ++n) {
        if (pool[n].empty()) continue;
        std::vector<std::vector<int>> tuples;
        for (int m = n > 1 ? 0 : 1; m <= m_max; ++m) arity_tuples(n, m, tuples);
        for (const auto& rs : tuples) {
            if (budget <= 0) break;
            if (count_tuples(pool, rs) == 0) continue;
            int m = 0;
            for (int r : rs) m += r;
            if (m > m_max || pool[m].empty()) continue;
            // sample an object (Cs, alpha) of C(A,B,rs)
            for (int attempt = 0; attempt < 4 && budget > 0; ++attempt) {
                const OperadElt* B = smp.pick(pool, n);
                if (!B) break;
                std::vector<OperadElt> Cs;
                bool ok = true;
                for (int r : rs) {
                    auto* c = smp.pick(pool, r);
                    if (!c) { ok = false; break; }
                    Cs.push_back(*c);
                }
                if (!ok) continue;
                OperadElt target = O.substitute(*B, Cs);
                const OperadElt* A = smp.pick(pool, m);
                if (!A) continue;
                auto alphas = O.homset(*A, target, bd);
                if (alphas.empty()) continue;
                const OperadMor& alpha = alphas[smp.upto(static_cast<int>(alphas.size()))];
                --budget;
                ++rep.checked;

                FactorizationInitial fi;
                try {
                    fi = O.factorization_initial(*A, *B, Cs, alpha);
                } catch (const std::exception& e) {
                    rep.fail("factorization initial construction",
                             std::string(e.what()) + " at " + alpha.str());
                    continue;
                }
                // invariant: (id_B * (cmp_1+...+cmp_n)) o rho = alpha
                OperadMor mid = O.substitute_mor(O.identity(*B), fi.comparisons);
                if (!O.mor_equal(O.compose(mid, fi.rho), alpha)) {
                    rep.fail("initial-object invariant", alpha.str());
                    continue;
                }
                // local search: same-component neighbours via one forward step
                std::vector<std::pair<std::vector<OperadElt>, OperadMor>> component;
                component.emplace_back(Cs, alpha);
                for (int step = 0; step < 2; ++step) {
                    auto frontier = component;
                    for (const auto& [Ds, beta] : frontier) {
                        for (size_t i = 0; i < Ds.size(); ++i) {
                            for (const auto& Ei : pool[Ds[i].arity()]) {
                                auto g = O.hom_witness(Ds[i], Ei);
                                if (!g) continue;
                                std::vector<OperadMor> gs;
                                for (size_t j = 0; j < Ds.size(); ++j)
                                    gs.push_back(j == i ? *g : O.identity(Ds[j]));
                                auto Es = Ds;
                                Es[i] = Ei;
                                OperadMor step_m = O.substitute_mor(O.identity(*B), gs);
                                OperadMor beta2 = O.compose(step_m, beta);
                                bool known = false;
                                for (const auto& [Xs, x] : component)
                                    if (Xs == Es && O.mor_equal(x, beta2)) {
                                        known = true;
                                        break;
                                    }
                                if (!known && component.size() < 24)
                                    component.emplace_back(Es, beta2);
                            }
                        }
                    }
                }
                // from the initial object there must be a unique comparison
                // to every member
                for (const auto& [Ds, beta] : component) {
                    auto sol = O.factor_block(*B, fi.factors, Ds, fi.rho, beta, bd);
                    if (!sol) {
                        rep.fail("initiality (existence)",
                                 "no comparison to " + beta.str());
                        continue;
                    }
                    if (O.eq_strategy() == Operad::EqStrategy::Normalize) {
                        // uniqueness by solution counting over homsets
                        long solutions = 0;
                        std::vector<std::vector<OperadMor>> choice(Ds.size());
                        bool enumerable = true;
                        for (size_t i = 0; i < Ds.size(); ++i) {
                            choice[i] = O.homset(fi.factors[i], Ds[i], bd);
                            if (choice[i].size() > 8) { enumerable = false; break; }
                        }
                        if (enumerable && !Ds.empty()) {
                            std::vector<size_t> ix(Ds.size(), 0);
                            while (true) {
                                std::vector<OperadMor> gs;
                                for (size_t i = 0; i < Ds.size(); ++i)
                                    gs.push_back(choice[i][ix[i]]);
                                OperadMor mid2 = O.substitute_mor(O.identity(*B), gs);
                                if (O.mor_equal(O.compose(mid2, fi.rho), beta))
                                    ++solutions;
                                size_t d = 0;
                                while (d < ix.size() && ++ix[d] == choice[d].size())
                                    ix[d++] = 0;
                                if (d == ix.size()) break;
                            }
                            if (solutions != 1)
                                rep.fail("initiality (uniqueness)",
                                         std::to_string(solutions) +
                                             " comparisons to " + beta.str());
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace hocat
