#include "hocat/sset.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hocat {

bool TruncSSet::degenerate(int n, int s) const {
    if (n == 0) return false;
    for (int i = 0; i < n; ++i) {
        // s is degenerate iff s = s_i d_i s for some i
        int f = face[n][i][s];
        if (degen[n - 1][i][f] == s) return true;
    }
    return false;
}

std::vector<int> TruncSSet::nondegenerate_counts() const {
    std::vector<int> out(cap + 1, 0);
    for (int n = 0; n <= cap; ++n)
        for (int s = 0; s < count(n); ++s)
            if (!degenerate(n, s)) ++out[n];
    return out;
}

CheckReport TruncSSet::validate() const {
    CheckReport rep;
    rep.subject = "TruncSSet";
    auto in_range = [&](int n, int s) { return n >= 0 && n <= cap && s >= 0 && s < count(n); };
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < count(n); ++s) {
                ++rep.checked;
                if (!in_range(n - 1, face[n][i][s]))
                    rep.fail("face range", simplex[n][s]);
            }
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= cap; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int s = 0; s < count(n); ++s) {
                    ++rep.checked;
                    if (face[n - 1][i][face[n][j][s]] != face[n - 1][j - 1][face[n][i][s]])
                        rep.fail("simplicial identity dd", simplex[n][s]);
                }
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int s = 0; s < count(n); ++s) {
                    ++rep.checked;
                    if (degen[n + 1][i][degen[n][j][s]] !=
                        degen[n + 1][j + 1][degen[n][i][s]])
                        rep.fail("simplicial identity ss", simplex[n][s]);
                }
    // d_i s_j relations
    for (int n = 0; n + 1 <= cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int s = 0; s < count(n); ++s) {
                    ++rep.checked;
                    int lhs = face[n + 1][i][degen[n][j][s]];
                    int rhs;
                    if (i < j)
                        rhs = n >= 1 ? degen[n - 1][j - 1][face[n][i][s]] : -2;
                    else if (i == j || i == j + 1)
                        rhs = s;
                    else
                        rhs = n >= 1 ? degen[n - 1][j][face[n][i - 1][s]] : -2;
                    if (rhs != -2 && lhs != rhs)
                        rep.fail("simplicial identity ds", simplex[n][s]);
                }
    return rep;
}

TruncSSet nerve(const FinCat& c, int d) {
    if (d < 1) throw std::invalid_argument("nerve: dimension cap must be >= 1");
    auto v = c.validate();
    if (!v.ok()) throw std::invalid_argument("nerve: invalid category: " + v.summary());
    TruncSSet x;
    x.cap = d;
    x.simplex.resize(d + 1);
    x.face.resize(d + 1);
    x.degen.resize(d + 1);
    // chains[n]: list of morphism chains (f1,...,fn), left to right composable
    std::vector<std::vector<std::vector<int>>> chains(d + 1);
    chains[0] = {};
    for (int o = 0; o < c.n_objects(); ++o) {
        chains[0].push_back({o});
        x.simplex[0].push_back(c.object_id(o));
    }
    for (int n = 1; n <= d; ++n) {
        if (n == 1) {
            for (int m = 0; m < c.n_morphisms(); ++m) {
                chains[1].push_back({m});
                x.simplex[1].push_back(c.mor(m).id);
            }
        } else {
            for (const auto& ch : chains[n - 1])
                for (int m = 0; m < c.n_morphisms(); ++m) {
                    if (c.mor(m).src != c.mor(ch.back()).dst) continue;
                    auto ch2 = ch;
                    ch2.push_back(m);
                    std::string id;
                    for (int f : ch2) id += (id.empty() ? "" : "*") + c.mor(f).id;
                    chains[n].push_back(ch2);
                    x.simplex[n].push_back(id);
                }
        }
    }
    auto chain_index = [&](int n, const std::vector<int>& ch) {
        auto it = std::find(chains[n].begin(), chains[n].end(), ch);
        assert(it != chains[n].end());
        return static_cast<int>(it - chains[n].begin());
    };
    for (int n = 1; n <= d; ++n) {
        x.face[n].assign(n + 1, std::vector<int>(chains[n].size(), -1));
        for (size_t s = 0; s < chains[n].size(); ++s) {
            const auto& ch = chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> fc;
                if (n == 1) {
                    // d_0 = target object, d_1 = source object
                    fc = {i == 0 ? c.mor(ch[0]).dst : c.mor(ch[0]).src};
                } else if (i == 0) {
                    fc.assign(ch.begin() + 1, ch.end());
                } else if (i == n) {
                    fc.assign(ch.begin(), ch.end() - 1);
                } else {
                    fc.assign(ch.begin(), ch.end());
                    int g = fc[i];
                    fc.erase(fc.begin() + i);
                    fc[i - 1] = c.compose(g, fc[i - 1]);
                }
                x.face[n][i][s] = chain_index(n - 1, fc);
            }
        }
    }
    for (int n = 0; n < d; ++n) {
        x.degen[n].assign(n + 1, std::vector<int>(chains[n].size(), -1));
        for (size_t s = 0; s < chains[n].size(); ++s) {
            const auto& ch = chains[n][s];
            for (int i = 0; i <= n; ++i) {
                std::vector<int> dc;
                if (n == 0) {
                    dc = {c.identity(ch[0])};
                } else {
                    dc = ch;
                    int obj = i == 0 ? c.mor(ch[0]).src : c.mor(ch[i - 1]).dst;
                    dc.insert(dc.begin() + i, c.identity(obj));
                }
                x.degen[n][i][s] = chain_index(n + 1, dc);
            }
        }
    }
    return x;
}

TruncSSet diag(const BisimplicialSet& b) {
    TruncSSet x;
    x.cap = b.cap;
    x.simplex.resize(b.cap + 1);
    x.face.resize(b.cap + 1);
    x.degen.resize(b.cap + 1);
    for (int n = 0; n <= b.cap; ++n) x.simplex[n] = b.cell[n][n];
    for (int n = 1; n <= b.cap; ++n) {
        x.face[n].assign(n + 1, std::vector<int>(x.simplex[n].size(), -1));
        for (int i = 0; i <= n; ++i)
            for (size_t s = 0; s < x.simplex[n].size(); ++s) {
                int h = b.hface[n][n][i][s];
                x.face[n][i][s] = b.vface[n - 1][n][i][h];
            }
    }
    for (int n = 0; n < b.cap; ++n) {
        x.degen[n].assign(n + 1, std::vector<int>(x.simplex[n].size(), -1));
        for (int i = 0; i <= n; ++i)
            for (size_t s = 0; s < x.simplex[n].size(); ++s) {
                int h = b.hdegen[n][n][i][s];
                x.degen[n][i][s] = b.vdegen[n + 1][n][i][h];
            }
    }
    return x;
}

BisimplicialSet nerve_box(const FinCat& a, const FinCat& b, int cap) {
    TruncSSet na = nerve(a, cap), nb = nerve(b, cap);
    BisimplicialSet bi;
    bi.cap = cap;
    bi.cell.assign(cap + 1, {});
    bi.hface.assign(cap + 1, {});
    bi.vface.assign(cap + 1, {});
    bi.hdegen.assign(cap + 1, {});
    bi.vdegen.assign(cap + 1, {});
    for (int p = 0; p <= cap; ++p) {
        bi.cell[p].assign(cap + 1, {});
        bi.hface[p].assign(cap + 1, {});
        bi.vface[p].assign(cap + 1, {});
        bi.hdegen[p].assign(cap + 1, {});
        bi.vdegen[p].assign(cap + 1, {});
        for (int q = 0; q <= cap; ++q) {
            int np = na.count(p), nq = nb.count(q);
            for (int i = 0; i < np; ++i)
                for (int j = 0; j < nq; ++j)
                    bi.cell[p][q].push_back(na.simplex[p][i] + "#" + nb.simplex[q][j]);
            auto at = [&](int i, int j) { return i * nq + j; };
            if (p >= 1) {
                bi.hface[p][q].assign(p + 1, std::vector<int>(np * nq, -1));
                for (int f = 0; f <= p; ++f)
                    for (int i = 0; i < np; ++i)
                        for (int j = 0; j < nq; ++j)
                            bi.hface[p][q][f][at(i, j)] =
                                na.face[p][f][i] * nq + j;
            }
            if (q >= 1) {
                bi.vface[p][q].assign(q + 1, std::vector<int>(np * nq, -1));
                for (int f = 0; f <= q; ++f)
                    for (int i = 0; i < np; ++i)
                        for (int j = 0; j < nq; ++j)
                            bi.vface[p][q][f][at(i, j)] = i * nb.count(q - 1) +
                                                          nb.face[q][f][j];
            }
            if (p < cap) {
                bi.hdegen[p][q].assign(p + 1, std::vector<int>(np * nq, -1));
                for (int f = 0; f <= p; ++f)
                    for (int i = 0; i < np; ++i)
                        for (int j = 0; j < nq; ++j)
                            bi.hdegen[p][q][f][at(i, j)] = na.degen[p][f][i] * nq + j;
            }
            if (q < cap) {
                bi.vdegen[p][q].assign(q + 1, std::vector<int>(np * nq, -1));
                for (int f = 0; f <= q; ++f)
                    for (int i = 0; i < np; ++i)
                        for (int j = 0; j < nq; ++j)
                            bi.vdegen[p][q][f][at(i, j)] = i * nb.count(q + 1) +
                                                           nb.degen[q][f][j];
            }
        }
    }
    return bi;
}

CheckReport SSetDiagram::validate() const {
    CheckReport rep;
    rep.subject = "SSetDiagram";
    const FinCat& L = *base;
    for (int m = 0; m < L.n_morphisms(); ++m) {
        const TruncSSet& s = fiber[L.mor(m).src];
        const TruncSSet& t = fiber[L.mor(m).dst];
        if (s.cap != t.cap) {
            rep.fail("cap mismatch", L.mor(m).id);
            continue;
        }
        for (int n = 1; n <= s.cap; ++n)
            for (int i = 0; i <= n; ++i)
                for (int sx = 0; sx < s.count(n); ++sx) {
                    ++rep.checked;
                    if (mor_map[m][n - 1].empty()) continue;
                    int lhs = t.face[n][i][mor_map[m][n][sx]];
                    int rhs = mor_map[m][n - 1][s.face[n][i][sx]];
                    if (lhs != rhs) rep.fail("face naturality", L.mor(m).id);
                }
    }
    for (int g = 0; g < L.n_morphisms(); ++g)
        for (int f = 0; f < L.n_morphisms(); ++f) {
            int gf = L.compose(g, f);
            if (gf < 0) continue;
            const TruncSSet& s = fiber[L.mor(f).src];
            for (int n = 0; n <= s.cap; ++n)
                for (int sx = 0; sx < s.count(n); ++sx) {
                    ++rep.checked;
                    if (mor_map[g][n][mor_map[f][n][sx]] != mor_map[gf][n][sx])
                        rep.fail("functoriality", L.mor(g).id + " o " + L.mor(f).id);
                }
        }
    return rep;
}

SSetDiagram nerve_diagram(const CatDiagram& X, int cap) {
    SSetDiagram Z;
    Z.base = X.base;
    const FinCat& L = *X.base;
    for (int o = 0; o < L.n_objects(); ++o) Z.fiber.push_back(nerve(X.fiber[o], cap));
    Z.mor_map.resize(L.n_morphisms());
    for (int m = 0; m < L.n_morphisms(); ++m) {
        const FinCat& src = X.fiber[L.mor(m).src];
        const FinCat& dst = X.fiber[L.mor(m).dst];
        const Functor& F = X.fiber_mor[m];
        // map chains by mapping each morphism of the chain
        const TruncSSet& sn = Z.fiber[L.mor(m).src];
        const TruncSSet& tn = Z.fiber[L.mor(m).dst];
        Z.mor_map[m].assign(cap + 1, {});
        // rebuild chains data exactly as nerve() enumerates them
        std::vector<std::vector<std::vector<int>>> schains(cap + 1), tchains(cap + 1);
        auto build = [&](const FinCat& c, std::vector<std::vector<std::vector<int>>>& ch) {
            for (int o = 0; o < c.n_objects(); ++o) ch[0].push_back({o});
            for (int n = 1; n <= cap; ++n) {
                if (n == 1) {
                    for (int mm = 0; mm < c.n_morphisms(); ++mm) ch[1].push_back({mm});
                } else {
                    for (const auto& prev : ch[n - 1])
                        for (int mm = 0; mm < c.n_morphisms(); ++mm) {
                            if (c.mor(mm).src != c.mor(prev.back()).dst) continue;
                            auto cc = prev;
                            cc.push_back(mm);
                            ch[n].push_back(cc);
                        }
                }
            }
        };
        build(src, schains);
        build(dst, tchains);
        for (int n = 0; n <= cap; ++n) {
            Z.mor_map[m][n].resize(schains[n].size());
            for (size_t s = 0; s < schains[n].size(); ++s) {
                std::vector<int> img;
                for (int x : schains[n][s])
                    img.push_back(n == 0 ? F.obj_map[x] : F.mor_map[x]);
                auto it = std::find(tchains[n].begin(), tchains[n].end(), img);
                assert(it != tchains[n].end());
                Z.mor_map[m][n][s] = static_cast<int>(it - tchains[n].begin());
            }
        }
        (void)sn;
        (void)tn;
    }
    return Z;
}

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(b)] = find(a); }
};

} // namespace

TruncSSet ss_hocolim(const FinCat& L, const SSetDiagram& Z) {
    auto zrep = Z.validate();
    if (!zrep.ok())
        throw std::invalid_argument("ss_hocolim: non-functorial diagram: " +
                                    zrep.summary());
    int cap = Z.fiber.empty() ? 0 : Z.fiber[0].cap;
    // W(a) = N(a/L); restriction along l: a->b precomposes
    std::vector<TruncSSet> W;
    std::vector<FinCat> slices;
    for (int a = 0; a < L.n_objects(); ++a) slices.push_back(comma_under(L, a));
    for (int a = 0; a < L.n_objects(); ++a) W.push_back(nerve(slices[a], cap));
    // nerve of the restriction functor b/L -> a/L for l: a->b
    // chains in the slice nerve are built from slice morphisms; we rebuild
    // the functor on nerves through nerve_diagram on an auxiliary diagram
    CoCatDiagram WD = CoCatDiagram::under_slices(L);
    // product-and-glue, levelwise per dimension
    TruncSSet out;
    out.cap = cap;
    out.simplex.resize(cap + 1);
    out.face.resize(cap + 1);
    out.degen.resize(cap + 1);
    // local products: cell (a, w, z) with w in W(a)_n, z in Z(a)_n
    std::vector<std::vector<int>> off(cap + 1, std::vector<int>(L.n_objects() + 1, 0));
    for (int n = 0; n <= cap; ++n)
        for (int a = 0; a < L.n_objects(); ++a)
            off[n][a + 1] = off[n][a] + W[a].count(n) * Z.fiber[a].count(n);
    auto cell = [&](int n, int a, int w, int z) {
        return off[n][a] + w * Z.fiber[a].count(n) + z;
    };
    // the nerve maps of the slice restrictions
    SSetDiagram WN;  // over L^op conceptually; store per morphism directly
    WN.base = &L;
    std::vector<std::vector<std::vector<int>>> wmap(L.n_morphisms());
    {
        CatDiagram tmp;  // reuse nerve_diagram by flipping variance manually
        for (int m = 0; m < L.n_morphisms(); ++m) {
            const Functor& F = WD.fiber_mor[m];
            // map chains of W(dst) into W(src)
            const FinCat& srcc = *F.src;
            std::vector<std::vector<std::vector<int>>> sch(cap + 1), tch(cap + 1);
            auto build = [&](const FinCat& c,
                             std::vector<std::vector<std::vector<int>>>& ch) {
                for (int o = 0; o < c.n_objects(); ++o) ch[0].push_back({o});
                for (int n = 1; n <= cap; ++n) {
                    if (n == 1) {
                        for (int mm = 0; mm < c.n_morphisms(); ++mm)
                            ch[1].push_back({mm});
                    } else {
                        for (const auto& prev : ch[n - 1])
                            for (int mm = 0; mm < c.n_morphisms(); ++mm) {
                                if (c.mor(mm).src != c.mor(prev.back()).dst) continue;
                                auto cc = prev;
                                cc.push_back(mm);
                                ch[n].push_back(cc);
                            }
                    }
                }
            };
            build(srcc, sch);
            build(*F.dst, tch);
            wmap[m].assign(cap + 1, {});
            for (int n = 0; n <= cap; ++n) {
                wmap[m][n].resize(sch[n].size());
                for (size_t s = 0; s < sch[n].size(); ++s) {
                    std::vector<int> img;
                    for (int x : sch[n][s])
                        img.push_back(n == 0 ? F.obj_map[x] : F.mor_map[x]);
                    auto it = std::find(tch[n].begin(), tch[n].end(), img);
                    assert(it != tch[n].end());
                    wmap[m][n][s] = static_cast<int>(it - tch[n].begin());
                }
            }
        }
    }
    // glue levelwise
    std::vector<UF> uf;
    for (int n = 0; n <= cap; ++n) uf.emplace_back(off[n][L.n_objects()]);
    for (int m = 0; m < L.n_morphisms(); ++m) {
        int a = L.mor(m).src, b = L.mor(m).dst;
        for (int n = 0; n <= cap; ++n)
            for (int w = 0; w < W[b].count(n); ++w)
                for (int z = 0; z < Z.fiber[a].count(n); ++z)
                    uf[n].unite(cell(n, a, wmap[m][n][w], z),
                                cell(n, b, w, Z.mor_map[m][n][z]));
    }
    // assemble quotient levelwise with induced faces/degeneracies
    std::vector<std::vector<int>> cls(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        cls[n].assign(off[n][L.n_objects()], -1);
        int next = 0;
        for (int c = 0; c < off[n][L.n_objects()]; ++c) {
            int r = uf[n].find(c);
            if (cls[n][r] < 0) {
                cls[n][r] = next++;
                out.simplex[n].push_back("c" + std::to_string(n) + "_" +
                                         std::to_string(cls[n][r]));
            }
            cls[n][c] = cls[n][r];
        }
    }
    for (int n = 1; n <= cap; ++n)
        out.face[n].assign(n + 1, std::vector<int>(out.simplex[n].size(), -1));
    for (int n = 0; n < cap; ++n)
        out.degen[n].assign(n + 1, std::vector<int>(out.simplex[n].size(), -1));
    for (int a = 0; a < L.n_objects(); ++a) {
        for (int n = 1; n <= cap; ++n)
            for (int w = 0; w < W[a].count(n); ++w)
                for (int z = 0; z < Z.fiber[a].count(n); ++z)
                    for (int i = 0; i <= n; ++i) {
                        int c = cls[n][cell(n, a, w, z)];
                        int fc = cls[n - 1][cell(n - 1, a, W[a].face[n][i][w],
                                                 Z.fiber[a].face[n][i][z])];
                        if (out.face[n][i][c] >= 0 && out.face[n][i][c] != fc)
                            throw std::runtime_error("ss_hocolim: faces disagree");
                        out.face[n][i][c] = fc;
                    }
        for (int n = 0; n < cap; ++n)
            for (int w = 0; w < W[a].count(n); ++w)
                for (int z = 0; z < Z.fiber[a].count(n); ++z)
                    for (int i = 0; i <= n; ++i) {
                        int c = cls[n][cell(n, a, w, z)];
                        int dc = cls[n + 1][cell(n + 1, a, W[a].degen[n][i][w],
                                                 Z.fiber[a].degen[n][i][z])];
                        out.degen[n][i][c] = dc;
                    }
    }
    return out;
}

} // namespace hocat
