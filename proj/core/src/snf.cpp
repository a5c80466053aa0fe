#include "hocat/snf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hocat {

namespace {

IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    IntMatrix m(r, std::vector<BigInt>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
        }
    return m;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SNFResult r;
    r.U = identity_matrix(rows);
    r.V = identity_matrix(cols);
    IntMatrix a = m;

    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(r.U[i], r.U[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t t = 0; t < rows; ++t) std::swap(a[t][i], a[t][j]);
        for (size_t t = 0; t < cols; ++t) std::swap(r.V[t][i], r.V[t][j]);
    };
    auto row_add = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t t = 0; t < cols; ++t) a[dst][t] += f * a[src][t];
        for (size_t t = 0; t < rows; ++t) r.U[dst][t] += f * r.U[src][t];
    };
    auto col_add = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t t = 0; t < rows; ++t) a[t][dst] += f * a[t][src];
        for (size_t t = 0; t < cols; ++t) r.V[t][dst] += f * r.V[t][src];
    };
    auto row_neg = [&](size_t i) {
        for (size_t t = 0; t < cols; ++t) a[i][t] = -a[i][t];
        for (size_t t = 0; t < rows; ++t) r.U[i][t] = -r.U[i][t];
    };

    size_t k = 0;
    while (k < rows && k < cols) {
        // minimal nonzero pivot by absolute value
        size_t pi = rows, pj = cols;
        BigInt best = 0;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                BigInt v = abs(a[i][j]);
                if (pi == rows || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // all zero
        row_swap(k, pi);
        col_swap(k, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0) continue;
                BigInt q = a[i][k] / a[k][k];
                row_add(i, k, -q);
                if (a[i][k] != 0) {
                    row_swap(k, i);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0) continue;
                BigInt q = a[k][j] / a[k][k];
                col_add(j, k, -q);
                if (a[k][j] != 0) {
                    col_swap(k, j);
                    clean = false;
                }
            }
        }
        if (a[k][k] < 0) row_neg(k);
        ++k;
    }
    // enforce the divisibility chain on consecutive entries
    bool chain_fixed = true;
    while (chain_fixed) {
        chain_fixed = false;
        for (size_t i = 0; k > 0 && i + 1 < k; ++i) {
            size_t j = i + 1;
            if (a[i][i] == 0 || a[j][j] % a[i][i] == 0) continue;
            col_add(i, j, 1);  // (j,i) becomes d_j
            while (a[j][i] != 0) {
                BigInt q = a[i][i] / a[j][i];
                row_add(i, j, -q);
                row_swap(i, j);
            }
            BigInt q = a[i][j] / a[i][i];
            col_add(j, i, -q);
            if (a[i][i] < 0) row_neg(i);
            if (a[j][j] < 0) row_neg(j);
            chain_fixed = true;
        }
    }
    r.diagonal.assign(std::min(rows, cols), 0);
    for (size_t i = 0; i < r.diagonal.size(); ++i) r.diagonal[i] = a[i][i];
    return r;
}

bool snf_certifies(const IntMatrix& m, const SNFResult& r) {
    IntMatrix d = mat_mul(mat_mul(r.U, m), r.V);
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d[i].size(); ++j) {
            BigInt want = (i == j && i < r.diagonal.size()) ? r.diagonal[i] : 0;
            if (d[i][j] != want) return false;
        }
    for (size_t i = 0; i + 1 < r.diagonal.size(); ++i)
        if (r.diagonal[i] != 0 && r.diagonal[i + 1] % r.diagonal[i] != 0 &&
            r.diagonal[i + 1] != 0)
            return false;
    return true;
}

CheckReport ChainComplex::validate() const {
    CheckReport rep;
    rep.subject = "ChainComplex";
    for (size_t n = 2; n < boundary.size(); ++n) {
        if (boundary[n].empty() || boundary[n - 1].empty()) continue;
        IntMatrix dd = mat_mul(boundary[n - 1], boundary[n]);
        ++rep.checked;
        for (const auto& row : dd)
            for (const auto& v : row)
                if (v != 0) {
                    rep.fail("dd = 0", "dimension " + std::to_string(n));
                    return rep;
                }
    }
    return rep;
}

ChainComplex chain_complex(const TruncSSet& x) {
    ChainComplex c;
    // index nondegenerate simplices per dimension
    std::vector<std::vector<int>> nd(x.cap + 1);
    std::vector<std::vector<int>> ndix(x.cap + 1);
    for (int n = 0; n <= x.cap; ++n) {
        ndix[n].assign(x.count(n), -1);
        for (int s = 0; s < x.count(n); ++s)
            if (!x.degenerate(n, s)) {
                ndix[n][s] = static_cast<int>(nd[n].size());
                nd[n].push_back(s);
            }
        c.dims.push_back(static_cast<int>(nd[n].size()));
    }
    c.boundary.resize(x.cap + 1);
    for (int n = 1; n <= x.cap; ++n) {
        c.boundary[n].assign(nd[n - 1].size(), std::vector<BigInt>(nd[n].size(), 0));
        for (size_t col = 0; col < nd[n].size(); ++col) {
            int s = nd[n][col];
            for (int i = 0; i <= n; ++i) {
                int f = x.face[n][i][s];
                if (ndix[n - 1][f] < 0) continue;  // degenerate face contributes 0
                BigInt sign = (i % 2 == 0) ? 1 : -1;
                c.boundary[n][ndix[n - 1][f]][col] += sign;
            }
        }
    }
    auto rep = c.validate();
    if (!rep.ok()) throw std::logic_error("chain complex: dd != 0: " + rep.summary());
    return c;
}

std::string HomologyResult::str() const {
    std::string s;
    for (int n = 0; n <= trusted; ++n) {
        s += "H" + std::to_string(n) + " = ";
        std::string terms;
        for (int b = 0; b < betti[n]; ++b) terms += (terms.empty() ? "Z" : " + Z");
        for (const auto& t : torsion[n])
            terms += (terms.empty() ? "Z/" : " + Z/") + t.str();
        s += terms.empty() ? "0" : terms;
        if (n < trusted) s += ", ";
    }
    return s;
}

HomologyResult homology(const TruncSSet& x) {
    ChainComplex c = chain_complex(x);
    HomologyResult h;
    h.trusted = x.cap - 1;
    std::vector<int> rank(x.cap + 2, 0);
    std::vector<std::vector<BigInt>> tors(x.cap + 2);
    for (int n = 1; n <= x.cap; ++n) {
        if (c.dims[n] == 0 || c.dims[n - 1] == 0) {
            rank[n] = 0;
            continue;
        }
        auto snf = smith_normal_form(c.boundary[n]);
        for (const auto& d : snf.diagonal) {
            if (d == 0) continue;
            ++rank[n];
            if (d > 1) tors[n].push_back(d);
        }
    }
    for (int n = 0; n <= h.trusted; ++n) {
        h.betti.push_back(c.dims[n] - rank[n] - rank[n + 1]);
        h.torsion.push_back(tors[n + 1]);
    }
    return h;
}

} // namespace hocat
