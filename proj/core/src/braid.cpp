#include "hocat/braid.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hocat {

bool BraidWord::positive() const {
    return std::all_of(letters.begin(), letters.end(),
                       [](const Letter& l) { return l.sign > 0; });
}

BraidWord BraidWord::inverse() const {
    BraidWord w{strands, {}};
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->index, -it->sign});
    return w;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    assert(strands == rhs.strands);
    BraidWord w{strands, letters};
    w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return w;
}

BraidWord BraidWord::generator(int n, int i, int sign) {
    if (i < 1 || i >= n) throw std::invalid_argument("braid generator out of range");
    return {n, {{i, sign}}};
}

std::string BraidWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (const auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += "s" + std::to_string(l.index);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

std::optional<BraidWord> BraidWord::parse(int strands, const std::string& text) {
    BraidWord w{strands, {}};
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "e") continue;
        if (tok.size() < 2 || tok[0] != 's') return std::nullopt;
        int sign = +1;
        std::string num = tok.substr(1);
        auto caret = num.find('^');
        if (caret != std::string::npos) {
            std::string exp = num.substr(caret + 1);
            num = num.substr(0, caret);
            if (exp != "-1") return std::nullopt;
            sign = -1;
        }
        try {
            int i = std::stoi(num);
            if (i < 1 || i >= strands) return std::nullopt;
            w.letters.push_back({i, sign});
        } catch (...) {
            return std::nullopt;
        }
    }
    return w;
}

Perm underlying_permutation(const BraidWord& w) {
    Perm p(w.strands);
    for (const auto& l : w.letters) p = p * Perm::transposition(w.strands, l.index);
    return p;
}

BraidWord block_sum(const std::vector<BraidWord>& ws) {
    int total = 0;
    for (const auto& w : ws) total += w.strands;
    BraidWord out{total, {}};
    int off = 0;
    for (const auto& w : ws) {
        for (const auto& l : w.letters) out.letters.push_back({l.index + off, l.sign});
        off += w.strands;
    }
    return out;
}

BraidWord permutation_braid(const Perm& p) {
    BraidWord w{p.degree(), {}};
    Perm q = p;
    std::vector<int> rev;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (int i = 1; i < q.degree(); ++i) {
            if (q(i) > q(i + 1)) {
                rev.push_back(i);
                q = q * Perm::transposition(q.degree(), i);
                reduced = true;
                break;
            }
        }
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.letters.push_back({*it, +1});
    return w;
}

namespace {

// starting set: sigma_i left-divides the permutation braid of p
bool in_starting_set(const Perm& p, int i) {
    Perm q = p.inverse();
    return q(i) > q(i + 1);
}

// finishing set: sigma_i right-divides
bool in_finishing_set(const Perm& p, int i) { return p(i) > p(i + 1); }

// one left-weighting pass over an adjacent pair; returns true if changed
bool slide(Perm& a, Perm& b) {
    int n = a.degree();
    bool changed = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < n; ++i) {
            if (in_starting_set(b, i) && !in_finishing_set(a, i)) {
                a = a * Perm::transposition(n, i);
                b = Perm::transposition(n, i) * b;
                changed = moved = true;
            }
        }
    }
    return changed;
}

void normalize_factors(int n, int& inf, std::vector<Perm>& fs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < fs.size(); ++i)
            if (slide(fs[i], fs[i + 1])) changed = true;
        // drop trivial factors
        auto it = std::remove_if(fs.begin(), fs.end(),
                                 [](const Perm& p) { return p.is_identity(); });
        if (it != fs.end()) { fs.erase(it, fs.end()); changed = true; }
    }
    // half twists collect at the front
    Perm delta = Perm::reversal(n);
    while (!fs.empty() && fs.front() == delta) {
        fs.erase(fs.begin());
        ++inf;
    }
}

Perm twist_conj(const Perm& p) {
    // conjugation by the half twist
    int n = p.degree();
    Perm w0 = Perm::reversal(n);
    return w0 * p * w0;
}

} // namespace

GarsideNF garside_nf(const BraidWord& w) {
    int n = w.strands;
    GarsideNF nf;
    nf.strands = n;
    Perm w0 = Perm::reversal(n);
    for (const auto& l : w.letters) {
        Perm t = Perm::transposition(n, l.index);
        if (l.sign > 0) {
            nf.factors.push_back(t);
        } else {
            // sigma_i^{-1} = x_{t_i w0} . delta^{-1}; the delta^{-1} moves
            // to the front, conjugating everything it passes
            nf.factors.push_back(t * w0);
            for (auto& f : nf.factors) f = twist_conj(f);
            --nf.inf;
        }
    }
    normalize_factors(n, nf.inf, nf.factors);
    return nf;
}

bool positive_equal_bfs(const BraidWord& u, const BraidWord& v) {
    if (!u.positive() || !v.positive())
        throw std::invalid_argument("positive_equal_bfs: words must be positive");
    if (u.strands != v.strands) return false;
    if (u.length() != v.length()) return false;  // relations preserve length
    auto key = [](const std::vector<int>& w) { return w; };
    std::vector<int> start, goal;
    for (const auto& l : u.letters) start.push_back(l.index);
    for (const auto& l : v.letters) goal.push_back(l.index);
    if (start == goal) return true;
    std::set<std::vector<int>> seen{start};
    std::queue<std::vector<int>> q;
    q.push(start);
    while (!q.empty()) {
        auto w = q.front();
        q.pop();
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (std::abs(w[i] - w[i + 1]) > 1) {
                auto w2 = w;
                std::swap(w2[i], w2[i + 1]);
                if (w2 == goal) return true;
                if (seen.insert(key(w2)).second) q.push(w2);
            }
            if (i + 2 < w.size() && std::abs(w[i] - w[i + 1]) == 1 && w[i] == w[i + 2]) {
                auto w2 = w;
                w2[i] = w[i + 1];
                w2[i + 1] = w[i];
                w2[i + 2] = w[i + 1];
                if (w2 == goal) return true;
                if (seen.insert(key(w2)).second) q.push(w2);
            }
        }
    }
    return false;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands)
        throw std::invalid_argument("braid_equal: strand counts differ");
    if (u.positive() && v.positive() && u.strands <= 5 && u.length() <= 12 &&
        v.length() <= 12)
        return positive_equal_bfs(u, v);
    return garside_nf(u) == garside_nf(v);
}

BraidWord delete_strands(const BraidWord& w, const std::vector<int>& drop) {
    std::vector<bool> dropped(w.strands + 1, false);
    for (int d : drop) dropped[d] = true;
    int kept = 0;
    for (int s = 1; s <= w.strands; ++s)
        if (!dropped[s]) ++kept;
    BraidWord out{kept, {}};
    std::vector<int> at(w.strands + 1);  // position -> original strand
    for (int p = 1; p <= w.strands; ++p) at[p] = p;
    for (const auto& l : w.letters) {
        int a = at[l.index], b = at[l.index + 1];
        if (!dropped[a] && !dropped[b]) {
            int idx = 0;
            for (int p = 1; p < l.index; ++p)
                if (!dropped[at[p]]) ++idx;
            out.letters.push_back({idx + 1, l.sign});
        }
        std::swap(at[l.index], at[l.index + 1]);
    }
    return out;
}

BraidWord cable(const BraidWord& w, const std::vector<int>& widths) {
    assert(static_cast<int>(widths.size()) == w.strands);
    int total = 0;
    for (int x : widths) total += x;
    BraidWord out{total, {}};
    std::vector<int> at(w.strands + 1);
    for (int p = 1; p <= w.strands; ++p) at[p] = p;
    for (const auto& l : w.letters) {
        int u = widths[at[l.index] - 1], v = widths[at[l.index + 1] - 1];
        int off = 0;
        for (int p = 1; p < l.index; ++p) off += widths[at[p] - 1];
        // block swap keeping inner order; emitted as a permutation braid
        std::vector<int> img(total);
        for (int x = 1; x <= total; ++x) img[x - 1] = x;
        for (int j = 1; j <= u; ++j) img[off + j - 1] = off + v + j;
        for (int j = 1; j <= v; ++j) img[off + u + j - 1] = off + j;
        BraidWord blk = permutation_braid(Perm(std::move(img)));
        if (l.sign < 0) blk = blk.inverse();
        out.letters.insert(out.letters.end(), blk.letters.begin(), blk.letters.end());
        std::swap(at[l.index], at[l.index + 1]);
    }
    return out;
}

} // namespace hocat
