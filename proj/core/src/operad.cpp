#include "hocat/operad.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hocat {

int OperadElt::arity() const {
    switch (tag) {
        case Tag::Initial: return 1;
        case Tag::Word: return word.arity();
        case Tag::PermObj: return perm.degree();
        case Tag::Tree: return tree.arity();
    }
    return 0;
}

OperadElt OperadElt::initial() { return OperadElt{}; }

OperadElt OperadElt::of(MonoidalWord w) {
    OperadElt e;
    e.tag = Tag::Word;
    e.word = std::move(w);
    return e;
}

OperadElt OperadElt::of(Perm p) {
    OperadElt e;
    e.tag = Tag::PermObj;
    e.perm = std::move(p);
    return e;
}

OperadElt OperadElt::of(FreeTree t) {
    OperadElt e;
    e.tag = Tag::Tree;
    e.tree = std::move(t);
    return e;
}

bool OperadElt::operator==(const OperadElt& o) const {
    if (tag != o.tag) return false;
    switch (tag) {
        case Tag::Initial: return true;
        case Tag::Word: return word == o.word;
        case Tag::PermObj: return perm == o.perm;
        case Tag::Tree: return tree == o.tree;
    }
    return false;
}

bool OperadElt::operator<(const OperadElt& o) const {
    if (tag != o.tag) return tag < o.tag;
    switch (tag) {
        case Tag::Initial: return false;
        case Tag::Word: return word < o.word;
        case Tag::PermObj: return perm < o.perm;
        case Tag::Tree: return tree < o.tree;
    }
    return false;
}

namespace {

std::string tree_key(const FreeTree::Node& n) {
    if (n.leaf) return std::to_string(n.gen);
    std::string s = "g" + std::to_string(n.arity) + "." + std::to_string(n.obj) + "(";
    for (size_t i = 0; i < n.child.size(); ++i) {
        if (i) s += ",";
        s += tree_key(n.child[i]);
    }
    return s + ")";
}

} // namespace

std::string OperadElt::str() const {
    switch (tag) {
        case Tag::Initial: return "id";
        case Tag::Word: return word.str();
        case Tag::PermObj: return perm.str();
        case Tag::Tree: return tree_key(tree.root);
    }
    return "";
}

bool OperadMor::operator==(const OperadMor& o) const {
    return src == o.src && dst == o.dst && node_mor == o.node_mor &&
           braid.strands == o.braid.strands &&
           braid.letters.size() == o.braid.letters.size() &&
           std::equal(braid.letters.begin(), braid.letters.end(),
                      o.braid.letters.begin(), [](auto a, auto b) {
                          return a.index == b.index && a.sign == b.sign;
                      });
}

std::string OperadMor::str() const {
    std::string s = src.str() + " -> " + dst.str();
    if (!braid.letters.empty()) s += " [" + braid.str() + "]";
    if (!node_mor.empty()) {
        s += " [nodes";
        for (int m : node_mor) s += " " + std::to_string(m);
        s += "]";
    }
    return s;
}

OperadElt Operad::nullary() const {
    throw std::logic_error(name() + " has no nullary element");
}

OperadElt Operad::orbit_rep(const OperadElt& A) const {
    return act(A, twist(A).inverse());
}

OperadMor Operad::identity(const OperadElt& a) const {
    OperadMor m;
    m.src = m.dst = a;
    if (a.tag == OperadElt::Tag::PermObj) m.braid = BraidWord::identity(a.arity());
    if (a.tag == OperadElt::Tag::Tree) {
        // -1 per internal node
        struct C {
            static int count(const FreeTree::Node& n) {
                if (n.leaf) return 0;
                int c = 1;
                for (const auto& k : n.child) c += count(k);
                return c;
            }
        };
        m.node_mor.assign(C::count(a.tree.root), -1);
    }
    return m;
}

bool Operad::mor_equal(const OperadMor& a, const OperadMor& b) const {
    return a == b;
}

FactorizationInitial Operad::normalize_factorization(const OperadElt& A,
                                                     const OperadElt& B,
                                                     const std::vector<OperadElt>& Cs,
                                                     const OperadMor& alpha) const {
    return factorization_initial(A, B, Cs, alpha);
}

std::optional<std::vector<OperadMor>> Operad::factor_block(
    const OperadElt& B, const std::vector<OperadElt>& Cs,
    const std::vector<OperadElt>& Ds, const OperadMor& alpha, const OperadMor& beta,
    const EnumBudget& bd) const {
    size_t n = Cs.size();
    std::vector<std::vector<OperadMor>> choices(n);
    for (size_t i = 0; i < n; ++i) {
        choices[i] = homset(Cs[i], Ds[i], bd);
        if (choices[i].empty()) return std::nullopt;
    }
    std::vector<size_t> ix(n, 0);
    while (true) {
        std::vector<OperadMor> bs;
        for (size_t i = 0; i < n; ++i) bs.push_back(choices[i][ix[i]]);
        OperadMor mid = substitute_mor(identity(B), bs);
        if (mor_equal(compose(mid, alpha), beta)) return bs;
        size_t d = 0;
        while (d < n && ++ix[d] == choices[d].size()) ix[d++] = 0;
        if (d == n || n == 0) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// permutation operad arithmetic shared by SigmaTilde and Br

namespace {

Perm perm_substitute(const Perm& a, const std::vector<Perm>& bs) {
    int n = a.degree();
    assert(static_cast<int>(bs.size()) == n);
    std::vector<int> off(n + 1, 0);
    for (int i = 1; i <= n; ++i) off[i] = off[i - 1] + bs[i - 1].degree();
    std::vector<int> img;
    img.reserve(off[n]);
    for (int k = 1; k <= n; ++k) {
        int g = a(k);
        for (int j = 1; j <= bs[g - 1].degree(); ++j)
            img.push_back(off[g - 1] + bs[g - 1](j));
    }
    return Perm(std::move(img));
}

std::vector<int> block_of(int off, int len) {
    std::vector<int> v(len);
    for (int i = 0; i < len; ++i) v[i] = off + i + 1;
    return v;
}

// ---------------------------------------------------------------------------

class InitialOperad final : public Operad {
public:
    std::string name() const override { return "initial"; }
    bool has_nullary() const override { return false; }
    OperadElt unit() const override { return OperadElt::initial(); }

    std::vector<OperadElt> objects(int arity, const EnumBudget&) const override {
        if (arity == 1) return {unit()};
        return {};
    }
    std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                  const EnumBudget&) const override {
        if (a == b) return {identity(a)};
        return {};
    }
    std::optional<OperadMor> hom_witness(const OperadElt& a,
                                         const OperadElt& b) const override {
        if (a == b) return identity(a);
        return std::nullopt;
    }
    OperadElt substitute(const OperadElt&, const std::vector<OperadElt>&) const override {
        return unit();
    }
    OperadMor substitute_mor(const OperadMor& a,
                             const std::vector<OperadMor>&) const override {
        return a;
    }
    OperadElt act(const OperadElt& A, const Perm&) const override { return A; }
    OperadMor act_mor(const OperadMor& m, const Perm&) const override { return m; }
    Perm twist(const OperadElt&) const override { return Perm(1); }
    OperadMor compose(const OperadMor& g, const OperadMor&) const override { return g; }
    FactorizationInitial factorization_initial(const OperadElt& A, const OperadElt&,
                                               const std::vector<OperadElt>& Cs,
                                               const OperadMor& alpha) const override {
        FactorizationInitial f;
        f.factors = Cs;
        f.rho = alpha;
        for (const auto& c : Cs) f.comparisons.push_back(identity(c));
        (void)A;
        return f;
    }
};

// ---------------------------------------------------------------------------

class MkOperad final : public Operad {
public:
    explicit MkOperad(int k, bool inf_view = false) : k_(k), inf_(inf_view) {}

    std::string name() const override {
        return (inf_ ? "Minf:" : "Mk:") + std::to_string(k_);
    }
    int k() const { return k_; }
    bool has_nullary() const override { return true; }
    OperadElt unit() const override { return OperadElt::of(MonoidalWord::unit()); }
    OperadElt nullary() const override { return OperadElt::of(MonoidalWord::nullary()); }

    std::vector<OperadElt> objects(int arity, const EnumBudget&) const override {
        std::vector<OperadElt> out;
        for (auto& w : enumerate_words(k_, arity)) out.push_back(OperadElt::of(w));
        return out;
    }
    std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                  const EnumBudget&) const override {
        if (auto w = hom_witness(a, b)) return {*w};
        return {};
    }
    std::optional<OperadMor> hom_witness(const OperadElt& a,
                                         const OperadElt& b) const override {
        if (!word_leq(a.word, b.word, k_)) return std::nullopt;
        OperadMor m;
        m.src = a;
        m.dst = b;
        return m;
    }
    OperadElt substitute(const OperadElt& A,
                         const std::vector<OperadElt>& Bs) const override {
        std::vector<MonoidalWord> ws;
        for (const auto& b : Bs) ws.push_back(b.word);
        return OperadElt::of(word_substitute(A.word, ws));
    }
    OperadMor substitute_mor(const OperadMor& a,
                             const std::vector<OperadMor>& bs) const override {
        std::vector<OperadElt> s, d;
        for (const auto& b : bs) {
            s.push_back(b.src);
            d.push_back(b.dst);
        }
        OperadMor m;
        m.src = substitute(a.src, s);
        m.dst = substitute(a.dst, d);
        if (!word_leq(m.src.word, m.dst.word, k_))
            throw std::logic_error("Mk substitute_mor produced a non-morphism");
        return m;
    }
    OperadElt act(const OperadElt& A, const Perm& s) const override {
        return OperadElt::of(word_act(A.word, s));
    }
    OperadMor act_mor(const OperadMor& m, const Perm& s) const override {
        OperadMor r;
        r.src = act(m.src, s);
        r.dst = act(m.dst, s);
        return r;
    }
    Perm twist(const OperadElt& A) const override {
        return A.word.leaf_perm().inverse();
    }
    OperadMor compose(const OperadMor& g, const OperadMor& f) const override {
        if (!(f.dst == g.src)) throw std::invalid_argument("Mk compose: not composable");
        OperadMor m;
        m.src = f.src;
        m.dst = g.dst;
        return m;
    }
    FactorizationInitial factorization_initial(const OperadElt& A, const OperadElt& B,
                                               const std::vector<OperadElt>& Cs,
                                               const OperadMor& alpha) const override {
        // Restriction formula: E_i = A n S_i over the ordered partition by
        // the factor arities.
        FactorizationInitial out;
        int off = 0;
        for (const auto& c : Cs) {
            int r = c.arity();
            if (r == 0)
                out.factors.push_back(nullary());
            else
                out.factors.push_back(
                    OperadElt::of(word_restrict(A.word, block_of(off, r))));
            off += r;
        }
        OperadElt target = substitute(B, out.factors);
        auto rho = hom_witness(A, target);
        if (!rho)
            throw std::invalid_argument("Mk factorization: input not factorizable");
        out.rho = *rho;
        for (size_t i = 0; i < Cs.size(); ++i) {
            auto cmp = hom_witness(out.factors[i], Cs[i]);
            if (!cmp)
                throw std::invalid_argument("Mk factorization: comparison missing");
            out.comparisons.push_back(*cmp);
        }
        (void)alpha;
        return out;
    }

private:
    int k_;
    bool inf_;
};

// ---------------------------------------------------------------------------

class SigmaOperad final : public Operad {
public:
    explicit SigmaOperad(bool with_nullary) : nullary_(with_nullary) {}

    std::string name() const override { return nullary_ ? "SigmaTilde" : "SigmaHat"; }
    bool has_nullary() const override { return nullary_; }
    OperadElt unit() const override { return OperadElt::of(Perm(1)); }
    OperadElt nullary() const override {
        if (!nullary_) return Operad::nullary();
        return OperadElt::of(Perm(0));
    }

    std::vector<OperadElt> objects(int arity, const EnumBudget&) const override {
        if (arity == 0 && !nullary_) return {};
        std::vector<OperadElt> out;
        for (auto& p : Perm::all(arity)) out.push_back(OperadElt::of(p));
        return out;
    }
    std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                  const EnumBudget&) const override {
        if (a.arity() != b.arity()) return {};
        OperadMor m;
        m.src = a;
        m.dst = b;
        return {m};
    }
    std::optional<OperadMor> hom_witness(const OperadElt& a,
                                         const OperadElt& b) const override {
        if (a.arity() != b.arity()) return std::nullopt;
        OperadMor m;
        m.src = a;
        m.dst = b;
        return m;
    }
    OperadElt substitute(const OperadElt& A,
                         const std::vector<OperadElt>& Bs) const override {
        std::vector<Perm> ps;
        for (const auto& b : Bs) ps.push_back(b.perm);
        return OperadElt::of(perm_substitute(A.perm, ps));
    }
    OperadMor substitute_mor(const OperadMor& a,
                             const std::vector<OperadMor>& bs) const override {
        std::vector<OperadElt> s, d;
        for (const auto& b : bs) {
            s.push_back(b.src);
            d.push_back(b.dst);
        }
        OperadMor m;
        m.src = substitute(a.src, s);
        m.dst = substitute(a.dst, d);
        return m;
    }
    OperadElt act(const OperadElt& A, const Perm& s) const override {
        return OperadElt::of(s.inverse() * A.perm);
    }
    OperadMor act_mor(const OperadMor& m, const Perm& s) const override {
        OperadMor r;
        r.src = act(m.src, s);
        r.dst = act(m.dst, s);
        return r;
    }
    Perm twist(const OperadElt& A) const override { return A.perm.inverse(); }
    OperadMor compose(const OperadMor& g, const OperadMor& f) const override {
        OperadMor m;
        m.src = f.src;
        m.dst = g.dst;
        return m;
    }
    FactorizationInitial factorization_initial(const OperadElt&, const OperadElt&,
                                               const std::vector<OperadElt>& Cs,
                                               const OperadMor& alpha) const override {
        FactorizationInitial out;
        out.factors = Cs;
        out.rho = alpha;
        for (const auto& c : Cs) out.comparisons.push_back(identity(c));
        return out;
    }
    FactorizationInitial normalize_factorization(const OperadElt& A, const OperadElt& B,
                                                 const std::vector<OperadElt>& Cs,
                                                 const OperadMor&) const override {
        // every object is initial; the canonical one has identity factors
        FactorizationInitial out;
        for (const auto& c : Cs) out.factors.push_back(OperadElt::of(Perm(c.arity())));
        out.rho = *hom_witness(A, substitute(B, out.factors));
        for (size_t i = 0; i < Cs.size(); ++i)
            out.comparisons.push_back(*hom_witness(out.factors[i], Cs[i]));
        return out;
    }

private:
    bool nullary_;
};

// ---------------------------------------------------------------------------

class BrOperad final : public Operad {
public:
    BrOperad(bool positive, int word_cap) : positive_(positive), cap_(word_cap) {}

    std::string name() const override { return positive_ ? "BrPlus" : "Br"; }
    bool has_nullary() const override { return true; }
    OperadElt unit() const override { return OperadElt::of(Perm(1)); }
    OperadElt nullary() const override { return OperadElt::of(Perm(0)); }

    std::vector<OperadElt> objects(int arity, const EnumBudget&) const override {
        std::vector<OperadElt> out;
        for (auto& p : Perm::all(arity)) out.push_back(OperadElt::of(p));
        return out;
    }

    std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                  const EnumBudget& bd) const override {
        std::vector<OperadMor> out;
        if (a.arity() != b.arity()) return out;
        int n = a.arity();
        Perm want = b.perm.inverse() * a.perm;
        // all words up to the budget, deduped by normal form
        std::vector<BraidWord> words{BraidWord::identity(n)};
        std::set<std::string> seen;
        for (int len = 0; len <= bd.braid_len; ++len) {
            std::vector<BraidWord> next;
            for (const auto& w : words) {
                if (underlying_permutation(w) == want) {
                    auto nf = garside_nf(w);
                    std::string key = std::to_string(nf.inf);
                    for (const auto& f : nf.factors) key += "|" + f.str();
                    if (seen.insert(key).second) {
                        OperadMor m;
                        m.src = a;
                        m.dst = b;
                        m.braid = w;
                        out.push_back(m);
                    }
                }
                if (len < bd.braid_len) {
                    for (int i = 1; i < n; ++i) {
                        for (int s : positive_ ? std::vector<int>{+1}
                                               : std::vector<int>{+1, -1}) {
                            BraidWord w2 = w;
                            w2.letters.push_back({i, s});
                            next.push_back(std::move(w2));
                        }
                    }
                }
            }
            words = std::move(next);
        }
        return out;
    }

    std::optional<OperadMor> hom_witness(const OperadElt& a,
                                         const OperadElt& b) const override {
        if (a.arity() != b.arity()) return std::nullopt;
        OperadMor m;
        m.src = a;
        m.dst = b;
        m.braid = permutation_braid(b.perm.inverse() * a.perm);
        return m;
    }

    OperadElt substitute(const OperadElt& A,
                         const std::vector<OperadElt>& Bs) const override {
        std::vector<Perm> ps;
        for (const auto& b : Bs) ps.push_back(b.perm);
        return OperadElt::of(perm_substitute(A.perm, ps));
    }

    OperadMor substitute_mor(const OperadMor& a,
                             const std::vector<OperadMor>& bs) const override {
        int n = a.src.arity();
        std::vector<OperadElt> s, d;
        std::vector<BraidWord> inner;
        std::vector<int> widths(n);
        for (const auto& b : bs) {
            s.push_back(b.src);
            d.push_back(b.dst);
        }
        for (int k = 1; k <= n; ++k) {
            int g = a.src.perm(k);
            widths[k - 1] = bs[g - 1].src.arity();
            inner.push_back(bs[g - 1].braid);
        }
        OperadMor m;
        m.src = substitute(a.src, s);
        m.dst = substitute(a.dst, d);
        m.braid = cable(a.braid, widths) * block_sum(inner);
        if (!(m.dst.perm * underlying_permutation(m.braid) == m.src.perm))
            throw std::logic_error("Br substitute_mor endpoint mismatch");
        if (m.braid.length() > cap_)
            throw std::length_error("Br substitute_mor exceeds the word cap");
        return m;
    }

    OperadElt act(const OperadElt& A, const Perm& s) const override {
        return OperadElt::of(s.inverse() * A.perm);
    }
    OperadMor act_mor(const OperadMor& m, const Perm& s) const override {
        OperadMor r = m;
        r.src = act(m.src, s);
        r.dst = act(m.dst, s);
        return r;
    }
    Perm twist(const OperadElt& A) const override { return A.perm.inverse(); }

    OperadMor compose(const OperadMor& g, const OperadMor& f) const override {
        OperadMor m;
        m.src = f.src;
        m.dst = g.dst;
        m.braid = g.braid * f.braid;
        if (m.braid.length() > cap_)
            throw std::length_error("Br compose exceeds the word cap");
        return m;
    }

    bool mor_equal(const OperadMor& a, const OperadMor& b) const override {
        return a.src == b.src && a.dst == b.dst && braid_equal(a.braid, b.braid);
    }

    EqStrategy eq_strategy() const override { return EqStrategy::Solve; }

    FactorizationInitial factorization_initial(const OperadElt&, const OperadElt&,
                                               const std::vector<OperadElt>& Cs,
                                               const OperadMor& alpha) const override {
        // every object of a component is initial (group blocks)
        FactorizationInitial out;
        out.factors = Cs;
        out.rho = alpha;
        for (const auto& c : Cs) out.comparisons.push_back(identity(c));
        return out;
    }

    std::optional<std::vector<OperadMor>> factor_block(
        const OperadElt& B, const std::vector<OperadElt>& Cs,
        const std::vector<OperadElt>& Ds, const OperadMor& alpha, const OperadMor& beta,
        const EnumBudget&) const override {
        size_t n = Cs.size();
        BraidWord w = beta.braid * alpha.braid.inverse();
        if (positive_) {
            // stay inside the monoid: require both sides positive afterwards
        }
        // position block k carries the factor with generator index B(k)
        std::vector<int> widths(n), gen_at(n);
        int total = 0;
        for (size_t k = 1; k <= n; ++k) {
            int g = B.perm(static_cast<int>(k));
            gen_at[k - 1] = g;
            widths[k - 1] = Cs[g - 1].arity();
            total += widths[k - 1];
        }
        if (w.strands != total) return std::nullopt;
        // strand extraction per block
        std::vector<BraidWord> parts(n, BraidWord::identity(0));
        int off = 0;
        for (size_t k = 0; k < n; ++k) {
            std::vector<int> drop;
            for (int s = 1; s <= total; ++s)
                if (s <= off || s > off + widths[k]) drop.push_back(s);
            parts[k] = delete_strands(w, drop);
            off += widths[k];
        }
        if (!braid_equal(block_sum(parts), w)) return std::nullopt;
        std::vector<OperadMor> out(n);
        for (size_t k = 0; k < n; ++k) {
            int g = gen_at[k];
            OperadMor m;
            m.src = Cs[g - 1];
            m.dst = Ds[g - 1];
            m.braid = parts[k];
            if (positive_ && !m.braid.positive()) {
                // look for a positive representative of the same element
                auto nf = garside_nf(m.braid);
                if (nf.inf < 0) return std::nullopt;
                BraidWord pos = BraidWord::identity(m.braid.strands);
                BraidWord delta = permutation_braid(Perm::reversal(m.braid.strands));
                for (int t = 0; t < nf.inf; ++t) pos = pos * delta;
                for (const auto& f : nf.factors) pos = pos * permutation_braid(f);
                m.braid = pos;
            }
            if (!(m.dst.perm * underlying_permutation(m.braid) == m.src.perm))
                return std::nullopt;
            out[g - 1] = m;
        }
        return out;
    }

private:
    bool positive_;
    int cap_;
};

// ---------------------------------------------------------------------------

class FreeOperadImpl final : public Operad {
public:
    explicit FreeOperadImpl(Collection K) : K_(std::move(K)) {
        for (int a = 0; a <= K_.max_arity(); ++a) {
            if (!K_.has(a)) continue;
            auto rep = K_.gens[a].validate();
            if (!rep.ok())
                throw std::invalid_argument("free operad: generator category invalid: " +
                                            rep.summary());
        }
    }

    const Collection& collection() const { return K_; }

    std::string name() const override { return "Free"; }
    bool has_nullary() const override { return K_.has(0); }
    OperadElt unit() const override { return OperadElt::of(FreeTree::unit_leaf()); }

    std::vector<OperadElt> objects(int arity, const EnumBudget& bd) const override {
        std::vector<OperadElt> out;
        for (auto& t : enumerate_trees(K_, arity, bd.max_tree_nodes))
            out.push_back(OperadElt::of(t));
        return out;
    }
    std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                  const EnumBudget&) const override {
        std::vector<OperadMor> out;
        for (auto& tm : tree_homset(K_, a.tree, b.tree)) {
            OperadMor m;
            m.src = a;
            m.dst = b;
            m.node_mor = tm.node_mor;
            out.push_back(std::move(m));
        }
        return out;
    }
    std::optional<OperadMor> hom_witness(const OperadElt& a,
                                         const OperadElt& b) const override {
        auto hs = homset(a, b, {});
        if (hs.empty()) return std::nullopt;
        return hs.front();
    }
    OperadElt substitute(const OperadElt& A,
                         const std::vector<OperadElt>& Bs) const override {
        std::vector<FreeTree> ts;
        for (const auto& b : Bs) ts.push_back(b.tree);
        return OperadElt::of(tree_substitute(A.tree, ts));
    }
    OperadMor substitute_mor(const OperadMor& a,
                             const std::vector<OperadMor>& bs) const override {
        std::vector<OperadElt> s, d;
        for (const auto& b : bs) {
            s.push_back(b.src);
            d.push_back(b.dst);
        }
        OperadMor m;
        m.src = substitute(a.src, s);
        m.dst = substitute(a.dst, d);
        // preorder interleave of the grafted tree
        struct Emit {
            const std::vector<OperadMor>& bs;
            const OperadMor& a;
            std::vector<int> out;
            size_t a_ix = 0;

            void walk_b(const FreeTree::Node& n, const OperadMor& b, size_t& b_ix) {
                if (n.leaf) return;
                out.push_back(b.node_mor[b_ix++]);
                for (const auto& c : n.child) walk_b(c, b, b_ix);
            }
            void walk_a(const FreeTree::Node& n) {
                if (n.leaf) {
                    size_t b_ix = 0;
                    walk_b(bs[n.gen - 1].src.tree.root, bs[n.gen - 1], b_ix);
                    return;
                }
                out.push_back(a.node_mor[a_ix++]);
                for (const auto& c : n.child) walk_a(c);
            }
        } emit{bs, a, {}, 0};
        emit.walk_a(a.src.tree.root);
        m.node_mor = std::move(emit.out);
        return m;
    }
    OperadElt act(const OperadElt& A, const Perm& s) const override {
        return OperadElt::of(tree_act(A.tree, s));
    }
    OperadMor act_mor(const OperadMor& m, const Perm& s) const override {
        OperadMor r = m;
        r.src = act(m.src, s);
        r.dst = act(m.dst, s);
        return r;
    }
    Perm twist(const OperadElt& A) const override {
        return A.tree.leaf_perm().inverse();
    }
    OperadMor compose(const OperadMor& g, const OperadMor& f) const override {
        FreeTreeMor gf{g.src.tree, g.dst.tree, g.node_mor};
        FreeTreeMor ff{f.src.tree, f.dst.tree, f.node_mor};
        auto c = tree_mor_compose(K_, gf, ff);
        OperadMor m;
        m.src = f.src;
        m.dst = g.dst;
        m.node_mor = c.node_mor;
        return m;
    }
    FactorizationInitial factorization_initial(const OperadElt& A, const OperadElt& B,
                                               const std::vector<OperadElt>& Cs,
                                               const OperadMor& alpha) const override {
        // unique factorization by cutting A along the shape of B
        FactorizationInitial out;
        struct Cut {
            const FreeTree::Node* a;
            std::vector<FreeTree::Node> pieces;   // E-subtrees in block order
            std::vector<std::vector<int>> piece_nodes;  // preorder indices in A
            std::vector<int> top_nodes;                 // A-preorder of the B part
            int ix = 0;

            void walk(const FreeTree::Node& b, const FreeTree::Node& a_n,
                      std::vector<int> offsets) {
                if (b.leaf) {
                    // a_n is the E-subtree for block b.gen
                    pieces[b.gen - 1] = a_n;
                    collect(a_n, piece_nodes[b.gen - 1]);
                    return;
                }
                top_nodes.push_back(ix++);
                for (size_t c = 0; c < b.child.size(); ++c)
                    walk(b.child[c], a_n.child[c], offsets);
            }
            void collect(const FreeTree::Node& n, std::vector<int>& out) {
                if (n.leaf) return;
                out.push_back(ix++);
                for (const auto& c : n.child) collect(c, out);
            }
        } cut{&A.tree.root, {}, {}, {}, 0};
        int n = B.arity();
        cut.pieces.resize(n);
        cut.piece_nodes.resize(n);
        if (shape_mismatch(B.tree.root, A.tree.root))
            throw std::invalid_argument("free factorization: shapes do not match");
        cut.walk(B.tree.root, A.tree.root, {});
        // relabel piece leaves down to 1..r_i
        std::vector<int> off(n + 1, 0);
        for (int i = 1; i <= n; ++i) off[i] = off[i - 1] + Cs[i - 1].arity();
        for (int i = 0; i < n; ++i) {
            FreeTree t{cut.pieces[i]};
            struct Shift {
                int off;
                void go(FreeTree::Node& m) {
                    if (m.leaf) { m.gen -= off; return; }
                    for (auto& c : m.child) go(c);
                }
            } sh{off[i]};
            sh.go(t.root);
            out.factors.push_back(OperadElt::of(t));
        }
        // rho: alpha's node morphisms on the B part, identities on pieces
        OperadMor rho;
        rho.src = A;
        rho.dst = substitute(B, out.factors);
        {
            std::vector<int> nm(alpha.node_mor.size(), -1);
            for (int t : cut.top_nodes) nm[t] = alpha.node_mor[t];
            rho.node_mor = nm;
        }
        out.rho = rho;
        for (int i = 0; i < n; ++i) {
            OperadMor cmp;
            cmp.src = out.factors[i];
            cmp.dst = Cs[i];
            for (int t : cut.piece_nodes[i]) cmp.node_mor.push_back(alpha.node_mor[t]);
            out.comparisons.push_back(std::move(cmp));
        }
        return out;
    }

private:
    static bool shape_mismatch(const FreeTree::Node& b, const FreeTree::Node& a) {
        if (b.leaf) return false;
        if (a.leaf) return true;
        if (a.arity != b.arity || a.child.size() != b.child.size()) return true;
        for (size_t i = 0; i < b.child.size(); ++i)
            if (shape_mismatch(b.child[i], a.child[i])) return true;
        return false;
    }

    Collection K_;
};

} // namespace

std::shared_ptr<const Operad> make_initial_operad() {
    return std::make_shared<InitialOperad>();
}
std::shared_ptr<const Operad> make_mk_operad(int k) {
    return std::make_shared<MkOperad>(k);
}
std::shared_ptr<const Operad> make_minf_operad(int k) {
    return std::make_shared<MkOperad>(k, true);
}
std::shared_ptr<const Operad> make_sigma_tilde() {
    return std::make_shared<SigmaOperad>(true);
}
std::shared_ptr<const Operad> make_sigma_hat() {
    return std::make_shared<SigmaOperad>(false);
}
std::shared_ptr<const Operad> make_br(bool positive, int word_cap) {
    return std::make_shared<BrOperad>(positive, word_cap);
}
std::shared_ptr<const Operad> make_free_operad(Collection K) {
    return std::make_shared<FreeOperadImpl>(std::move(K));
}

// defined in json_io.cpp
Collection load_collection_file(const std::string& path);

std::shared_ptr<const Operad> operad_by_selector(const std::string& sel) {
    auto starts = [&](const char* p) { return sel.rfind(p, 0) == 0; };
    if (sel == "initial") return make_initial_operad();
    if (starts("Mk:")) return make_mk_operad(std::stoi(sel.substr(3)));
    if (starts("Minf:")) return make_minf_operad(std::stoi(sel.substr(5)));
    if (sel == "SigmaTilde") return make_sigma_tilde();
    if (sel == "SigmaHat") return make_sigma_hat();
    if (sel == "Br") return make_br(false);
    if (sel == "BrPlus") return make_br(true);
    if (starts("Free:")) return make_free_operad(load_collection_file(sel.substr(5)));
    throw std::invalid_argument("unknown operad selector: " + sel);
}

// ---------------------------------------------------------------------------
// Section-8 operad morphisms

OperadElt operad_map_apply(const std::string& name, const OperadElt& x) {
    if (name == "lambda" || name == "beta") {
        if (x.tag != OperadElt::Tag::Word)
            throw std::invalid_argument(name + ": expects a monoidal word");
        return OperadElt::of(x.word.leaf_perm());
    }
    if (name == "mu") {
        if (x.tag != OperadElt::Tag::PermObj)
            throw std::invalid_argument("mu: expects a braid-operad object");
        return x;
    }
    if (name == "iota") {
        if (x.tag != OperadElt::Tag::Word)
            throw std::invalid_argument("iota: expects a monoidal word");
        return x;  // identity on representations
    }
    throw std::invalid_argument("unknown operad map: " + name);
}

OperadMor operad_map_apply_mor(const std::string& name, const OperadMor& m) {
    if (name == "lambda") {
        OperadMor r;
        r.src = operad_map_apply(name, m.src);
        r.dst = operad_map_apply(name, m.dst);
        return r;
    }
    if (name == "beta") {
        // strands join equal generators; swapped pairs cross once, so the
        // image is the positive permutation braid of the displacement
        OperadMor r;
        r.src = operad_map_apply(name, m.src);
        r.dst = operad_map_apply(name, m.dst);
        r.braid = permutation_braid(r.dst.perm * r.src.perm.inverse());
        return r;
    }
    if (name == "mu") return m;
    if (name == "iota") return m;
    throw std::invalid_argument("unknown operad map: " + name);
}

} // namespace hocat
