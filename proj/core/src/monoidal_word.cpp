#include "hocat/monoidal_word.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace hocat {

namespace {

void collect_leaves(const MonoidalWord::Node& n, std::vector<int>& out) {
    if (n.leaf()) {
        if (n.gen > 0) out.push_back(n.gen);
        return;
    }
    for (const auto& c : n.child) collect_leaves(c, out);
}

// Reduction: drop unit leaves, collapse unary nodes, merge same-op nesting.
MonoidalWord::Node reduce(const MonoidalWord::Node& n) {
    if (n.leaf()) return n;
    std::vector<MonoidalWord::Node> kids;
    for (const auto& c : n.child) {
        auto r = reduce(c);
        if (r.leaf() && r.gen == 0) continue;           // unit absorbed
        if (!r.leaf() && r.op == n.op) {
            for (auto& g : r.child) kids.push_back(std::move(g));
        } else {
            kids.push_back(std::move(r));
        }
    }
    if (kids.empty()) return MonoidalWord::Node{0, 0, {}};
    if (kids.size() == 1) return kids[0];
    return MonoidalWord::Node{n.op, 0, std::move(kids)};
}

void relabel(MonoidalWord::Node& n, const std::vector<int>& new_label) {
    if (n.leaf()) {
        if (n.gen > 0) n.gen = new_label[n.gen];
        return;
    }
    for (auto& c : n.child) relabel(c, new_label);
}

int max_op(const MonoidalWord::Node& n) {
    if (n.leaf()) return 0;
    int m = n.op;
    for (const auto& c : n.child) m = std::max(m, max_op(c));
    return m;
}

} // namespace

int MonoidalWord::arity() const {
    std::vector<int> ls;
    collect_leaves(root, ls);
    return static_cast<int>(ls.size());
}

Perm MonoidalWord::leaf_perm() const {
    std::vector<int> ls;
    collect_leaves(root, ls);
    return Perm(std::move(ls));
}

MonoidalWord MonoidalWord::unit() { return generator_leaf(1); }

MonoidalWord MonoidalWord::nullary() { return MonoidalWord{Node{0, 0, {}}}; }

MonoidalWord MonoidalWord::generator_leaf(int g) {
    return MonoidalWord{Node{0, g, {}}};
}

std::string MonoidalWord::str() const {
    struct P {
        static std::string go(const Node& n, bool outer) {
            if (n.leaf()) return n.gen == 0 ? "0" : std::to_string(n.gen);
            std::string s;
            for (size_t i = 0; i < n.child.size(); ++i) {
                if (i) s += " b" + std::to_string(n.op) + " ";
                s += go(n.child[i], false);
            }
            return outer ? s : "(" + s + ")";
        }
    };
    return P::go(root, true);
}

std::optional<MonoidalWord> MonoidalWord::parse(const std::string& text) {
    // tokens: integers, bN, parens
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == ')') {
            if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
            toks.emplace_back(1, c);
        } else if (isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    size_t pos = 0;
    struct Parser {
        const std::vector<std::string>& t;
        size_t& pos;
        bool fail = false;

        MonoidalWord::Node atom() {
            if (pos >= t.size()) { fail = true; return {}; }
            if (t[pos] == "(") {
                ++pos;
                auto n = expr();
                if (pos >= t.size() || t[pos] != ")") { fail = true; return {}; }
                ++pos;
                return n;
            }
            try {
                int g = std::stoi(t[pos]);
                ++pos;
                return MonoidalWord::Node{0, g, {}};
            } catch (...) {
                fail = true;
                return {};
            }
        }

        MonoidalWord::Node expr() {
            auto left = atom();
            while (!fail && pos < t.size() && t[pos].size() > 1 && t[pos][0] == 'b') {
                int op;
                try { op = std::stoi(t[pos].substr(1)); } catch (...) { fail = true; break; }
                ++pos;
                auto right = atom();
                MonoidalWord::Node n{op, 0, {}};
                n.child.push_back(std::move(left));
                n.child.push_back(std::move(right));
                left = std::move(n);
            }
            return left;
        }
    } p{toks, pos};
    auto n = p.expr();
    if (p.fail || pos != toks.size()) return std::nullopt;
    MonoidalWord w{reduce(n)};
    return w;
}

MonoidalWord word_substitute(const MonoidalWord& a, const std::vector<MonoidalWord>& bs) {
    std::vector<int> offs(bs.size() + 1, 0);
    for (size_t i = 0; i < bs.size(); ++i) offs[i + 1] = offs[i] + bs[i].arity();
    struct Sub {
        const std::vector<MonoidalWord>& bs;
        const std::vector<int>& offs;

        MonoidalWord::Node shift(const MonoidalWord::Node& n, int off) const {
            if (n.leaf())
                return MonoidalWord::Node{0, n.gen > 0 ? n.gen + off : 0, {}};
            MonoidalWord::Node r{n.op, 0, {}};
            for (const auto& c : n.child) r.child.push_back(shift(c, off));
            return r;
        }

        MonoidalWord::Node go(const MonoidalWord::Node& n) const {
            if (n.leaf()) {
                if (n.gen == 0) return n;
                return shift(bs[n.gen - 1].root, offs[n.gen - 1]);
            }
            MonoidalWord::Node r{n.op, 0, {}};
            for (const auto& c : n.child) r.child.push_back(go(c));
            return r;
        }
    } sub{bs, offs};
    if (static_cast<size_t>(a.arity()) != bs.size())
        throw std::invalid_argument("word_substitute: arity mismatch");
    return MonoidalWord{reduce(sub.go(a.root))};
}

MonoidalWord word_act(const MonoidalWord& a, const Perm& s) {
    if (a.arity() != s.degree())
        throw std::invalid_argument("word_act: degree mismatch");
    // relabel generators g -> s^{-1}(g), leaving the tree shape alone
    Perm si = s.inverse();
    MonoidalWord out = a;
    struct W {
        const Perm& si;
        void go(MonoidalWord::Node& n) {
            if (n.leaf()) {
                if (n.gen > 0) n.gen = si(n.gen);
                return;
            }
            for (auto& c : n.child) go(c);
        }
    } w{si};
    w.go(out.root);
    return out;
}

MonoidalWord word_restrict(const MonoidalWord& w, const std::vector<int>& S) {
    if (S.empty()) throw std::invalid_argument("word_restrict: empty subset");
    std::vector<int> ls;
    collect_leaves(w.root, ls);
    std::vector<bool> keep(ls.size() + 1, false);
    for (int g : S) {
        if (g < 1 || g > static_cast<int>(ls.size()))
            throw std::invalid_argument("word_restrict: generator out of range");
        keep[g] = true;
    }
    struct R {
        const std::vector<bool>& keep;
        MonoidalWord::Node go(const MonoidalWord::Node& n) const {
            if (n.leaf()) {
                if (n.gen > 0 && !keep[n.gen]) return MonoidalWord::Node{0, 0, {}};
                return n;
            }
            MonoidalWord::Node r{n.op, 0, {}};
            for (const auto& c : n.child) r.child.push_back(go(c));
            return r;
        }
    } r{keep};
    MonoidalWord out{reduce(r.go(w.root))};
    // order-preserving relabel to 1..|S|
    std::vector<int> sorted(S);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> newlab(ls.size() + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) newlab[sorted[i]] = static_cast<int>(i) + 1;
    relabel(out.root, newlab);
    return out;
}

bool word_leq(const MonoidalWord& a, const MonoidalWord& b, int k) {
    int m = a.arity();
    if (b.arity() != m) return false;
    if (m <= 1) return a == b;
    // deepest-common-ancestor data per pair, via restriction to {x,y}
    for (int x = 1; x <= m; ++x)
        for (int y = x + 1; y <= m; ++y) {
            MonoidalWord ra = word_restrict(a, {x, y});
            MonoidalWord rb = word_restrict(b, {x, y});
            // each is "1 b_i 2" or "2 b_i 1"
            auto read = [](const MonoidalWord& w) {
                bool keeps = w.root.child[0].gen == 1;
                return std::make_pair(w.root.op, keeps);
            };
            auto [i, a_keeps] = read(ra);
            auto [j, b_keeps] = read(rb);
            bool a_ord = a_keeps, b_ord = b_keeps;
            // normalize to "x before y" orientation
            int ai = i, bj = j;
            if (a_ord == b_ord) {
                if (bj < ai) return false;  // same order needs j >= i
            } else {
                if (bj <= ai) return false;  // swap needs j > i
            }
            (void)k;
        }
    return true;
}

std::vector<MonoidalWord> enumerate_words(int k, int m) {
    if (m == 0) return {MonoidalWord::nullary()};
    // shapes on an ordered generator multiset, then all labelings by action
    // enumerate words with leaves 1..m in canonical positions, then relabel
    struct Gen {
        int k;
        // all reduced trees with the given ordered leaf labels
        std::vector<MonoidalWord::Node> trees(const std::vector<int>& leaves,
                                              int forbidden_op) const {
            std::vector<MonoidalWord::Node> out;
            if (leaves.size() == 1) {
                out.push_back(MonoidalWord::Node{0, leaves[0], {}});
                return out;
            }
            for (int op = 1; op <= k; ++op) {
                if (op == forbidden_op) continue;
                // split leaves into >= 2 consecutive nonempty blocks
                std::vector<std::vector<std::vector<int>>> splits;
                split(leaves, 0, {}, splits);
                for (const auto& blocks : splits) {
                    if (blocks.size() < 2) continue;
                    std::vector<std::vector<MonoidalWord::Node>> parts;
                    bool ok = true;
                    for (const auto& blk : blocks) {
                        auto sub = trees(blk, op);
                        if (sub.empty()) { ok = false; break; }
                        parts.push_back(std::move(sub));
                    }
                    if (!ok) continue;
                    // cartesian product
                    std::vector<size_t> ix(parts.size(), 0);
                    while (true) {
                        MonoidalWord::Node n{op, 0, {}};
                        for (size_t i = 0; i < parts.size(); ++i)
                            n.child.push_back(parts[i][ix[i]]);
                        out.push_back(std::move(n));
                        size_t d = 0;
                        while (d < ix.size() && ++ix[d] == parts[d].size()) ix[d++] = 0;
                        if (d == ix.size()) break;
                    }
                }
            }
            return out;
        }

        static void split(const std::vector<int>& v, size_t from,
                          std::vector<std::vector<int>> acc,
                          std::vector<std::vector<std::vector<int>>>& out) {
            if (from == v.size()) {
                out.push_back(std::move(acc));
                return;
            }
            for (size_t to = from + 1; to <= v.size(); ++to) {
                auto acc2 = acc;
                acc2.emplace_back(v.begin() + from, v.begin() + to);
                split(v, to, std::move(acc2), out);
            }
        }
    } gen{k};
    std::vector<int> id_leaves(m);
    for (int i = 0; i < m; ++i) id_leaves[i] = i + 1;
    std::vector<MonoidalWord> out;
    for (auto& shape : gen.trees(id_leaves, 0)) {
        MonoidalWord w{shape};
        for (const auto& s : Perm::all(m)) out.push_back(word_act(w, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hocat
