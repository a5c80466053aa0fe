#include "hocat/free_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hocat {

namespace {

void collect_leaves(const FreeTree::Node& n, std::vector<int>& out) {
    if (n.leaf) {
        out.push_back(n.gen);
        return;
    }
    for (const auto& c : n.child) collect_leaves(c, out);
}

void collect_nodes(const FreeTree::Node& n, std::vector<const FreeTree::Node*>& out) {
    if (n.leaf) return;
    out.push_back(&n);
    for (const auto& c : n.child) collect_nodes(c, out);
}

} // namespace

int FreeTree::arity() const {
    std::vector<int> ls;
    collect_leaves(root, ls);
    return static_cast<int>(ls.size());
}

Perm FreeTree::leaf_perm() const {
    std::vector<int> ls;
    collect_leaves(root, ls);
    return Perm(std::move(ls));
}

std::string FreeTree::str(const Collection& K) const {
    struct P {
        const Collection& K;
        std::string go(const FreeTree::Node& n) const {
            if (n.leaf) return std::to_string(n.gen);
            std::string s = K.gens[n.arity].object_id(n.obj) + "(";
            for (size_t i = 0; i < n.child.size(); ++i) {
                if (i) s += ",";
                s += go(n.child[i]);
            }
            return s + ")";
        }
    } p{K};
    return p.go(root);
}

FreeTree tree_substitute(const FreeTree& a, const std::vector<FreeTree>& bs) {
    if (static_cast<size_t>(a.arity()) != bs.size())
        throw std::invalid_argument("tree_substitute: arity mismatch");
    std::vector<int> offs(bs.size() + 1, 0);
    for (size_t i = 0; i < bs.size(); ++i) offs[i + 1] = offs[i] + bs[i].arity();
    struct Sub {
        const std::vector<FreeTree>& bs;
        const std::vector<int>& offs;

        FreeTree::Node shift(const FreeTree::Node& n, int off) const {
            if (n.leaf) return FreeTree::Node{true, n.gen + off, 0, -1, {}};
            FreeTree::Node r = n;
            r.child.clear();
            for (const auto& c : n.child) r.child.push_back(shift(c, off));
            return r;
        }

        FreeTree::Node go(const FreeTree::Node& n) const {
            if (n.leaf) return shift(bs[n.gen - 1].root, offs[n.gen - 1]);
            FreeTree::Node r = n;
            r.child.clear();
            for (const auto& c : n.child) r.child.push_back(go(c));
            return r;
        }
    } sub{bs, offs};
    return FreeTree{sub.go(a.root)};
}

FreeTree tree_act(const FreeTree& a, const Perm& s) {
    if (a.arity() != s.degree())
        throw std::invalid_argument("tree_act: degree mismatch");
    // relabel leaves g -> s^{-1}(g), keeping the planar shape
    Perm si = s.inverse();
    FreeTree out = a;
    struct W {
        const Perm& si;
        void go(FreeTree::Node& n) {
            if (n.leaf) {
                n.gen = si(n.gen);
                return;
            }
            for (auto& c : n.child) go(c);
        }
    } w{si};
    w.go(out.root);
    return out;
}

FreeTreeMor tree_mor_identity(const FreeTree& t) {
    FreeTreeMor m{t, t, {}};
    std::vector<const FreeTree::Node*> nodes;
    collect_nodes(t.root, nodes);
    m.node_mor.resize(nodes.size(), -1);  // filled against a collection on use
    return m;
}

bool tree_mor_valid(const Collection& K, const FreeTreeMor& m) {
    std::vector<const FreeTree::Node*> sn, dn;
    collect_nodes(m.src.root, sn);
    collect_nodes(m.dst.root, dn);
    if (sn.size() != dn.size() || m.node_mor.size() != sn.size()) return false;
    if (m.src.leaf_perm().image() != m.dst.leaf_perm().image()) return false;
    for (size_t i = 0; i < sn.size(); ++i) {
        if (sn[i]->arity != dn[i]->arity) return false;
        const FinCat& g = K.gens[sn[i]->arity];
        int mm = m.node_mor[i];
        if (mm < 0) {
            if (sn[i]->obj != dn[i]->obj) return false;
            continue;  // -1 means identity
        }
        if (g.mor(mm).src != sn[i]->obj || g.mor(mm).dst != dn[i]->obj) return false;
    }
    return true;
}

FreeTreeMor tree_mor_compose(const Collection& K, const FreeTreeMor& g,
                             const FreeTreeMor& f) {
    assert(f.dst == g.src);
    FreeTreeMor out{f.src, g.dst, {}};
    std::vector<const FreeTree::Node*> nodes;
    collect_nodes(f.src.root, nodes);
    out.node_mor.resize(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        const FinCat& cat = K.gens[nodes[i]->arity];
        int a = f.node_mor[i] < 0 ? cat.identity(nodes[i]->obj) : f.node_mor[i];
        int b = g.node_mor[i];
        if (b < 0) {
            out.node_mor[i] = a;
        } else {
            out.node_mor[i] = cat.compose(b, a);
        }
    }
    return out;
}

std::vector<FreeTree> enumerate_trees(const Collection& K, int arity, int max_nodes) {
    // canonical-leaf trees first, then all relabelings
    struct Gen {
        const Collection& K;
        int max_nodes;

        // trees with `m` leaves and at most `budget` internal nodes; leaves
        // unlabeled here (gen = 0), labels attached afterwards
        std::vector<FreeTree::Node> go(int m, int budget) const {
            std::vector<FreeTree::Node> out;
            if (budget < 0) return out;
            if (m == 1) out.push_back(FreeTree::Node{true, 0, 0, -1, {}});
            for (int a = 0; a <= K.max_arity(); ++a) {
                if (!K.has(a)) continue;
                if (a == 0 && m != 0) continue;
                if (a == 0 && m == 0) {
                    for (int o = 0; o < K.gens[0].n_objects(); ++o)
                        out.push_back(FreeTree::Node{false, 0, 0, o, {}});
                    continue;
                }
                if (a >= 1 && budget >= 1) {
                    // split m leaves into a ordered parts (parts may be 0
                    // only if the collection has nullary generators)
                    std::vector<std::vector<int>> comps;
                    compositions(m, a, comps);
                    for (const auto& parts : comps) {
                        std::vector<std::vector<FreeTree::Node>> subs;
                        bool ok = true;
                        for (int p : parts) {
                            auto s = go(p, budget - 1);
                            if (s.empty()) { ok = false; break; }
                            subs.push_back(std::move(s));
                        }
                        if (!ok) continue;
                        std::vector<size_t> ix(subs.size(), 0);
                        while (true) {
                            int used = 1;
                            std::vector<FreeTree::Node> kids;
                            for (size_t i = 0; i < subs.size(); ++i) {
                                kids.push_back(subs[i][ix[i]]);
                                used += count_nodes(kids.back());
                            }
                            if (used <= budget) {
                                for (int o = 0; o < K.gens[a].n_objects(); ++o)
                                    out.push_back(FreeTree::Node{false, 0, a, o, kids});
                            }
                            size_t d = 0;
                            while (d < ix.size() && ++ix[d] == subs[d].size()) ix[d++] = 0;
                            if (d == ix.size()) break;
                        }
                    }
                }
            }
            return out;
        }

        static int count_nodes(const FreeTree::Node& n) {
            if (n.leaf) return 0;
            int c = 1;
            for (const auto& k : n.child) c += count_nodes(k);
            return c;
        }

        static void compositions(int m, int parts, std::vector<std::vector<int>>& out) {
            std::vector<int> cur(parts, 0);
            struct R {
                int parts;
                std::vector<std::vector<int>>& out;
                std::vector<int>& cur;
                void go(int i, int rem) {
                    if (i == parts) {
                        if (rem == 0) out.push_back(cur);
                        return;
                    }
                    for (int v = 0; v <= rem; ++v) {
                        cur[i] = v;
                        go(i + 1, rem - v);
                    }
                }
            } r{parts, out, cur};
            r.go(0, m);
        }
    } gen{K, max_nodes};
    std::vector<FreeTree> out;
    for (auto& shape : gen.go(arity, max_nodes)) {
        // attach canonical leaf labels 1..arity, then all relabelings
        FreeTree t{shape};
        struct L {
            int next = 1;
            void go(FreeTree::Node& n) {
                if (n.leaf) { n.gen = next++; return; }
                for (auto& c : n.child) go(c);
            }
        } lab;
        lab.go(t.root);
        if (arity == 0) {
            out.push_back(t);
        } else {
            for (const auto& s : Perm::all(arity)) out.push_back(tree_act(t, s));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FreeTreeMor> tree_homset(const Collection& K, const FreeTree& a,
                                     const FreeTree& b) {
    std::vector<FreeTreeMor> out;
    std::vector<const FreeTree::Node*> an, bn;
    collect_nodes(a.root, an);
    collect_nodes(b.root, bn);
    if (an.size() != bn.size()) return out;
    if (a.leaf_perm().image() != b.leaf_perm().image()) return out;
    // same shape: node arities and child counts must agree pointwise
    for (size_t i = 0; i < an.size(); ++i)
        if (an[i]->arity != bn[i]->arity || an[i]->child.size() != bn[i]->child.size())
            return out;
    std::vector<std::vector<int>> choices(an.size());
    for (size_t i = 0; i < an.size(); ++i) {
        const FinCat& g = K.gens[an[i]->arity];
        choices[i] = g.hom(an[i]->obj, bn[i]->obj);
        if (choices[i].empty()) return out;
    }
    std::vector<size_t> ix(an.size(), 0);
    while (true) {
        FreeTreeMor m{a, b, {}};
        for (size_t i = 0; i < an.size(); ++i) m.node_mor.push_back(choices[i][ix[i]]);
        out.push_back(std::move(m));
        size_t d = 0;
        while (d < ix.size() && ++ix[d] == choices[d].size()) ix[d++] = 0;
        if (d == ix.size() || an.empty()) break;
    }
    return out;
}

} // namespace hocat
