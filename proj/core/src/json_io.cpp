#include "hocat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hocat {

Json fincat_to_json(const FinCat& c) {
    Json j;
    j["objects"] = Json::array();
    for (int o = 0; o < c.n_objects(); ++o) j["objects"].push_back(c.object_id(o));
    j["morphisms"] = Json::array();
    for (int m = 0; m < c.n_morphisms(); ++m) {
        if (c.is_identity(m)) continue;
        j["morphisms"].push_back({{"id", c.mor(m).id},
                                  {"src", c.object_id(c.mor(m).src)},
                                  {"dst", c.object_id(c.mor(m).dst)}});
    }
    j["identities"] = Json::object();
    for (int o = 0; o < c.n_objects(); ++o)
        j["identities"][c.object_id(o)] = c.mor(c.identity(o)).id;
    j["compose"] = Json::array();
    for (int g = 0; g < c.n_morphisms(); ++g)
        for (int f = 0; f < c.n_morphisms(); ++f) {
            int gf = c.compose(g, f);
            if (gf < 0 || c.is_identity(g) || c.is_identity(f)) continue;
            j["compose"].push_back(
                {{"g", c.mor(g).id}, {"f", c.mor(f).id}, {"gf", c.mor(gf).id}});
        }
    return j;
}

FinCat fincat_from_json(const Json& j) {
    FinCat c;
    for (const auto& o : j.at("objects")) c.add_object(o.get<std::string>());
    // identity ids get aliased onto the autogenerated ones
    std::unordered_map<std::string, int> alias;
    if (j.contains("identities"))
        for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
            int o = c.object_index(it.key());
            if (o < 0) throw std::invalid_argument("identities: unknown object " + it.key());
            alias[it.value().get<std::string>()] = c.identity(o);
        }
    auto mor_of = [&](const std::string& id) {
        if (alias.count(id)) return alias.at(id);
        int m = c.mor_index(id);
        if (m < 0) throw std::invalid_argument("unknown morphism " + id);
        return m;
    };
    if (j.contains("morphisms"))
        for (const auto& m : j.at("morphisms")) {
            int s = c.object_index(m.at("src").get<std::string>());
            int d = c.object_index(m.at("dst").get<std::string>());
            if (s < 0 || d < 0) throw std::invalid_argument("morphism endpoints unknown");
            c.add_morphism(m.at("id").get<std::string>(), s, d);
        }
    c.close_identities();
    if (j.contains("compose"))
        for (const auto& e : j.at("compose"))
            c.set_compose(mor_of(e.at("g").get<std::string>()),
                          mor_of(e.at("f").get<std::string>()),
                          mor_of(e.at("gf").get<std::string>()));
    return c;
}

Json functor_to_json(const Functor& f) {
    Json j;
    j["objects"] = Json::object();
    for (int o = 0; o < f.src->n_objects(); ++o)
        j["objects"][f.src->object_id(o)] = f.dst->object_id(f.obj_map[o]);
    j["morphisms"] = Json::object();
    for (int m = 0; m < f.src->n_morphisms(); ++m) {
        if (f.src->is_identity(m)) continue;
        j["morphisms"][f.src->mor(m).id] = f.dst->mor(f.mor_map[m]).id;
    }
    return j;
}

Functor functor_from_json(const Json& j, const FinCat& src, const FinCat& dst) {
    Functor f;
    f.src = &src;
    f.dst = &dst;
    f.obj_map.assign(src.n_objects(), -1);
    f.mor_map.assign(src.n_morphisms(), -1);
    for (auto it = j.at("objects").begin(); it != j.at("objects").end(); ++it) {
        int s = src.object_index(it.key());
        int d = dst.object_index(it.value().get<std::string>());
        if (s < 0 || d < 0) throw std::invalid_argument("functor: unknown object");
        f.obj_map[s] = d;
    }
    for (int o = 0; o < src.n_objects(); ++o) {
        if (f.obj_map[o] < 0) throw std::invalid_argument("functor: object map not total");
        f.mor_map[src.identity(o)] = dst.identity(f.obj_map[o]);
    }
    if (j.contains("morphisms"))
        for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it) {
            int s = src.mor_index(it.key());
            int d = dst.mor_index(it.value().get<std::string>());
            if (s < 0 || d < 0) throw std::invalid_argument("functor: unknown morphism");
            f.mor_map[s] = d;
        }
    for (int m = 0; m < src.n_morphisms(); ++m)
        if (f.mor_map[m] < 0)
            throw std::invalid_argument("functor: morphism map not total at " +
                                        src.mor(m).id);
    return f;
}

Json catdiagram_to_json(const CatDiagram& X) {
    Json j;
    j["base"] = fincat_to_json(*X.base);
    j["fibers"] = Json::object();
    for (int o = 0; o < X.base->n_objects(); ++o)
        j["fibers"][X.base->object_id(o)] = fincat_to_json(X.fiber[o]);
    j["functors"] = Json::object();
    for (int m = 0; m < X.base->n_morphisms(); ++m) {
        if (X.base->is_identity(m)) continue;
        j["functors"][X.base->mor(m).id] = functor_to_json(X.fiber_mor[m]);
    }
    return j;
}

CatDiagram catdiagram_from_json(const Json& j, FinCat& base_out) {
    base_out = fincat_from_json(j.at("base"));
    CatDiagram X;
    X.base = &base_out;
    X.fiber.resize(base_out.n_objects());
    for (int o = 0; o < base_out.n_objects(); ++o)
        X.fiber[o] = fincat_from_json(j.at("fibers").at(base_out.object_id(o)));
    X.fiber_mor.resize(base_out.n_morphisms());
    for (int m = 0; m < base_out.n_morphisms(); ++m) {
        int s = base_out.mor(m).src, d = base_out.mor(m).dst;
        if (base_out.is_identity(m)) {
            X.fiber_mor[m] = Functor::identity(X.fiber[s]);
        } else {
            X.fiber_mor[m] = functor_from_json(j.at("functors").at(base_out.mor(m).id),
                                               X.fiber[s], X.fiber[d]);
        }
    }
    X.rebind();
    return X;
}

Collection collection_from_json(const Json& j) {
    Collection K;
    int maxa = 0;
    for (auto it = j.at("arities").begin(); it != j.at("arities").end(); ++it)
        maxa = std::max(maxa, std::stoi(it.key()));
    K.gens.resize(maxa + 1);
    for (auto it = j.at("arities").begin(); it != j.at("arities").end(); ++it)
        K.gens[std::stoi(it.key())] = fincat_from_json(it.value());
    return K;
}

Collection load_collection_file(const std::string& path) {
    return collection_from_json(load_json_file(path));
}

Json elt_to_json(const OperadElt& e) {
    Json j;
    switch (e.tag) {
        case OperadElt::Tag::Initial:
            j["kind"] = "initial";
            break;
        case OperadElt::Tag::Word:
            j["kind"] = "word";
            j["word"] = e.word.str();
            break;
        case OperadElt::Tag::PermObj:
            j["kind"] = "perm";
            j["image"] = e.perm.image();
            break;
        case OperadElt::Tag::Tree: {
            j["kind"] = "tree";
            struct T {
                static Json go(const FreeTree::Node& n) {
                    if (n.leaf) return Json{{"leaf", n.gen}};
                    Json c = Json::array();
                    for (const auto& k : n.child) c.push_back(go(k));
                    return Json{{"arity", n.arity}, {"obj", n.obj}, {"children", c}};
                }
            };
            j["tree"] = T::go(e.tree.root);
            break;
        }
    }
    return j;
}

OperadElt elt_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "initial") return OperadElt::initial();
    if (kind == "word") {
        auto w = MonoidalWord::parse(j.at("word").get<std::string>());
        if (!w) throw std::invalid_argument("bad word: " + j.at("word").dump());
        return OperadElt::of(*w);
    }
    if (kind == "perm") return OperadElt::of(Perm(j.at("image").get<std::vector<int>>()));
    if (kind == "tree") {
        struct T {
            static FreeTree::Node go(const Json& n) {
                if (n.contains("leaf"))
                    return FreeTree::Node{true, n.at("leaf").get<int>(), 0, -1, {}};
                FreeTree::Node r{false, 0, n.at("arity").get<int>(),
                                 n.at("obj").get<int>(), {}};
                for (const auto& c : n.at("children")) r.child.push_back(go(c));
                return r;
            }
        };
        return OperadElt::of(FreeTree{T::go(j.at("tree"))});
    }
    throw std::invalid_argument("unknown element kind: " + kind);
}

Json mor_to_json(const OperadMor& m) {
    Json j;
    j["src"] = elt_to_json(m.src);
    j["dst"] = elt_to_json(m.dst);
    if (!m.braid.letters.empty() || m.src.tag == OperadElt::Tag::PermObj)
        j["braid"] = m.braid.str();
    if (!m.node_mor.empty()) j["nodes"] = m.node_mor;
    return j;
}

OperadMor mor_from_json(const Json& j) {
    OperadMor m;
    m.src = elt_from_json(j.at("src"));
    m.dst = elt_from_json(j.at("dst"));
    if (j.contains("braid")) {
        auto b = BraidWord::parse(m.src.arity(), j.at("braid").get<std::string>());
        if (!b) throw std::invalid_argument("bad braid word");
        m.braid = *b;
    }
    if (j.contains("nodes")) m.node_mor = j.at("nodes").get<std::vector<int>>();
    return m;
}

Json sset_to_json(const TruncSSet& x) {
    Json j;
    j["cap"] = x.cap;
    j["simplices"] = x.simplex;
    Json faces = Json::object(), degs = Json::object();
    for (int n = 1; n <= x.cap; ++n) faces[std::to_string(n)] = x.face[n];
    for (int n = 0; n < x.cap; ++n) degs[std::to_string(n)] = x.degen[n];
    j["faces"] = faces;
    j["degeneracies"] = degs;
    return j;
}

Json homology_to_json(const HomologyResult& h) {
    Json j;
    j["trusted_range"] = h.trusted;
    Json hs = Json::array();
    for (int n = 0; n <= h.trusted; ++n) {
        Json e;
        e["dim"] = n;
        e["betti"] = h.betti[n];
        Json t = Json::array();
        for (const auto& v : h.torsion[n]) t.push_back(v.str());
        e["torsion"] = t;
        hs.push_back(e);
    }
    j["homology"] = hs;
    j["note"] = "weak-equivalence checks via homology are NECESSARY-ONLY";
    return j;
}

std::string homology_table(const HomologyResult& h) {
    std::string s = "dim  betti  torsion\n";
    for (int n = 0; n <= h.trusted; ++n) {
        s += std::to_string(n) + "    " + std::to_string(h.betti[n]) + "      ";
        if (h.torsion[n].empty()) s += "-";
        for (size_t i = 0; i < h.torsion[n].size(); ++i)
            s += (i ? "," : "") + h.torsion[n][i].str();
        s += "\n";
    }
    return s;
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["checked"] = r.checked;
    j["skipped"] = r.skipped;
    j["status"] = r.ok() ? "pass" : "fail";
    Json issues = Json::array();
    for (const auto& i : r.issues) issues.push_back({{"law", i.law}, {"detail", i.detail}});
    j["findings"] = issues;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

} // namespace hocat
