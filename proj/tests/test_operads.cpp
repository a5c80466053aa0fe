#include "doctest.h"
#include "hocat/operad.hpp"

using namespace hocat;

namespace {

OperadElt W(const std::string& s) {
    auto w = MonoidalWord::parse(s);
    REQUIRE(w.has_value());
    return OperadElt::of(*w);
}

Collection one_binary() {
    Collection K;
    K.gens.resize(3);
    K.gens[2].add_object("g");
    K.gens[2].close_identities();
    return K;
}

} // namespace

TEST_CASE("substitute examples") {
    auto M2 = make_mk_operad(2);
    CHECK(M2->substitute(W("1 b1 2"), {W("1 b2 2"), W("1")}) == W("(1 b2 2) b1 3"));
    for (const auto& A : M2->objects(3)) {
        std::vector<OperadElt> units(3, M2->unit());
        CHECK(M2->substitute(A, units) == A);
    }
    auto St = make_sigma_tilde();
    CHECK(St->substitute(OperadElt::of(Perm(2)),
                         {OperadElt::of(Perm(2)), OperadElt::of(Perm(3))}) ==
          OperadElt::of(Perm(5)));
}

TEST_CASE("sigma action examples") {
    auto M2 = make_mk_operad(2);
    CHECK(M2->act(W("1 b1 2"), Perm({2, 1})) == W("2 b1 1"));
    for (const auto& A : M2->objects(3)) CHECK(M2->act(A, Perm(3)) == A);
}

TEST_CASE("hom witnesses") {
    auto M2 = make_mk_operad(2);
    CHECK(M2->hom_witness(W("1 b1 2"), W("2 b2 1")).has_value());
    CHECK(!M2->hom_witness(W("1 b2 2"), W("2 b1 1")).has_value());
    auto St = make_sigma_tilde();
    auto e2 = OperadElt::of(Perm(2));
    auto tau = OperadElt::of(Perm({2, 1}));
    CHECK(St->hom_witness(e2, tau).has_value());
    CHECK(St->homset(e2, tau).size() == 1);
}

TEST_CASE("M_1 is discrete with m! objects") {
    auto M1 = make_mk_operad(1);
    for (int m = 1; m <= 5; ++m) {
        auto objs = M1->objects(m);
        long fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        CHECK(static_cast<long>(objs.size()) == fact);
        int non_id = 0;
        for (const auto& a : objs)
            for (const auto& b : objs)
                if (!(a == b) && M1->hom_witness(a, b)) ++non_id;
        CHECK(non_id == 0);
    }
}

TEST_CASE("operad axioms for the shipped instances") {
    EnumBudget bd;
    CHECK(check_operad_axioms(*make_mk_operad(1), 3, 40, 1, bd).ok());
    CHECK(check_operad_axioms(*make_mk_operad(2), 3, 40, 1, bd).ok());
    CHECK(check_operad_axioms(*make_sigma_tilde(), 4, 60, 2, bd).ok());
    CHECK(check_operad_axioms(*make_sigma_hat(), 3, 40, 2, bd).ok());
    CHECK(check_operad_axioms(*make_initial_operad(), 2, 10, 3, bd).ok());
    bd.braid_len = 3;
    CHECK(check_operad_axioms(*make_br(false), 3, 25, 4, bd).ok());
    CHECK(check_operad_axioms(*make_br(true), 3, 25, 4, bd).ok());
    CHECK(check_operad_axioms(*make_free_operad(one_binary()), 3, 40, 5, bd).ok());
}

TEST_CASE("a corrupted instance fails with a named law") {
    struct Corrupt final : Operad {
        std::shared_ptr<const Operad> base = make_mk_operad(2);
        std::string name() const override { return "corrupt"; }
        bool has_nullary() const override { return base->has_nullary(); }
        OperadElt unit() const override { return base->unit(); }
        OperadElt nullary() const override { return base->nullary(); }
        std::vector<OperadElt> objects(int n, const EnumBudget& b) const override {
            return base->objects(n, b);
        }
        std::vector<OperadMor> homset(const OperadElt& a, const OperadElt& b,
                                      const EnumBudget& bd) const override {
            return base->homset(a, b, bd);
        }
        std::optional<OperadMor> hom_witness(const OperadElt& a,
                                             const OperadElt& b) const override {
            return base->hom_witness(a, b);
        }
        OperadElt substitute(const OperadElt& A,
                             const std::vector<OperadElt>& Bs) const override {
            std::vector<OperadElt> r(Bs.rbegin(), Bs.rend());
            return base->substitute(A, r);
        }
        OperadMor substitute_mor(const OperadMor& a,
                                 const std::vector<OperadMor>& bs) const override {
            return base->substitute_mor(a, bs);
        }
        OperadElt act(const OperadElt& A, const Perm& s) const override {
            return base->act(A, s);
        }
        OperadMor act_mor(const OperadMor& m, const Perm& s) const override {
            return base->act_mor(m, s);
        }
        Perm twist(const OperadElt& A) const override { return base->twist(A); }
        OperadMor compose(const OperadMor& g, const OperadMor& f) const override {
            return base->compose(g, f);
        }
        FactorizationInitial factorization_initial(
            const OperadElt& A, const OperadElt& B, const std::vector<OperadElt>& Cs,
            const OperadMor& alpha) const override {
            return base->factorization_initial(A, B, Cs, alpha);
        }
    } corrupt;
    auto rep = check_operad_axioms(corrupt, 3, 30, 7, {});
    CHECK(!rep.ok());
}

TEST_CASE("factorization condition for the shipped instances") {
    EnumBudget bd;
    CHECK(check_factorization(*make_mk_operad(2), 4, 40, 11, bd).ok());
    CHECK(check_factorization(*make_sigma_tilde(), 4, 40, 12, bd).ok());
    CHECK(check_factorization(*make_free_operad(one_binary()), 4, 30, 13, bd).ok());
    bd.braid_len = 4;
    CHECK(check_factorization(*make_br(false), 3, 15, 14, bd).ok());
}

TEST_CASE("Mk factorization initial object by restriction") {
    auto M2 = make_mk_operad(2);
    OperadElt A = W("1 b1 2 b1 3 b1 4");
    OperadElt B = W("1 b1 2");
    std::vector<OperadElt> Cs{W("1 b1 2"), W("1 b1 2")};
    auto alpha = M2->hom_witness(A, M2->substitute(B, Cs));
    REQUIRE(alpha.has_value());
    auto fi = M2->factorization_initial(A, B, Cs, *alpha);
    CHECK(fi.factors[0] == W("1 b1 2"));
    CHECK(fi.factors[1] == W("1 b1 2"));
    OperadElt A2 = W("(1 b2 2) b1 (3 b2 4)");
    auto alpha2 = M2->hom_witness(A2, M2->substitute(B, Cs));
    REQUIRE(alpha2.has_value());
    auto fi2 = M2->factorization_initial(A2, B, Cs, *alpha2);
    CHECK(fi2.factors[0] == W("1 b2 2"));
    CHECK(fi2.factors[1] == W("1 b2 2"));
}

TEST_CASE("operad maps") {
    CHECK(operad_map_apply("lambda", W("2 b1 1")) == OperadElt::of(Perm({2, 1})));
    auto M2 = make_mk_operad(2);
    auto m = M2->hom_witness(W("1 b1 2"), W("2 b2 1"));
    REQUIRE(m.has_value());
    auto bm = operad_map_apply_mor("beta", *m);
    CHECK(bm.braid.length() == 1);
    CHECK(bm.braid.positive());
    auto m2 = M2->hom_witness(W("1 b1 2"), W("1 b2 2"));
    REQUIRE(m2.has_value());
    CHECK(operad_map_apply_mor("beta", *m2).braid.length() == 0);
    CHECK(operad_map_apply("iota", W("1 b1 2")) == W("1 b1 2"));
}

TEST_CASE("beta preserves composition in small arities") {
    auto M2 = make_mk_operad(2);
    auto Brp = make_br(true);
    for (int m = 2; m <= 3; ++m) {
        auto objs = M2->objects(m);
        for (const auto& a : objs)
            for (const auto& b : objs) {
                auto ab = M2->hom_witness(a, b);
                if (!ab) continue;
                for (const auto& c : objs) {
                    auto bc = M2->hom_witness(b, c);
                    if (!bc) continue;
                    auto lhs = operad_map_apply_mor("beta", M2->compose(*bc, *ab));
                    auto rhs = Brp->compose(operad_map_apply_mor("beta", *bc),
                                            operad_map_apply_mor("beta", *ab));
                    CHECK(Brp->mor_equal(lhs, rhs));
                }
            }
    }
}

TEST_CASE("lambda and beta commute with substitution and action") {
    auto M2 = make_mk_operad(2);
    auto St = make_sigma_tilde();
    auto A = W("2 b1 1");
    auto B1 = W("1 b2 2");
    auto B2 = W("1");
    auto lhs = operad_map_apply("lambda", M2->substitute(A, {B1, B2}));
    auto rhs = St->substitute(operad_map_apply("lambda", A),
                              {operad_map_apply("lambda", B1),
                               operad_map_apply("lambda", B2)});
    CHECK(lhs == rhs);
    Perm s({2, 1});
    CHECK(operad_map_apply("lambda", M2->act(A, s)) ==
          St->act(operad_map_apply("lambda", A), s));
}

TEST_CASE("free operad over a collection with morphisms") {
    Collection K;
    K.gens.resize(3);
    K.gens[2].add_object("g");
    K.gens[2].add_object("h");
    K.gens[2].add_morphism("u", 0, 1);
    K.gens[2].close_identities();
    auto F = make_free_operad(K);
    CHECK(check_operad_axioms(*F, 3, 30, 21, {}).ok());
    CHECK(check_factorization(*F, 4, 25, 22, {}).ok());
}

TEST_CASE("selector strings") {
    CHECK(operad_by_selector("initial")->name() == "initial");
    CHECK(operad_by_selector("Mk:2")->name() == "Mk:2");
    CHECK(operad_by_selector("SigmaTilde")->name() == "SigmaTilde");
    CHECK(operad_by_selector("SigmaHat")->name() == "SigmaHat");
    CHECK(operad_by_selector("Br")->name() == "Br");
    CHECK(operad_by_selector("BrPlus")->name() == "BrPlus");
    CHECK_THROWS(operad_by_selector("bogus"));
}

TEST_CASE("factorization initial is idempotent") {
    auto M2 = make_mk_operad(2);
    OperadElt A = W("(1 b2 2) b1 (3 b2 4)");
    OperadElt B = W("1 b1 2");
    std::vector<OperadElt> Cs{W("1 b2 2"), W("2 b2 1")};
    auto target = M2->substitute(B, Cs);
    auto alpha = M2->hom_witness(A, target);
    REQUIRE(alpha.has_value());
    auto fi = M2->factorization_initial(A, B, Cs, *alpha);
    auto fi2 = M2->factorization_initial(A, B, fi.factors, fi.rho);
    CHECK(fi2.factors[0] == fi.factors[0]);
    CHECK(fi2.factors[1] == fi.factors[1]);
    for (size_t i = 0; i < fi2.comparisons.size(); ++i)
        CHECK(fi2.comparisons[i].src == fi2.comparisons[i].dst);
}
