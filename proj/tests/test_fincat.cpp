#include "doctest.h"
#include "hocat/fincat.hpp"

using namespace hocat;

namespace {

// poset 0 < 1 < 2 as a category
FinCat chain3() {
    FinCat c;
    c.add_object("0");
    c.add_object("1");
    c.add_object("2");
    int u = c.add_morphism("u", 0, 1);
    int v = c.add_morphism("v", 1, 2);
    int w = c.add_morphism("w", 0, 2);
    c.set_compose(v, u, w);
    c.close_identities();
    return c;
}

} // namespace

TEST_CASE("validate accepts the point and the interval") {
    CHECK(FinCat::point().validate().ok());
    CHECK(FinCat::interval().validate().ok());
    CHECK(chain3().validate().ok());
}

TEST_CASE("validate names broken composition typing") {
    FinCat c;
    c.add_object("a");
    c.add_object("b");
    int f = c.add_morphism("f", 0, 1);
    c.close_identities();
    // compose(f, id_b) is not composable; setting it must be reported
    c.set_compose(f, c.identity(1), f);
    auto rep = c.validate();
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& i : rep.issues)
        if (i.law.find("closure/typing") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("two-sided comma over the interval") {
    FinCat I = FinCat::interval();
    // 0/I/1: objects (0, id, u), (1, u, id); one non-identity arrow
    FinCat c = comma_two_sided(I, 0, 1);
    CHECK(c.n_objects() == 2);
    CHECK(c.n_morphisms() == 3);
    CHECK(c.validate().ok());
    // no leg 1 -> 0
    CHECK(comma_two_sided(I, 1, 0).n_objects() == 0);
    // one-object case
    FinCat pt = FinCat::point();
    FinCat cc = comma_two_sided(pt, 0, 0);
    CHECK(cc.n_objects() == 1);
    CHECK(cc.n_morphisms() == 1);
}

TEST_CASE("comma object counts match hom products") {
    FinCat L = chain3();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            size_t expect = 0;
            for (int c = 0; c < 3; ++c)
                expect += L.hom(a, c).size() * L.hom(c, b).size();
            CHECK(comma_two_sided(L, a, b).n_objects() == static_cast<int>(expect));
        }
}

TEST_CASE("slices validate") {
    FinCat L = chain3();
    for (int a = 0; a < 3; ++a) {
        CHECK(comma_under(L, a).validate().ok());
        CHECK(comma_over(L, a).validate().ok());
    }
    CHECK(comma_under(L, 0).n_objects() == 3);
    CHECK(comma_over(L, 2).n_objects() == 3);
}

TEST_CASE("product and opposite") {
    FinCat I = FinCat::interval();
    FinCat p = FinCat::product(I, I);
    CHECK(p.n_objects() == 4);
    CHECK(p.n_morphisms() == 9);
    CHECK(p.validate().ok());
    FinCat op = chain3().opposite();
    CHECK(op.validate().ok());
    CHECK(op.hom(2, 0).size() == 1);
}

TEST_CASE("iso search finds and rejects") {
    FinCat I = FinCat::interval();
    auto self = iso_categories(I, I);
    REQUIRE(self.has_value());
    CHECK(self->first.validate().ok());
    CHECK(!iso_categories(I, FinCat::point()).has_value());
    // interval vs its opposite are isomorphic as abstract categories
    auto flip = iso_categories(I, I.opposite());
    CHECK(flip.has_value());
}

TEST_CASE("functor and natural transformation validation") {
    FinCat I = FinCat::interval();
    Functor idf = Functor::identity(I);
    CHECK(idf.validate().ok());
    // collapse functor to the point
    FinCat pt = FinCat::point();
    Functor col;
    col.src = &I;
    col.dst = &pt;
    col.obj_map = {0, 0};
    col.mor_map = {pt.identity(0), pt.identity(0), pt.identity(0)};
    CHECK(col.validate().ok());
    NatTransformation nt;
    nt.from = &col;
    nt.to = &col;
    nt.component = {pt.identity(0), pt.identity(0)};
    CHECK(nt.validate().ok());
}
