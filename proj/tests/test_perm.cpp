#include "doctest.h"
#include "hocat/perm.hpp"

using namespace hocat;

TEST_CASE("permutation arithmetic") {
    Perm id(3);
    CHECK(id.is_identity());
    Perm t = Perm::transposition(3, 1);
    CHECK(t(1) == 2);
    CHECK(t(2) == 1);
    CHECK((t * t).is_identity());
    Perm c({2, 3, 1});
    CHECK((c * c.inverse()).is_identity());
    CHECK((c * c)(1) == 3);
    CHECK(Perm::reversal(4)(1) == 4);
    CHECK(Perm::all(4).size() == 24);
}

TEST_CASE("block sum and block permutation") {
    Perm a({2, 1});
    Perm b({1, 3, 2});
    Perm s = a.block_sum(b);
    CHECK(s.image() == std::vector<int>{2, 1, 3, 5, 4});

    // verified instance: tau = (3,1,2,4) on sizes (3,2,0,2) has block
    // permutation (3,4,5,1,2,6,7)
    Perm tau({3, 1, 2, 4});
    Perm bp = Perm::block_perm(tau, {3, 2, 0, 2});
    CHECK(bp.image() == std::vector<int>{3, 4, 5, 1, 2, 6, 7});
}

TEST_CASE("sorting permutation") {
    Perm s = sorting_perm({30, 10, 20});
    CHECK(s.image() == std::vector<int>{2, 3, 1});
    std::vector<int> v{30, 10, 20};
    for (int i = 1; i < 3; ++i) CHECK(v[s(i) - 1] < v[s(i + 1) - 1]);
}

TEST_CASE("inversions count Coxeter length") {
    CHECK(Perm(4).inversions() == 0);
    CHECK(Perm::reversal(4).inversions() == 6);
    CHECK(Perm({2, 1, 3}).inversions() == 1);
}
