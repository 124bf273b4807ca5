#include "doctest.h"
#include "finitetc/zoo.hpp"

using namespace finitetc;

TEST_CASE("minimal spheres") {
    auto s1 = minimal_sphere(1);
    REQUIRE(s1->size() == 4);
    CHECK(s1->label(0) == "a");
    CHECK(s1->label(3) == "d");
    // a,b < c,d and nothing else
    for (int lo : {0, 1})
        for (int hi : {2, 3}) {
            CHECK(s1->leq(lo, hi));
            CHECK(!s1->leq(hi, lo));
        }
    CHECK(!s1->comparable(0, 1));
    CHECK(!s1->comparable(2, 3));

    CHECK(minimal_sphere(0)->size() == 2);
    CHECK(minimal_sphere(2)->size() == 6);
}

TEST_CASE("builtin name resolution") {
    CHECK(builtin_space("chain:3")->size() == 3);
    CHECK(builtin_space("antichain:4")->size() == 4);
    CHECK(builtin_space("fence:5")->size() == 6);
    CHECK(builtin_space("wedge_fence:3:2")->size() == 7);
    CHECK(is_builtin_space("sphere:2"));
    CHECK(!is_builtin_space("torus:1"));
    CHECK_THROWS_AS(builtin_space("torus:1"), ParseError);
    CHECK_THROWS_AS(builtin_space("sphere:-1"), ParseError);
    CHECK_THROWS_AS(builtin_space("wedge_fence:2"), ParseError);
}

TEST_CASE("random posets are connected and deterministic per seed") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto p = random_connected_poset(5, seed);
        CHECK(p->is_connected());
        CHECK(p->size() >= 2);
        CHECK(p->size() <= 5);
        auto q = random_connected_poset(5, seed);
        REQUIRE(p->size() == q->size());
        for (int i = 0; i < p->size(); ++i)
            for (int j = 0; j < p->size(); ++j) CHECK(p->leq(i, j) == q->leq(i, j));
    }
}

TEST_CASE("isomorphism-class counts match the published sequences") {
    // posets on n elements: 1, 2, 5, 16, 63; connected: 1, 1, 3, 10, 44
    const int all[] = {1, 2, 5, 16, 63};
    const int conn[] = {1, 1, 3, 10, 44};
    for (int n = 1; n <= 5; ++n) {
        CHECK(int(posets_up_to_iso(n, false).size()) == all[n - 1]);
        CHECK(int(posets_up_to_iso(n, true).size()) == conn[n - 1]);
    }
    for (const auto& p : posets_up_to_iso(4, true)) CHECK(p->is_connected());
}

TEST_CASE("builtin corpus entries resolve to their names") {
    for (const auto& [name, p] : builtin_corpus()) {
        CHECK(is_builtin_space(name));
        CHECK(builtin_space(name)->size() == p->size());
    }
}
