#include "doctest.h"
#include "finitetc/subdivision.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

TEST_CASE("tower levels and comparison maps") {
    auto s = builtin_space("sphere:1");
    auto t = build_tower(s, 1, 2);
    REQUIRE(t.depth() == 2);
    CHECK(t.level(0)->size() == 4);
    CHECK(t.level(1)->size() == 8);  // sd of the circle is the 8-cycle

    // tau_composite at k = 0 is the identity
    auto id = t.tau_composite(0);
    for (int i = 0; i < 4; ++i) CHECK(id[std::size_t(i)] == i);

    // each tau (and hence each rho) is monotone
    for (int k = 1; k <= t.depth(); ++k)
        for (int j = 1; j <= t.base.n; ++j)
            CHECK_NOTHROW(MonotoneMap(t.level(k), t.base.base, rho_map(t, k, j)));
}

TEST_CASE("tower truncates at the size cap") {
    auto t = build_tower(builtin_space("sphere:1"), 1, 3, /*sd_size_cap=*/10);
    CHECK(t.truncated);
    CHECK(t.depth() < 3);
}

TEST_CASE("contractible spaces short-circuit the whole sequence") {
    auto seq = cc_k_sequence(builtin_space("chain:3"), 2, 2);
    REQUIRE(seq.size() == 3);
    for (const auto& r : seq) {
        CHECK(r.value == 1);
        CHECK(r.exact);
    }
}

TEST_CASE("level zero agrees with the plain invariant") {
    auto r = cc_k_n(builtin_space("sphere:1"), 2, 0);
    REQUIRE(r.value_kind == ComplexityReport::ValueKind::Finite);
    CHECK(r.value == 4);
    CHECK(r.exact);
    CHECK(r.k == 0);
}

TEST_CASE("sc of an edge") {
    auto edge = SimplicialComplex::build({"a", "b"}, {{0, 1}});
    auto r = sc_n_of_complex(edge, 2, 1);
    CHECK(r.invariant == "sc_n");
    CHECK(r.value == 1);
    CHECK(r.exact);
}

TEST_CASE("sequence values never increase with the level") {
    auto seq = cc_k_sequence(builtin_space("fence:2"), 2, 1);
    REQUIRE(seq.size() == 2);
    long prev = -1;
    for (const auto& r : seq) {
        REQUIRE(r.value_kind == ComplexityReport::ValueKind::Finite);
        if (prev >= 0) CHECK(r.value <= prev);
        prev = r.value;
    }
}
