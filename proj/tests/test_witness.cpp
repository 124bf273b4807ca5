#include "doctest.h"
#include "finitetc/complexity.hpp"
#include "finitetc/witness.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

SectionWitness diagonal_point_witness() {
    // the single bottom point of chain:2 x chain:2 carries the constant path
    auto p = builtin_space("chain:2");
    PowerSpace space = make_power(p, 2);
    SectionWitness w;
    w.variant = Variant::Wedge;
    w.n = 2;
    w.m = 0;
    w.ambient = space.total;
    w.factor = space.base;
    w.coords = space.coords;
    w.domain = Bitset(4);
    w.domain.set(0);  // (c0, c0)
    w.paths = {{0}};
    return w;
}

}  // namespace

TEST_CASE("witness validation accepts a correct witness and rejects broken ones") {
    auto w = diagonal_point_witness();
    CHECK_NOTHROW(w.validate());

    SUBCASE("wrong path count") {
        w.paths.clear();
        CHECK_THROWS_AS(w.validate(), InvalidWitness);
    }
    SUBCASE("endpoint mismatch") {
        w.paths = {{1}};
        CHECK_THROWS_AS(w.validate(), InvalidWitness);
    }
    SUBCASE("domain not down-closed") {
        w.domain = Bitset(4);
        w.domain.set(3);  // (c1,c1) without its down-set
        CHECK_THROWS_AS(w.validate(), InvalidWitness);
    }
    SUBCASE("fence pattern violated") {
        w.m = 2;
        w.paths = {{1, 0, 0}};  // node0 <= node1 fails (1 <= 0 is false)
        CHECK_THROWS_AS(w.validate(), InvalidWitness);
    }
}

TEST_CASE("fence node indexing") {
    CHECK(FenceNodes::wedge_count(2, 3) == 7);
    CHECK(FenceNodes::wedge_node(2, 3, 1, 0) == 0);
    CHECK(FenceNodes::wedge_node(2, 3, 2, 1) == 4);
    CHECK(FenceNodes::linear_count(3, 2) == 5);
    CHECK(endpoint_node(Variant::Wedge, 2, 3, 2) == 6);
    CHECK(endpoint_node(Variant::Linear, 2, 3, 1) == 0);
    CHECK(endpoint_node(Variant::Linear, 2, 3, 2) == 3);
}

TEST_CASE("solver witnesses survive the transport chain") {
    auto p = builtin_space("chain:2");
    PowerSpace space = make_power(p, 2);
    const Bitset full = space.total->full_mask();

    // wedge witness at even m, transported: R raises m, f crosses to linear,
    // g comes back to a wedge
    std::optional<SectionWitness> w;
    REQUIRE(section_exists_bounded(space, full, 2, Variant::Wedge, {}, &w) == Tri::True);
    REQUIRE(w.has_value());
    CHECK_NOTHROW(w->validate());

    auto r = transport_R(*w);
    CHECK(r.m == 3);
    auto lin = transport_f(*w);
    CHECK(lin.variant == Variant::Linear);
    CHECK(lin.m == 4);
    auto back = transport_g(lin);
    CHECK(back.variant == Variant::Wedge);
    CHECK(back.m == 2);
    CHECK_NOTHROW(transport_R(transport_R(back)));
}

TEST_CASE("transport parity preconditions") {
    auto p = builtin_space("chain:2");
    PowerSpace space = make_power(p, 2);
    std::optional<SectionWitness> w;
    REQUIRE(section_exists_bounded(space, space.total->full_mask(), 1, Variant::Wedge, {}, &w) ==
            Tri::True);
    CHECK_THROWS_AS(transport_f(*w), ParityViolation);  // m = 1 is odd
    std::optional<SectionWitness> lin;
    REQUIRE(section_exists_bounded(space, space.total->full_mask(), 2, Variant::Linear, {},
                                   &lin) == Tri::True);
    CHECK_THROWS_AS(transport_g(*lin), ParityViolation);  // m = 2 not divisible by 4
    CHECK_THROWS_AS(transport_g(*w), ParityViolation);    // wrong variant
}
