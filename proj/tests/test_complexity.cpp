#include "doctest.h"
#include "finitetc/complexity.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

Bitset mask_of(int n, std::initializer_list<int> bits) {
    Bitset b{std::size_t(n)};
    for (int i : bits) b.set(std::size_t(i));
    return b;
}

}  // namespace

TEST_CASE("exact_min_cover finds the optimum past the greedy trap") {
    // universe {0..5}; greedy grabs the size-4 set and then needs 3 sets,
    // the optimum is the two complementary halves
    Bitset universe = mask_of(6, {0, 1, 2, 3, 4, 5});
    std::vector<Bitset> cands{mask_of(6, {0, 1, 2, 3}), mask_of(6, {0, 1, 4}),
                              mask_of(6, {2, 3, 5}), mask_of(6, {4}), mask_of(6, {5})};
    auto r = exact_min_cover(universe, cands, {});
    CHECK(r.optimal);
    CHECK(r.cover.size() == 2);

    CHECK_THROWS_AS(exact_min_cover(universe, {mask_of(6, {0, 1})}, Budgets{}), Infeasible);
}

TEST_CASE("sectionable_limit") {
    auto chain = builtin_space("chain:2");
    PowerSpace cp = make_power(chain, 2);
    CHECK(sectionable_limit(cp, cp.total->full_mask()) == Tri::True);

    auto s = builtin_space("sphere:1");
    PowerSpace sp = make_power(s, 2);
    CHECK(sectionable_limit(sp, sp.total->full_mask()) == Tri::False);
    // every minimal open of the square is a cone, hence sectionable
    for (int e = 0; e < sp.total->size(); ++e)
        CHECK(sectionable_limit(sp, sp.total->down_set(e)) == Tri::True);
}

TEST_CASE("cc at m = 0 is infinite off the diagonal") {
    auto r = cc_nm(builtin_space("sphere:1"), 2, 0, Variant::Wedge);
    CHECK(r.value_kind == ComplexityReport::ValueKind::Infinite);
    CHECK(r.exact);
}

TEST_CASE("categories of small spaces") {
    ComputeConfig cfg;
    CHECK(cat(builtin_space("chain:4"), cfg).value == 1);
    CHECK(cat(builtin_space("fence:3"), cfg).value == 1);

    auto s = cat(builtin_space("sphere:1"), cfg);
    CHECK(s.value == 2);
    CHECK(s.exact);
    REQUIRE(s.cover_masks.size() == 2);
    // the cover really covers
    Bitset u{std::size_t(4)};
    for (const auto& q : s.cover_masks) u |= q;
    CHECK(u == builtin_space("sphere:1")->full_mask());

    auto a = cat(builtin_space("antichain:2"), cfg);
    CHECK(a.value == 2);
    CHECK(a.exact);
}

TEST_CASE("cc_n basics") {
    // disconnected: no section over any open meeting both components' square
    auto a = cc_n(builtin_space("antichain:2"), 2);
    CHECK(a.value_kind == ComplexityReport::ValueKind::Infinite);

    auto f = cc_n(builtin_space("fence:3"), 2);
    CHECK(f.value == 1);
    CHECK(f.exact);

    auto s = cc_n(builtin_space("sphere:1"), 2);
    REQUIRE(s.value_kind == ComplexityReport::ValueKind::Finite);
    CHECK(s.value == 4);
    CHECK(s.exact);
    REQUIRE(s.cover_masks.size() == 4);
    Bitset u{std::size_t(16)};
    for (const auto& q : s.cover_masks) {
        PowerSpace sp = make_power(builtin_space("sphere:1"), 2);
        CHECK(sp.total->is_down_closed(q));
        CHECK(sectionable_limit(sp, q) == Tri::True);
        u |= q;
    }
    CHECK(u.count() == 16);
}

TEST_CASE("bounded cc decreases toward the limit as m grows") {
    auto p = builtin_space("sphere:1");
    // m = 1 forces a common lower bound of the two coordinates, and the two
    // minimal points of the circle have none
    CHECK(cc_nm(p, 2, 1, Variant::Wedge).value_kind == ComplexityReport::ValueKind::Infinite);
    long prev = -1;
    for (int m = 2; m <= 3; ++m) {
        auto r = cc_nm(p, 2, m, Variant::Wedge);
        REQUIRE(r.value_kind == ComplexityReport::ValueKind::Finite);
        if (prev >= 0) CHECK(r.value <= prev);
        CHECK(r.value >= 4);  // never below the limit invariant
        prev = r.value;
    }
}

TEST_CASE("maximal_passing_opens is complete on a small ambient") {
    auto s = builtin_space("sphere:1");
    PowerSpace sp = make_power(s, 2);
    ProjectionsHomotopicCriterion crit(sp.total, sp.base, {sp.projection(0), sp.projection(1)},
                                       Budgets{});
    auto r = maximal_passing_opens(crit, {});
    CHECK(r.complete);
    CHECK(!r.saw_unknown);
    // pairwise non-contained and all passing
    for (std::size_t i = 0; i < r.opens.size(); ++i) {
        CHECK(crit.passes(r.opens[i]) == Tri::True);
        for (std::size_t j = 0; j < r.opens.size(); ++j)
            if (i != j) CHECK(!r.opens[i].is_subset_of(r.opens[j]));
    }
    // every minimal open lies inside some maximal passing open
    for (int e = 0; e < sp.total->size(); ++e) {
        bool covered = false;
        for (const auto& q : r.opens) covered = covered || sp.total->down_set(e).is_subset_of(q);
        CHECK(covered);
    }
}

TEST_CASE("witness emission") {
    ComputeConfig cfg;
    cfg.emit_witness = true;
    auto r = cc_nm(builtin_space("chain:2"), 2, 1, Variant::Wedge, cfg);
    CHECK(r.value == 1);
    REQUIRE(!r.witnesses.empty());
    for (auto& w : r.witnesses) CHECK_NOTHROW(w.validate());
}
