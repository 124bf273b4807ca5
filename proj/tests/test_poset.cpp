#include <algorithm>
#include <set>

#include "doctest.h"
#include "finitetc/poset.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

// Independent reachability oracle: Floyd-Warshall closure over input edges.
std::vector<std::vector<bool>> closure(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (auto [a, b] : edges) r[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

}  // namespace

TEST_CASE("build derives the reachability order and reduces to Hasse") {
    // diamond with a redundant transitive edge
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}};
    auto p = FinitePoset::build({"bot", "l", "r", "top"}, edges);
    auto oracle = closure(4, edges);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(p->leq(i, j) == oracle[i][j]);
    CHECK(p->hasse().size() == 4);  // the shortcut 0<3 is not a cover
    CHECK(p->maximal_elements() == std::vector<int>{3});
    CHECK(p->minimal_elements() == std::vector<int>{0});
}

TEST_CASE("cycles and duplicate labels are rejected") {
    CHECK_THROWS_AS(FinitePoset::build({"a", "b"}, {{0, 1}, {1, 0}}), CycleDetected);
    CHECK_THROWS_AS(FinitePoset::build({"a", "a"}, {}), DuplicateLabel);
    CHECK_THROWS_AS(FinitePoset::build({"a"}, {{0, 5}}), IndexOutOfRange);
}

TEST_CASE("down and up sets") {
    auto p = builtin_space("sphere:1");  // a,b < c,d
    CHECK(p->down_set(2).count() == 3);  // {a,b,c}
    CHECK(p->down_set(0).count() == 1);
    CHECK(p->up_set(0).count() == 3);  // {a,c,d}
    CHECK(p->is_down_closed(p->down_set(2)));
    Bitset notdown(4);
    notdown.set(2);
    CHECK(!p->is_down_closed(notdown));
    CHECK(p->down_closure(notdown) == p->down_set(2));
}

TEST_CASE("linear extension is consistent with the order") {
    auto p = builtin_space("wedge_fence:2:3");
    const auto& order = p->linear_extension();
    std::vector<int> pos(p->size());
    for (int i = 0; i < p->size(); ++i) pos[order[i]] = i;
    for (int x = 0; x < p->size(); ++x)
        for (int y = 0; y < p->size(); ++y)
            if (p->leq(x, y)) CHECK(pos[x] <= pos[y]);
}

TEST_CASE("product and power order is componentwise") {
    auto s = builtin_space("sphere:1");
    std::vector<std::vector<int>> coords;
    auto p2 = power(s, 2, &coords);
    REQUIRE(p2->size() == 16);
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            bool expect = s->leq(coords[x][0], coords[y][0]) && s->leq(coords[x][1], coords[y][1]);
            CHECK(p2->leq(x, y) == expect);
        }
    CHECK(power(s, 3)->size() == 64);
    CHECK(product(s, s)->size() == 16);
    CHECK_THROWS_AS(power(s, 2, nullptr, 10), SizeLimitExceeded);
}

TEST_CASE("fences zigzag") {
    auto f = fence(4);  // 0 <= 1 >= 2 <= 3 >= 4
    REQUIRE(f->size() == 5);
    CHECK(f->leq(0, 1));
    CHECK(f->leq(2, 1));
    CHECK(f->leq(2, 3));
    CHECK(f->leq(4, 3));
    CHECK(!f->leq(0, 2));
    CHECK(!f->comparable(0, 3));

    auto w = wedge_fence(3, 2);
    CHECK(w->size() == 7);
    // basepoint below the first node of each branch
    for (int j = 0; j < 3; ++j) CHECK(w->leq(0, 1 + 2 * j));
}

TEST_CASE("chain enumeration and barycentric subdivision") {
    auto c3 = builtin_space("chain:3");
    auto chains = enumerate_chains(*c3);
    CHECK(chains.size() == 7);  // 3 + 3 + 1
    std::vector<Bitset> masks;
    auto sd = barycentric_subdivision(*c3, &masks);
    CHECK(sd->size() == 7);
    // ordered by inclusion
    for (int i = 0; i < sd->size(); ++i)
        for (int j = 0; j < sd->size(); ++j)
            CHECK(sd->leq(i, j) == masks[i].is_subset_of(masks[j]));
    // tau sends a chain to its maximum
    auto tau = tau_assignment(*c3, masks);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        int mx = -1;
        masks[i].for_each_set([&](std::size_t v) {
            if (mx < 0 || c3->leq(mx, int(v))) mx = int(v);
        });
        CHECK(tau[i] == mx);
    }

    CHECK(barycentric_subdivision(*builtin_space("sphere:1"))->size() == 8);
}

TEST_CASE("induced subposet") {
    auto s = builtin_space("sphere:1");
    Bitset m(4);
    m.set(0);
    m.set(2);
    std::vector<int> to_sub;
    auto sub = s->induced(m, &to_sub);
    CHECK(sub->size() == 2);
    CHECK(sub->leq(to_sub[0], to_sub[2]));
    CHECK(sub->label(0) == "a");
}

TEST_CASE("components") {
    auto a = builtin_space("antichain:3");
    CHECK(a->component_count() == 3);
    CHECK(!a->is_connected());
    CHECK(builtin_space("sphere:1")->is_connected());
}
