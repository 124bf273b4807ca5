#include <numeric>

#include "doctest.h"
#include "finitetc/homotopy.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

std::vector<std::vector<int>> all_monotone_maps(const PosetPtr& dom, const PosetPtr& cod) {
    std::vector<std::vector<int>> candidates(dom->size());
    for (int x = 0; x < dom->size(); ++x) {
        candidates[x].resize(cod->size());
        std::iota(candidates[x].begin(), candidates[x].end(), 0);
    }
    std::vector<std::vector<int>> out;
    enumerate_monotone_maps(*dom, *cod, candidates,
                            [&](const std::vector<int>& a) {
                                out.push_back(a);
                                return false;
                            },
                            std::size_t(-1));
    return out;
}

// Independent homotopy oracle: components of the full map list under
// pointwise comparability.
std::vector<int> oracle_classes(const PosetPtr& cod, const std::vector<std::vector<int>>& maps) {
    std::vector<int> cls(maps.size());
    std::iota(cls.begin(), cls.end(), 0);
    bool changed = true;
    auto comparable = [&](const std::vector<int>& f, const std::vector<int>& g) {
        bool le = true, ge = true;
        for (std::size_t x = 0; x < f.size(); ++x) {
            le = le && cod->leq(f[x], g[x]);
            ge = ge && cod->leq(g[x], f[x]);
        }
        return le || ge;
    };
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = 0; j < maps.size(); ++j)
                if (comparable(maps[i], maps[j]) && cls[i] != cls[j]) {
                    int lo = std::min(cls[i], cls[j]);
                    cls[i] = cls[j] = lo;
                    changed = true;
                }
    }
    return cls;
}

}  // namespace

TEST_CASE("cores") {
    CHECK(core(builtin_space("chain:4"))->size() == 1);
    CHECK(core(builtin_space("fence:3"))->size() == 1);
    CHECK(core(builtin_space("wedge_fence:3:2"))->size() == 1);
    CHECK(core(builtin_space("sphere:1"))->size() == 4);  // minimal, no beat points
    CHECK(core(builtin_space("sphere:2"))->size() == 6);
    CHECK(is_contractible(*builtin_space("chain:5")));
    CHECK(!is_contractible(*builtin_space("sphere:1")));
    CHECK(!is_contractible(*builtin_space("antichain:2")));
}

TEST_CASE("core retraction and inclusion compose to the identity on the core") {
    auto p = builtin_space("fence:4");
    auto cd = compute_core(*p);
    for (int i = 0; i < cd.core->size(); ++i) CHECK(cd.retraction[cd.inclusion[i]] == i);
    // retraction is monotone
    for (int x = 0; x < p->size(); ++x)
        for (int y = 0; y < p->size(); ++y)
            if (p->leq(x, y)) CHECK(cd.core->leq(cd.retraction[x], cd.retraction[y]));
}

TEST_CASE("monotone map enumeration count") {
    auto c2 = builtin_space("chain:2");
    CHECK(all_monotone_maps(c2, c2).size() == 3);  // 00, 01, 11
    auto s = builtin_space("sphere:1");
    // maps chain:1 -> sphere:1 are just the four points
    CHECK(all_monotone_maps(builtin_space("chain:1"), s).size() == 4);
}

TEST_CASE("homotopic agrees with the exhaustive oracle") {
    for (const char* dn : {"fence:2", "chain:2", "sphere:1"})
        for (const char* cn : {"sphere:1", "fence:2"}) {
            auto dom = builtin_space(dn);
            auto cod = builtin_space(cn);
            auto maps = all_monotone_maps(dom, cod);
            auto cls = oracle_classes(cod, maps);
            for (std::size_t i = 0; i < maps.size(); ++i)
                for (std::size_t j = i; j < maps.size(); ++j) {
                    Tri t = homotopic(MonotoneMap(dom, cod, maps[i]),
                                      MonotoneMap(dom, cod, maps[j]));
                    REQUIRE(t != Tri::Unknown);
                    CHECK((t == Tri::True) == (cls[i] == cls[j]));
                }
        }
}

TEST_CASE("identity vs constant") {
    auto c = builtin_space("chain:3");
    CHECK(homotopic(MonotoneMap::identity(c), MonotoneMap::constant(c, c, 0)) == Tri::True);
    auto s = builtin_space("sphere:1");
    CHECK(homotopic(MonotoneMap::identity(s), MonotoneMap::constant(s, s, 0)) == Tri::False);
}

TEST_CASE("homotopic_bounded") {
    auto c = builtin_space("chain:2");
    auto f = MonotoneMap::constant(c, c, 0);
    auto g = MonotoneMap::constant(c, c, 1);
    CHECK(homotopic_bounded(f, f, 0) == Tri::True);
    CHECK(homotopic_bounded(f, g, 0) == Tri::False);
    CHECK(homotopic_bounded(f, g, 1) == Tri::True);   // f <= g directly
    CHECK(homotopic_bounded(g, f, 1) == Tri::False);  // step 1 must ascend
    CHECK(homotopic_bounded(g, f, 2) == Tri::True);   // g <= g >= f
}

TEST_CASE("contractible_in") {
    auto s = builtin_space("sphere:1");
    CHECK(contractible_in(minimal_open(s, 2)) == Tri::True);
    CHECK(contractible_in(DownSet(s, s->full_mask())) == Tri::False);
    auto c = builtin_space("chain:3");
    CHECK(contractible_in(DownSet(c, c->full_mask())) == Tri::True);
}

TEST_CASE("homotopy zigzag witness validates") {
    auto c = builtin_space("fence:3");
    auto w = homotopy_zigzag(MonotoneMap::identity(c), MonotoneMap::constant(c, c, 1));
    REQUIRE(w.has_value());
    CHECK_NOTHROW(w->validate());
    CHECK(w->frames.front() == MonotoneMap::identity(c).assignment());
    CHECK(w->frames.back() == std::vector<int>(std::size_t(c->size()), 1));
}

TEST_CASE("path concatenation parity") {
    auto c = builtin_space("chain:3");  // 0 < 1 < 2
    // even first length: plain concatenation
    CombinatorialPath g1(c, {0, 1, 0});          // m1 = 2
    CombinatorialPath g2(c, {0, 2, 1, 2});       // m2 = 3
    auto r1 = concatenate(g1, g2);
    CHECK(r1.length() == 5);
    CHECK(r1.values() == std::vector<int>{0, 1, 0, 2, 1, 2});
    // odd first length: the junction value is repeated
    CombinatorialPath g3(c, {0, 1});  // m1 = 1
    auto r2 = concatenate(g3, CombinatorialPath(c, {1, 2}));
    CHECK(r2.length() == 3);
    CHECK(r2.values() == std::vector<int>{0, 1, 1, 2});
    CHECK_THROWS_AS(concatenate(g1, CombinatorialPath(c, {2, 2})), EndpointMismatch);
}
