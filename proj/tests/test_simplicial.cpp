#include "doctest.h"
#include "finitetc/simplicial.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

ComplexPtr four_cycle() {
    return SimplicialComplex::build({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("facet canonicalization") {
    auto k = SimplicialComplex::build({"a", "b", "c"}, {{2, 1, 0}, {0, 1}, {1, 0}, {2}});
    REQUIRE(k->facets().size() == 1);  // everything is contained in {a,b,c}
    CHECK(k->facets()[0] == std::vector<int>{0, 1, 2});
    CHECK(k->has_simplex({0, 2}));
    CHECK(k->all_simplices().size() == 7);
    CHECK_THROWS_AS(SimplicialComplex::build({"a"}, {{}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::build({"a", "a"}, {{0}}), DuplicateLabel);
}

TEST_CASE("order complex of the minimal circle is the 4-cycle") {
    auto k = order_complex(*builtin_space("sphere:1"));
    CHECK(complexes_equal(*k, *four_cycle()));
}

TEST_CASE("face poset and simplicial subdivision of an edge") {
    auto edge = SimplicialComplex::build({"a", "b"}, {{0, 1}});
    auto fp = face_poset(*edge);
    REQUIRE(fp->size() == 3);  // {a}, {b}, {a,b}
    CHECK(fp->maximal_elements().size() == 1);
    auto sd = sd_complex(*edge);
    CHECK(sd->vertex_count() == 3);
    CHECK(sd->facets().size() == 2);  // path through the barycenter
}

TEST_CASE("face poset of the order complex matches barycentric subdivision") {
    for (const char* name : {"sphere:1", "fence:3", "wedge_fence:2:2"}) {
        auto p = builtin_space(name);
        auto fp = face_poset(*order_complex(*p));
        std::vector<Bitset> chains;
        auto sd = barycentric_subdivision(*p, &chains);
        REQUIRE(fp->size() == sd->size());
        // both are ordered by (size, lex) over the same vertex indexing, so
        // the identity on indices must be an isomorphism
        for (int i = 0; i < sd->size(); ++i)
            for (int j = 0; j < sd->size(); ++j) CHECK(fp->leq(i, j) == sd->leq(i, j));
    }
}

TEST_CASE("contiguity on the 4-cycle") {
    auto k = four_cycle();
    auto id = SimplicialMap(k, k, {0, 1, 2, 3});
    auto swapped = SimplicialMap(k, k, {1, 0, 3, 2});  // quarter rotation
    auto cst_a = SimplicialMap(k, k, {0, 0, 0, 0});
    auto cst_c = SimplicialMap(k, k, {2, 2, 2, 2});
    CHECK(contiguous_one_step(id, id));
    CHECK(!contiguous_one_step(id, swapped));
    CHECK(same_contiguity_class(id, id) == Tri::True);
    CHECK(same_contiguity_class(id, swapped) == Tri::False);  // no room to rotate
    CHECK(same_contiguity_class(cst_a, cst_c) == Tri::True);
    CHECK(same_contiguity_class(id, cst_a) == Tri::False);
}

TEST_CASE("functors") {
    auto p = builtin_space("fence:2");
    auto q = builtin_space("sphere:1");
    MonotoneMap f(p, q, {0, 2, 1});
    auto kf = K_functor(f);  // validated on construction
    CHECK(kf.vertex_assignment == f.assignment());
    auto back = X_functor(kf);
    // X(K(f)) sends the chain {x0 < x1} to the simplex {f x0, f x1}
    CHECK(back.domain()->size() == face_poset(*order_complex(*p))->size());
    // monotone by construction; spot-check a value
    std::vector<Bitset> simplices;
    auto fp = face_poset(*order_complex(*p), &simplices);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (simplices[i].count() != 1) continue;
        int v = simplices[i].to_indices()[0];
        CHECK(back.codomain()->label(back(int(i))) == "{" + q->label(f(v)) + "}");
    }
}

TEST_CASE("simplicial map validation") {
    auto k = four_cycle();
    CHECK_THROWS_AS(SimplicialMap(k, k, {0, 1, 2}), DomainMismatch);
    CHECK_THROWS_AS(SimplicialMap(k, k, {0, 1, 2, 9}), IndexOutOfRange);
    // a-b is not an edge of the 4-cycle
    CHECK_THROWS_AS(SimplicialMap(k, k, {0, 0, 1, 1}), Error);
}

TEST_CASE("enumerate_simplicial_maps") {
    auto k = four_cycle();
    auto edge = SimplicialComplex::build({"a", "b"}, {{0, 1}});
    auto maps = enumerate_simplicial_maps(edge, k, 10000);
    REQUIRE(maps.has_value());
    // vertex a can land anywhere (4), b on a neighbor or the same vertex
    CHECK(maps->size() == 12);
    CHECK(!enumerate_simplicial_maps(k, k, 2).has_value());  // budget too small
}
