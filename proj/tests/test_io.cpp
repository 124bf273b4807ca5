#include "doctest.h"
#include "finitetc/io.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

TEST_CASE("text poset parsing") {
    auto p = parse_poset(
        "# the diamond\n"
        "elements: bot l r top\n"
        "bot < l\n"
        "bot < r\n"
        "l < top\n"
        "r < top\n");
    REQUIRE(p->size() == 4);
    CHECK(p->leq(0, 3));
    CHECK(!p->comparable(1, 2));
    CHECK(p->label(3) == "top");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_poset("elements: a b\na <\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poset("a < b\n"), ParseError);       // missing header
    CHECK_THROWS_AS(parse_poset("elements: a b\na < c\n"), ParseError);  // unknown element
}

TEST_CASE("json poset parsing") {
    auto p = parse_poset(R"({"elements": ["a", "b", "c"], "hasse": [["a","b"], ["a","c"]]})");
    REQUIRE(p->size() == 3);
    CHECK(p->leq(0, 1));
    CHECK(p->leq(0, 2));
    CHECK(!p->comparable(1, 2));
    // missing "hasse" means no relations
    CHECK(parse_poset(R"({"elements": ["a", "b"]})")->comparable(0, 1) == false);
    CHECK_THROWS_AS(parse_poset(R"({"hasse": []})"), ParseError);
}

TEST_CASE("complex parsing orders vertices by first appearance") {
    auto k = parse_complex("b c\nc a\n# done\n");
    REQUIRE(k->vertex_count() == 3);
    CHECK(k->vertex_label(0) == "b");
    CHECK(k->vertex_label(2) == "a");
    CHECK(k->facets().size() == 2);

    auto j = parse_complex(R"({"facets": [["x","y"]]})");
    CHECK(j->vertex_count() == 2);
    CHECK_THROWS_AS(parse_complex(""), ParseError);
}

TEST_CASE("load_space resolves zoo names first") {
    auto s = load_space("sphere:1");
    CHECK(s->size() == 4);
    CHECK(s->label(0) == "a");
    CHECK_THROWS_AS(load_space("no_such_thing:9"), Error);
}

TEST_CASE("report json is byte-deterministic and hides timing by default") {
    auto run = [] { return cat(builtin_space("sphere:1")); };
    auto a = run();
    auto b = run();
    a.elapsed_ms = 1.0;
    b.elapsed_ms = 2.0;  // different timings must not leak into default output
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_json(a).find("elapsed_ms") == std::string::npos);
    CHECK(report_to_json(a, true).find("elapsed_ms") != std::string::npos);
    CHECK(report_to_json(a).find("\"value\": 2") != std::string::npos);
    CHECK(report_to_json(a).find("\"certified\": \"exact\"") != std::string::npos);
}

TEST_CASE("infinite and unknown values serialize as strings") {
    auto r = cc_nm(builtin_space("sphere:1"), 2, 0, Variant::Wedge);
    CHECK(report_to_json(r).find("\"value\": \"infinite\"") != std::string::npos);
    CHECK(report_to_text(r).find("infinite") != std::string::npos);
}
