#include <doctest.h>

#include <sstream>

#include "pposet/serialize.hpp"

using namespace pposet;

TEST_CASE("poset text parsing") {
    std::istringstream in("n 3\ncover 1 2\ncover 1 3\n");
    Poset p = parse_poset_text(in);
    CHECK(p == Poset::from_cover_relations(3, {{1, 2}, {1, 3}}));

    std::istringstream blank("\n# comment\nn 2\n\ncover 1 2\n");
    CHECK(parse_poset_text(blank).less(1, 2));

    std::istringstream selfloop("n 3\ncover 2 2\n");
    CHECK_THROWS_WITH_AS(parse_poset_text(selfloop, "bad.txt"), doctest::Contains("bad.txt:2"),
                         parse_error);

    std::istringstream cyclic("n 2\ncover 1 2\ncover 2 1\n");
    CHECK_THROWS_AS(parse_poset_text(cyclic), parse_error);

    std::istringstream outofrange("n 2\ncover 1 5\n");
    CHECK_THROWS_WITH_AS(parse_poset_text(outofrange, "f.txt"), doctest::Contains("f.txt:2"),
                         parse_error);

    std::istringstream nosize("cover 1 2\n");
    CHECK_THROWS_AS(parse_poset_text(nosize), parse_error);

    std::istringstream junk("n 2\nfrob 1 2\n");
    CHECK_THROWS_WITH_AS(parse_poset_text(junk, "g.txt"), doctest::Contains("unknown directive"),
                         parse_error);
}

TEST_CASE("poset text round trip") {
    Poset p = Poset::from_cover_relations(
        7, {{1, 3}, {1, 4}, {1, 7}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 7}});
    std::istringstream in(format_poset_text(p));
    CHECK(parse_poset_text(in) == p);
}

TEST_CASE("twist input parsing") {
    std::istringstream in(
        "n 7\ncover 1 4\ncover 4 6\ncover 2 5\ncover 5 7\ncover 1 7\ncover 2 6\n"
        "phi 2 1 3 5 4 7 6\ne 3 6\nf 1 3\n");
    std::string text = in.str();
    std::ofstream tmp("twist_test_input.txt");
    tmp << text;
    tmp.close();
    TwistInput t = parse_twist_file("twist_test_input.txt");
    CHECK(t.base.size() == 7);
    CHECK(t.automorphism == std::vector<int>{2, 1, 3, 5, 4, 7, 6});
    CHECK(t.orbit_pair == std::pair<int, int>{3, 6});
    CHECK(t.anchor_pair == std::pair<int, int>{1, 3});
    std::remove("twist_test_input.txt");
}

TEST_CASE("json serialization shapes") {
    QSymElement x(Basis::L, 3);
    x.add_term(Composition({2, 1}), 3);
    x.add_term(Composition({3}), 1);
    json j = to_json(x);
    CHECK(j["basis"] == "L");
    CHECK(j["degree"] == 3);
    CHECK(j["terms"].size() == 2);
    // lexicographic term order
    CHECK(j["terms"][0]["composition"] == json::array({2, 1}));
    CHECK(j["terms"][0]["coeff"] == 3);
    CHECK(j["terms"][1]["composition"] == json::array({3}));

    Poset v = Poset::from_cover_relations(3, {{1, 2}, {1, 3}});
    json jp = to_json(v);
    CHECK(jp["n"] == 3);
    CHECK(jp["covers"].size() == 2);

    json jt = to_json(ideal_type_counts(v));
    CHECK(jt.size() == 4);
    CHECK(jt[0]["k"] == 0);
    CHECK(jt[0]["count"] == 1);
}

TEST_CASE("json output is byte-deterministic") {
    Poset v = Poset::from_cover_relations(3, {{1, 2}, {1, 3}});
    json a = to_json(kp_via_extensions(v));
    json b = to_json(kp_via_extensions(v));
    CHECK(a.dump() == b.dump());
}
