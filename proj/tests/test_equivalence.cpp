#include <doctest.h>

#include <random>

#include "pposet/equivalence.hpp"
#include "support/oracles.hpp"

using namespace pposet;

namespace {

Poset vee() { return Poset::from_cover_relations(3, {{1, 2}, {1, 3}}); }
Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int x = 1; x < n; ++x) covers.push_back({x, x + 1});
    return Poset::from_cover_relations(n, covers);
}
Poset antichain(int n) { return Poset::from_cover_relations(n, {}); }

Poset example_seven_p() {
    return Poset::from_cover_relations(
        7, {{1, 3}, {1, 4}, {1, 7}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 7}});
}
Poset example_seven_q() {
    return Poset::from_cover_relations(7, {{1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 6}, {5, 7}});
}
Poset example_eight_p() {
    return Poset::from_cover_relations(8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7},
                                           {4, 8}, {1, 6}, {3, 5}});
}
Poset example_eight_q() {
    return Poset::from_cover_relations(8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7},
                                           {4, 8}, {2, 7}, {3, 5}});
}

}  // namespace

TEST_CASE("canonical form is an isomorphism invariant") {
    // relabelings collide, distinct classes separate
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Poset p = oracles::random_natural_poset(n, rng);
        Poset q = apply_permutation(p, oracles::random_permutation(n, rng));
        CHECK(canonical_form(p) == canonical_form(q));
    }

    CHECK(canonical_form(example_seven_p()) != canonical_form(example_seven_q()));
    CHECK(canonical_form(example_eight_p()) != canonical_form(example_eight_q()));

    // n = 3: exactly 5 classes, keys agree with brute-force grouping
    for (int n = 1; n <= 4; ++n) {
        std::vector<Poset> all = oracles::all_labeled_posets(n);
        std::set<CanonicalKey> keys;
        for (const Poset& p : all) keys.insert(canonical_form(p));
        CHECK(static_cast<long long>(keys.size()) == oracles::count_poset_classes_brute(n));
        for (size_t a = 0; a < all.size(); a += 7)
            for (size_t b = a; b < all.size(); b += 11)
                CHECK((canonical_form(all[a]) == canonical_form(all[b])) ==
                      oracles::brute_isomorphic(all[a], all[b]));
    }

    CHECK(isomorphic(example_seven_p(), apply_permutation(example_seven_p(),
                                                          {2, 0, 3, 4, 1, 6, 5})));
    CHECK_FALSE(isomorphic(example_seven_p(), example_seven_q()));
}

TEST_CASE("automorphisms form the full symmetry group") {
    CHECK(automorphisms(chain(4)) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(automorphisms(antichain(2)) ==
          std::vector<std::vector<int>>{{1, 2}, {2, 1}});

    // the crown-like base of the eight-element example admits the 4-cycle pair
    Poset r = Poset::from_cover_relations(
        8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}});
    auto autos = automorphisms(r);
    std::vector<int> four_cycle{2, 3, 4, 1, 6, 7, 8, 5};
    CHECK(std::find(autos.begin(), autos.end(), four_cycle) != autos.end());

    // closure under composition
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        Poset p = oracles::random_natural_poset(n, rng);
        auto group = automorphisms(p);
        std::set<std::vector<int>> members(group.begin(), group.end());
        for (const auto& g : group)
            for (const auto& h : group) {
                std::vector<int> gh(n);
                for (int x = 0; x < n; ++x) gh[x] = g[h[x] - 1];
                CHECK(members.count(gh) == 1);
            }
    }
}

TEST_CASE("generation matches the raw enumeration oracle") {
    CHECK(natural_poset_count(3) == 7);
    CHECK(natural_poset_count(5) == 357);

    std::vector<long long> expected{1, 2, 5, 16, 63};
    for (int n = 1; n <= 5; ++n) {
        auto classes = generate_poset_classes(n);
        CHECK(static_cast<long long>(classes.size()) == expected[n - 1]);
        CHECK(static_cast<long long>(classes.size()) == oracles::count_poset_classes_brute(n));
        for (const auto& g : classes) {
            CHECK(g.representative.naturally_labeled());
            CHECK(canonical_form(g.representative) == g.key);
        }
    }

    // generation is thread-count independent
    auto serial = generate_poset_classes(6, 1);
    auto parallel = generate_poset_classes(6, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t t = 0; t < serial.size(); ++t) {
        CHECK(serial[t].key == parallel[t].key);
        CHECK(serial[t].representative == parallel[t].representative);
    }
}

TEST_CASE("k-equivalence classes at small sizes") {
    for (int n = 1; n <= 5; ++n) {
        EquivalenceReport report = k_equivalence_classes(n);
        CHECK(report.nontrivial.empty());
        CHECK(report.k_class_count == report.total_classes);
        i64 sum = 0;
        for (i64 s : report.class_sizes) sum += s;
        CHECK(sum == report.total_classes);
    }
}

TEST_CASE("twisted pair construction reproduces the seven-element example") {
    TwistInput in;
    in.base = Poset::from_cover_relations(7, {{1, 4}, {4, 6}, {2, 5}, {5, 7}, {1, 7}, {2, 6}});
    in.automorphism = {2, 1, 3, 5, 4, 7, 6};
    in.orbit_pair = {3, 6};
    in.anchor_pair = {1, 3};
    TwistResult r = construct_twisted_pair(in);
    CHECK(r.m == 1);
    CHECK_FALSE(r.relabeled);
    CHECK(r.p == example_seven_p());
    CHECK(r.q == example_seven_q());
    CHECK(kp_via_extensions(r.p) == kp_via_extensions(r.q));
    CHECK(canonical_form(r.p) != canonical_form(r.q));
}

TEST_CASE("twisted pair construction reproduces the eight-element example") {
    TwistInput in;
    in.base = Poset::from_cover_relations(
        8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}});
    in.automorphism = {2, 3, 4, 1, 6, 7, 8, 5};
    in.orbit_pair = {1, 6};
    in.anchor_pair = {3, 5};
    TwistResult r = construct_twisted_pair(in);
    CHECK(r.m == 1);
    CHECK(r.p == example_eight_p());
    CHECK(r.q == example_eight_q());
    CHECK(kp_via_extensions(r.p) == kp_via_extensions(r.q));
}

TEST_CASE("twisted pair with the identity automorphism") {
    TwistInput in;
    in.base = Poset::from_cover_relations(7, {{1, 4}, {4, 6}, {2, 5}, {5, 7}, {1, 7}, {2, 6}});
    in.automorphism = {1, 2, 3, 4, 5, 6, 7};
    in.orbit_pair = {3, 6};
    in.anchor_pair = {1, 3};
    TwistResult r = construct_twisted_pair(in);
    CHECK(r.m == 1);
    CHECK(r.p == r.q);
}

TEST_CASE("twisted pair validation failures are named") {
    TwistInput in;
    in.base = Poset::from_cover_relations(7, {{1, 4}, {4, 6}, {2, 5}, {5, 7}, {1, 7}, {2, 6}});
    in.automorphism = {2, 1, 3, 5, 4, 7, 6};
    in.orbit_pair = {3, 6};
    in.anchor_pair = {1, 3};

    TwistInput bad = in;
    bad.automorphism = {2, 1, 3, 5, 4, 7, 7};
    CHECK_THROWS_WITH_AS(construct_twisted_pair(bad),
                         doctest::Contains("not a permutation"), std::invalid_argument);

    bad = in;
    bad.automorphism = {3, 1, 2, 5, 4, 7, 6};
    CHECK_THROWS_WITH_AS(construct_twisted_pair(bad),
                         doctest::Contains("does not preserve"), std::invalid_argument);

    bad = in;
    bad.orbit_pair = {1, 4};
    CHECK_THROWS_WITH_AS(construct_twisted_pair(bad),
                         doctest::Contains("orbit pair must be incomparable"),
                         std::invalid_argument);

    bad = in;
    bad.anchor_pair = {4, 6};
    CHECK_THROWS_WITH_AS(construct_twisted_pair(bad),
                         doctest::Contains("anchor pair must be incomparable"),
                         std::invalid_argument);

    bad = in;
    bad.anchor_pair = {3, 7};
    CHECK_THROWS_WITH_AS(construct_twisted_pair(bad),
                         doctest::Contains("not forced by the reversed anchor"),
                         std::invalid_argument);
}

TEST_CASE("equivalent pairs of a given shape") {
    auto [p331, q331] = equivalent_pair_of_shape(Partition({3, 3, 1}));
    CHECK(canonical_form(p331) == canonical_form(example_seven_p()));
    CHECK(canonical_form(q331) == canonical_form(example_seven_q()));

    auto [p2222, q2222] = equivalent_pair_of_shape(Partition({2, 2, 2, 2}));
    CHECK(canonical_form(p2222) == canonical_form(example_eight_p()));
    CHECK(canonical_form(q2222) == canonical_form(example_eight_q()));

    for (const Partition& shape :
         {Partition({4, 3, 1}), Partition({3, 3, 2}), Partition({3, 2, 2, 2})}) {
        auto [p, q] = equivalent_pair_of_shape(shape);
        CHECK(greene_shape(p) == shape);
        CHECK(greene_shape(q) == shape);
        CHECK(kp_via_extensions(p) == kp_via_extensions(q));
        CHECK_FALSE(isomorphic(p, q));
    }

    CHECK_THROWS_AS(equivalent_pair_of_shape(Partition({3, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(equivalent_pair_of_shape(Partition({4, 4})), std::invalid_argument);
}

TEST_CASE("injectivity audit finds the known collision and no phantom ones") {
    GenerationCache cache(2);
    const auto& classes5 = cache.classes(5);
    AuditResult width2 = injectivity_audit(classes5, AuditMode::K, is_width2_shape);
    CHECK(width2.collisions.empty());
    CHECK(width2.classes_checked > 0);

    AuditResult hook = injectivity_audit(classes5, AuditMode::Support, is_hook_shape);
    CHECK(hook.collisions.empty());

    const auto& classes7 = cache.classes(7);
    AuditResult all7 = injectivity_audit(classes7, AuditMode::K,
                                         [](const Partition&) { return true; });
    CanonicalKey kp = canonical_form(example_seven_p());
    CanonicalKey kq = canonical_form(example_seven_q());
    std::vector<CanonicalKey> pair{kp, kq};
    std::sort(pair.begin(), pair.end());
    bool found = false;
    for (const auto& group : all7.collisions)
        if (group == pair) found = true;
    CHECK(found);
}

TEST_CASE("shape predicates") {
    CHECK(is_width2_shape(Partition({4, 2})));
    CHECK_FALSE(is_width2_shape(Partition({2, 2, 1})));
    CHECK(is_hook_shape(Partition({5, 1, 1})));
    CHECK(is_hook_shape(Partition({3})));
    CHECK_FALSE(is_hook_shape(Partition({3, 2})));
    CHECK(is_near_hook_shape(Partition({4, 2, 1, 1})));
    CHECK(is_near_hook_shape(Partition({2, 2})));
    CHECK_FALSE(is_near_hook_shape(Partition({3, 2, 2})));
    CHECK(is_open_double_two_shape(Partition({3, 2, 2, 1})));
    CHECK_FALSE(is_open_double_two_shape(Partition({3, 2, 2, 2})));
}
