#pragma once

#include <thread>

#include "pposet/generate.hpp"
#include "pposet/invariants.hpp"

namespace pposet {

namespace detail {

template <class F>
inline void parallel_over(std::size_t count, int threads, F&& f) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) f(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

// Groups isomorphism classes by exact byte equality of their fundamental
// expansions. Map is keyed by the serialized expansion.
inline std::map<std::string, std::vector<const GeneratedClass*>> group_by_kp(
    const std::vector<GeneratedClass>& classes, int threads = 1) {
    std::vector<std::string> sigs(classes.size());
    detail::parallel_over(classes.size(), threads, [&](std::size_t i) {
        sigs[i] = qsym_signature(kp_via_extensions(classes[i].representative));
    });
    std::map<std::string, std::vector<const GeneratedClass*>> out;
    for (std::size_t i = 0; i < classes.size(); ++i) out[sigs[i]].push_back(&classes[i]);
    return out;
}

struct KEquivalenceClass {
    std::vector<CanonicalKey> keys;  // sorted
    QSymElement kp;
    Partition shape;
};

struct EquivalenceReport {
    int n = 0;
    i64 total_classes = 0;
    i64 k_class_count = 0;
    std::vector<i64> class_sizes;  // per K-class, descending then stable
    std::vector<KEquivalenceClass> nontrivial;
};

inline EquivalenceReport k_equivalence_report(const std::vector<GeneratedClass>& classes, int n,
                                              int threads = 1) {
    EquivalenceReport report;
    report.n = n;
    report.total_classes = static_cast<i64>(classes.size());
    auto groups = group_by_kp(classes, threads);
    report.k_class_count = static_cast<i64>(groups.size());
    for (const auto& [sig, members] : groups) {
        report.class_sizes.push_back(static_cast<i64>(members.size()));
        if (members.size() < 2) continue;
        KEquivalenceClass cls{{}, kp_via_extensions(members[0]->representative),
                              greene_shape(members[0]->representative)};
        for (const GeneratedClass* g : members) cls.keys.push_back(g->key);
        std::sort(cls.keys.begin(), cls.keys.end());
        report.nontrivial.push_back(std::move(cls));
    }
    std::sort(report.class_sizes.rbegin(), report.class_sizes.rend());
    std::sort(report.nontrivial.begin(), report.nontrivial.end(),
              [](const KEquivalenceClass& a, const KEquivalenceClass& b) { return a.keys < b.keys; });
    return report;
}

inline EquivalenceReport k_equivalence_classes(int n, int threads = 1) {
    return k_equivalence_report(generate_poset_classes(n, threads), n, threads);
}

// Input for the automorphism-twist construction of a K-equivalent pair:
// a base poset R with an automorphism phi, an incomparable pair e whose
// phi-orbit gets added one step apart in the two outputs, and an
// incomparable anchor pair f added to both.
struct TwistInput {
    Poset base;
    std::vector<int> automorphism;   // 1-based images, automorphism[a-1] = phi(a)
    std::pair<int, int> orbit_pair;  // e, 1-based
    std::pair<int, int> anchor_pair; // f, 1-based
};

struct TwistResult {
    Poset p, q;
    int m = 0;
    bool relabeled = false;  // outputs were not naturally labeled as built
};

namespace detail {

inline Poset add_relations(const Poset& base, const std::vector<std::pair<int, int>>& extra) {
    std::vector<std::pair<int, int>> covers = base.covers();
    covers.insert(covers.end(), extra.begin(), extra.end());
    return Poset::from_cover_relations(base.size(), covers);
}

}  // namespace detail

inline TwistResult construct_twisted_pair(const TwistInput& in, bool relabel = true) {
    const Poset& r = in.base;
    int n = r.size();
    const std::vector<int>& phi = in.automorphism;
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("twist input: automorphism image list has wrong length");
    {
        std::vector<bool> seen(n, false);
        for (int v : phi) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("twist input: automorphism is not a permutation");
            seen[v - 1] = true;
        }
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (r.less(a, b) != r.less(phi[a - 1], phi[b - 1]))
                throw std::invalid_argument("twist input: permutation does not preserve the order");

    auto [e1, e2] = in.orbit_pair;
    auto [f1, f2] = in.anchor_pair;
    auto incomparable = [&](const Poset& s, int a, int b) {
        return a != b && !s.less(a, b) && !s.less(b, a);
    };
    if (e1 < 1 || e1 > n || e2 < 1 || e2 > n || !incomparable(r, e1, e2))
        throw std::invalid_argument("twist input: orbit pair must be incomparable in the base");
    if (f1 < 1 || f1 > n || f2 < 1 || f2 > n || !incomparable(r, f1, f2))
        throw std::invalid_argument("twist input: anchor pair must be incomparable in the base");

    Poset reversed = detail::add_relations(r, {{f2, f1}});
    if (!reversed.less(e1, e2))
        throw std::invalid_argument(
            "twist input: orbit pair is not forced by the reversed anchor relation");

    auto power = [&](int t, int x) {
        for (int s = 0; s < t; ++s) x = phi[x - 1];
        return x;
    };
    int m = 0;
    for (int t = 1; t <= n * n; ++t) {
        if (reversed.less(power(t, e1), power(t, e2))) {
            m = t;
            break;
        }
    }
    if (m == 0)
        throw std::invalid_argument(
            "twist input: no orbit power of the pair is forced by the reversed anchor relation");

    std::vector<std::pair<int, int>> prels{{f1, f2}}, qrels{{f1, f2}};
    for (int t = 0; t < m; ++t) prels.push_back({power(t, e1), power(t, e2)});
    for (int t = 1; t <= m; ++t) qrels.push_back({power(t, e1), power(t, e2)});

    // The internal subtraction argument needs the anchor pair
    // incomparable once the orbit relations are in place.
    Poset s_only = detail::add_relations(r, std::vector<std::pair<int, int>>(prels.begin() + 1, prels.end()));
    Poset s_shift = detail::add_relations(r, std::vector<std::pair<int, int>>(qrels.begin() + 1, qrels.end()));
    if (!incomparable(s_only, f1, f2) || !incomparable(s_shift, f1, f2))
        throw std::invalid_argument("twist input: anchor pair becomes comparable under the orbit relations");

    TwistResult out;
    out.m = m;
    out.p = detail::add_relations(r, prels);
    out.q = detail::add_relations(r, qrels);
    if (!out.p.naturally_labeled() || !out.q.naturally_labeled()) {
        out.relabeled = true;
        if (relabel) {
            out.p = natural_relabel(out.p);
            out.q = natural_relabel(out.q);
        }
    }
    if (relabel && !(qsym_signature(kp_via_extensions(out.p)) ==
                     qsym_signature(kp_via_extensions(out.q))))
        throw std::logic_error("twist construction produced a pair with different generating functions");
    return out;
}

namespace detail {

inline Poset chain_poset(int len) {
    std::vector<std::pair<int, int>> covers;
    for (int x = 1; x < len; ++x) covers.push_back({x, x + 1});
    return Poset::from_cover_relations(len, covers);
}

// Two parallel chains of length l2 with crossing relations, a third
// chain of length l3 linked into the first at position d, and an
// (l1-l2)-chain stacked above both tops. Swapping which top chain the
// third chain enters yields the two K-equivalent variants.
inline Poset shape_family_core(int l1, int l2, int l3, bool link_to_second) {
    int n = 2 * l2 + l3 + (l1 - l2);
    int d = std::max(1, l3 + 2 - l2);
    auto x_of = [&](int t) { return t; };                 // 1..l2
    auto y_of = [&](int t) { return l2 + t; };            // 1..l2
    auto z_of = [&](int t) { return 2 * l2 + t; };        // 1..l3
    auto t_of = [&](int t) { return 2 * l2 + l3 + t; };   // 1..l1-l2
    std::vector<std::pair<int, int>> covers;
    for (int t = 1; t < l2; ++t) {
        covers.push_back({x_of(t), x_of(t + 1)});
        covers.push_back({y_of(t), y_of(t + 1)});
    }
    for (int t = 1; t < l3; ++t) covers.push_back({z_of(t), z_of(t + 1)});
    for (int t = 1; t < l1 - l2; ++t) covers.push_back({t_of(t), t_of(t + 1)});
    covers.push_back({x_of(1), y_of(l2)});
    covers.push_back({y_of(1), x_of(l2)});
    covers.push_back({x_of(1), z_of(d)});
    covers.push_back({z_of(d), link_to_second ? y_of(l2) : x_of(l2)});
    if (l1 > l2) {
        covers.push_back({x_of(l2), t_of(1)});
        covers.push_back({y_of(l2), t_of(1)});
    }
    return natural_relabel(Poset::from_cover_relations(n, covers));
}

inline Poset eight_element_cycle_poset(bool shifted) {
    std::vector<std::pair<int, int>> covers{{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6},
                                            {3, 7}, {4, 7}, {4, 8}, {3, 5}};
    covers.push_back(shifted ? std::pair<int, int>{2, 7} : std::pair<int, int>{1, 6});
    return Poset::from_cover_relations(8, covers);
}

}  // namespace detail

// A non-isomorphic K-equivalent pair of the given Greene shape. Defined
// for shapes containing (3,3,1) or (2,2,2,2).
inline std::pair<Poset, Poset> equivalent_pair_of_shape(const Partition& shape) {
    const std::vector<int>& lam = shape.parts();
    bool has331 = shape.contains(Partition({3, 3, 1}));
    bool has2222 = shape.contains(Partition({2, 2, 2, 2}));
    if (!has331 && !has2222)
        throw std::invalid_argument(
            "equivalent_pair_of_shape: shape must contain (3,3,1) or (2,2,2,2)");
    if (shape.weight() > Poset::kMaxElements)
        throw size_limit_error("equivalent_pair_of_shape: shape too large");

    Poset p, q;
    size_t rest_from;
    if (has331) {
        p = detail::shape_family_core(lam[0], lam[1], lam[2], false);
        q = detail::shape_family_core(lam[0], lam[1], lam[2], true);
        rest_from = 3;
    } else {
        p = detail::eight_element_cycle_poset(false);
        q = detail::eight_element_cycle_poset(true);
        if (lam[0] > 2) {
            Poset top = detail::chain_poset(lam[0] - 2);
            p = ordinal_sum(p, top);
            q = ordinal_sum(q, top);
        }
        rest_from = 4;
        while (rest_from < lam.size() && lam[rest_from] == 2) ++rest_from;
        for (size_t t = 4; t < rest_from; ++t) {
            p = disjoint_union(p, detail::chain_poset(2));
            q = disjoint_union(q, detail::chain_poset(2));
        }
    }
    for (size_t t = rest_from; t < lam.size(); ++t) {
        p = disjoint_union(p, detail::chain_poset(lam[t]));
        q = disjoint_union(q, detail::chain_poset(lam[t]));
    }
    return {natural_relabel(p), natural_relabel(q)};
}

enum class AuditMode { K, Support };

struct AuditResult {
    i64 classes_checked = 0;
    // Groups of canonical keys sharing one signature, only when >= 2.
    std::vector<std::vector<CanonicalKey>> collisions;
};

// Checks injectivity of the chosen signature on the isomorphism classes
// whose shape satisfies the predicate.
template <class ShapePred>
inline AuditResult injectivity_audit(const std::vector<GeneratedClass>& classes, AuditMode mode,
                                     ShapePred&& pred, int threads = 1) {
    std::vector<std::uint8_t> selected(classes.size(), 0);
    std::vector<std::string> sigs(classes.size());
    detail::parallel_over(classes.size(), threads, [&](std::size_t i) {
        if (!pred(greene_shape(classes[i].representative))) return;
        selected[i] = 1;
        QSymElement kp = kp_via_extensions(classes[i].representative);
        sigs[i] = mode == AuditMode::K ? qsym_signature(kp) : support_signature(kp);
    });
    std::map<std::string, std::vector<CanonicalKey>> groups;
    AuditResult out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!selected[i]) continue;
        ++out.classes_checked;
        groups[sigs[i]].push_back(classes[i].key);
    }
    for (auto& [sig, keys] : groups) {
        if (keys.size() < 2) continue;
        std::sort(keys.begin(), keys.end());
        out.collisions.push_back(keys);
    }
    std::sort(out.collisions.begin(), out.collisions.end());
    return out;
}

inline bool is_width2_shape(const Partition& shape) { return shape.length() <= 2; }

inline bool is_hook_shape(const Partition& shape) {
    return shape.length() <= 1 || shape.parts()[1] <= 1;
}

inline bool is_near_hook_shape(const Partition& shape) {
    if (shape.length() < 2 || shape.parts()[1] != 2) return false;
    return shape.length() == 2 || shape.parts()[2] <= 1;
}

// The shapes for which uniqueness is open: (l, 2, 2, 1, ..., 1).
inline bool is_open_double_two_shape(const Partition& shape) {
    if (shape.length() < 3 || shape.parts()[1] != 2 || shape.parts()[2] != 2) return false;
    return shape.length() == 3 || shape.parts()[3] <= 1;
}

}  // namespace pposet
