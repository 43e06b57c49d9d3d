#pragma once

// Test-only oracles, kept independent of the library's canonical-form
// and generation machinery.

#include <random>
#include <vector>

#include "pposet/poset.hpp"

namespace oracles {

using pposet::Poset;

// Every strict partial order on [n], enumerated over the 3^C(n,2)
// orientation choices with a transitivity filter. Includes non-natural
// labelings.
inline std::vector<Poset> all_labeled_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    std::vector<Poset> out;
    std::vector<int> choice(pairs.size(), 0);
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == pairs.size()) {
            std::vector<std::pair<int, int>> rels;
            for (size_t s = 0; s < pairs.size(); ++s) {
                if (choice[s] == 1) rels.push_back(pairs[s]);
                if (choice[s] == 2) rels.push_back({pairs[s].second, pairs[s].first});
            }
            // keep only choices that are transitively closed and acyclic
            try {
                Poset p = Poset::from_cover_relations(n, rels);
                size_t count = 0;
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b)
                        if (a != b && p.less(a, b)) ++count;
                if (count == rels.size()) out.push_back(p);
            } catch (const pposet::poset_error&) {
            }
            return;
        }
        for (int c = 0; c < 3; ++c) {
            choice[t] = c;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Brute-force isomorphism by full permutation search.
inline bool brute_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    int n = p.size();
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = x;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (((p.up_mask(a) >> b) & 1) != ((q.up_mask(perm[a]) >> perm[b]) & 1)) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Number of isomorphism classes of posets on n elements, via raw
// enumeration and pairwise isomorphism grouping.
inline long long count_poset_classes_brute(int n) {
    std::vector<Poset> all = all_labeled_posets(n);
    std::vector<Poset> reps;
    for (const Poset& p : all) {
        bool found = false;
        for (const Poset& r : reps)
            if (brute_isomorphic(p, r)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(p);
    }
    return static_cast<long long>(reps.size());
}

// Random naturally labeled poset: attach each element above a random
// ideal of the prefix.
inline Poset random_natural_poset(int n, std::mt19937& rng) {
    std::vector<std::uint32_t> down(n, 0);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> ideals;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            bool ok = true;
            for (std::uint32_t m = mask; m; m &= m - 1)
                if (down[pposet::lowest_bit(m)] & ~mask) {
                    ok = false;
                    break;
                }
            if (ok) ideals.push_back(mask);
        }
        down[k] = ideals[rng() % ideals.size()];
    }
    return Poset::from_down_masks(n, down);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = x;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracles
