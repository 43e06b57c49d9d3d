#pragma once

#include <random>
#include <sstream>

#include "pposet/io.hpp"

namespace pposet {

// Exhaustive verification suites for every stated library invariant.
// Each suite returns a pass flag plus human-readable notes; the CLI
// `verify` command and the acceptance harness both drive these.

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

namespace verify_detail {

inline std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    for (std::uint32_t mask = 0; mask < (n >= 1 ? (1u << (n - 1)) : 1u); ++mask)
        out.push_back(composition_of_mask(mask, n));
    return out;
}

inline Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int x = 1; x < n; ++x) covers.push_back({x, x + 1});
    return Poset::from_cover_relations(n, covers);
}

inline Poset example_seven_p() {
    return Poset::from_cover_relations(
        7, {{1, 3}, {1, 4}, {1, 7}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 7}});
}
inline Poset example_seven_q() {
    return Poset::from_cover_relations(7,
                                       {{1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 6}, {5, 7}});
}
inline Poset example_thirteen(bool second) {
    std::vector<std::pair<int, int>> covers{{1, 2},  {1, 9},  {2, 7},   {2, 8},   {2, 3},
                                            {3, 4},  {3, 5},  {3, 6},   {4, 10},  {5, 10},
                                            {6, 12}, {7, 13}, {10, 11}, {11, 12}, {12, 13}};
    if (second) {
        covers.push_back({8, 11});
        covers.push_back({9, 13});
    } else {
        covers.push_back({8, 13});
        covers.push_back({9, 11});
    }
    return Poset::from_cover_relations(13, covers);
}

inline TwistInput example_seven_input() {
    TwistInput in;
    in.base = Poset::from_cover_relations(7, {{1, 4}, {4, 6}, {2, 5}, {5, 7}, {1, 7}, {2, 6}});
    in.automorphism = {2, 1, 3, 5, 4, 7, 6};
    in.orbit_pair = {3, 6};
    in.anchor_pair = {1, 3};
    return in;
}
inline TwistInput example_eight_input() {
    TwistInput in;
    in.base = Poset::from_cover_relations(
        8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}});
    in.automorphism = {2, 3, 4, 1, 6, 7, 8, 5};
    in.orbit_pair = {1, 6};
    in.anchor_pair = {3, 5};
    return in;
}

inline Poset random_natural_poset(int n, std::mt19937& rng) {
    std::vector<std::uint32_t> down(n, 0);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> ideals;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            bool ok = true;
            for (std::uint32_t m = mask; m; m &= m - 1)
                if (down[lowest_bit(m)] & ~mask) {
                    ok = false;
                    break;
                }
            if (ok) ideals.push_back(mask);
        }
        down[k] = ideals[rng() % ideals.size()];
    }
    return Poset::from_down_masks(n, down);
}

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

}  // namespace verify_detail

inline SuiteResult verify_composition_core() {
    SuiteResult r{"composition-core"};
    for (int n = 1; n <= 10 && r.pass; ++n)
        for (const Composition& a : verify_detail::all_compositions(n))
            if (composition_of_set(descent_set(a), n) != a) {
                r.fail("descent/composition roundtrip failed at degree " + std::to_string(n));
                break;
            }
    for (int n = 1; n <= 8 && r.pass; ++n)
        for (const Composition& a : verify_detail::all_compositions(n)) {
            Composition rebuilt;
            for (int h : near_concat_decomposition(a)) rebuilt = near_concat(rebuilt, Composition::ones(h));
            if (rebuilt != a) {
                r.fail("near-concatenation decomposition failed to recompose");
                break;
            }
            if (refinements(a).size() != (std::size_t{1} << (n - 1 - descent_set(a).size()))) {
                r.fail("refinement count mismatch");
                break;
            }
        }
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rem, int maxpart) -> bool {
        if (rem == 0) {
            Partition p(parts);
            return conjugate_partition(conjugate_partition(p)) == p;
        }
        for (int next = std::min(rem, maxpart); next >= 1; --next) {
            parts.push_back(next);
            bool ok = self(self, rem - next, next);
            parts.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int n = 1; n <= 12 && r.pass; ++n)
        if (!rec(rec, n, n)) r.fail("conjugation is not an involution at weight " + std::to_string(n));
    return r;
}

inline SuiteResult verify_basis_roundtrip() {
    SuiteResult r{"qsym-basis-roundtrip"};
    for (int n = 0; n <= 7; ++n) {
        for (const Composition& a :
             (n == 0 ? std::vector<Composition>{Composition{}} : verify_detail::all_compositions(n))) {
            QSymElement x(Basis::L, n);
            x.add_term(a, 1);
            if (!(m_to_l(l_to_m(x)) == x)) {
                r.fail("basis roundtrip failed at degree " + std::to_string(n));
                return r;
            }
        }
    }
    return r;
}

inline SuiteResult verify_coalgebra() {
    SuiteResult r{"qsym-coalgebra"};
    for (int n = 1; n <= 6; ++n) {
        for (const Composition& a : verify_detail::all_compositions(n)) {
            QSymElement x(Basis::L, n);
            x.add_term(a, 1);
            QSymTensor left_unit = coproduct_graded(x, 0);
            QSymTensor right_unit = coproduct_graded(x, n);
            if (!(contract_left(FunctionalSpec::counit(), left_unit) == x) ||
                !(contract_right(FunctionalSpec::counit(), right_unit) == x)) {
                r.fail("counit law failed");
                return r;
            }
            for (int k = 0; k <= n; ++k) {
                QSymTensor outer = coproduct_graded(x, k);
                for (int j = 0; j <= k; ++j) {
                    std::map<std::tuple<Composition, Composition, Composition>, i64> lhs, rhs;
                    for (const auto& [key, c] : outer.terms()) {
                        QSymElement left(Basis::L, k);
                        left.add_term(key.first, 1);
                        QSymTensor inner = coproduct_graded(left, j);
                        for (const auto& [kk, cc] : inner.terms())
                            lhs[{kk.first, kk.second, key.second}] += c * cc;
                    }
                    QSymTensor outer2 = coproduct_graded(x, j);
                    for (const auto& [key, c] : outer2.terms()) {
                        QSymElement right(Basis::L, n - j);
                        right.add_term(key.second, 1);
                        QSymTensor inner = coproduct_graded(right, k - j);
                        for (const auto& [kk, cc] : inner.terms())
                            rhs[{key.first, kk.first, kk.second}] += c * cc;
                    }
                    if (lhs != rhs) {
                        r.fail("coassociativity failed at degree " + std::to_string(n));
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

inline SuiteResult verify_extremal_indicator(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"extremal-indicator"};
    long long checked = 0;
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            QSymElement kp = kp_via_extensions(p);
            int nmax = popcount(p.maximal_mask());
            int nmin = popcount(p.minimal_mask());
            for (int i = 1; i <= n; ++i) {
                if (extremal_functional(Extremal::Max, i, kp) != (i == nmax ? 1 : 0) ||
                    extremal_functional(Extremal::Min, i, kp) != (i == nmin ? 1 : 0)) {
                    r.fail("indicator failed on a poset with " + std::to_string(n) + " elements");
                    return r;
                }
                ++checked;
            }
        }
    }
    r.note("checked " + std::to_string(checked) + " functional evaluations");
    return r;
}

inline SuiteResult verify_product_morphism(GenerationCache& cache, int max_total = 7) {
    SuiteResult r{"product-morphism"};
    for (int np = 1; np < max_total; ++np) {
        for (int nq = 1; np + nq <= max_total; ++nq) {
            for (const GeneratedClass& gp : cache.classes(np)) {
                QSymElement mp = l_to_m(kp_via_extensions(gp.representative));
                for (const GeneratedClass& gq : cache.classes(nq)) {
                    QSymElement mq = l_to_m(kp_via_extensions(gq.representative));
                    Poset u = disjoint_union(gp.representative, gq.representative);
                    if (!(qsym_product(mp, mq) == l_to_m(kp_via_extensions(u)))) {
                        r.fail("product mismatch at sizes " + std::to_string(np) + "+" +
                               std::to_string(nq));
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

inline SuiteResult verify_hopf_pairs(GenerationCache& cache, int max_each = 4) {
    SuiteResult r{"hopf-morphism-pairs"};
    long long pairs = 0;
    for (int np = 1; np <= max_each; ++np)
        for (int nq = 1; nq <= max_each; ++nq)
            for (const GeneratedClass& gp : cache.classes(np))
                for (const GeneratedClass& gq : cache.classes(nq)) {
                    ++pairs;
                    if (!hopf_morphism_check(gp.representative, gq.representative)) {
                        r.fail("hopf morphism check failed");
                        return r;
                    }
                }
    r.note("checked " + std::to_string(pairs) + " pairs");
    return r;
}

inline SuiteResult verify_flag_routes(GenerationCache& cache, int maxn = 7, int h_maxn = 6) {
    SuiteResult r{"flag-dual-route"};
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            QSymElement via_ext = kp_via_extensions(p);
            if (!(m_to_l(kp_via_flag_vectors(p)) == via_ext)) {
                r.fail("flag-vector route disagrees with the extension route");
                return r;
            }
            // coefficient positivity and the extension-count identities
            i64 coeff_sum = 0;
            for (const auto& [key, c] : via_ext.terms()) {
                if (c < 0) {
                    r.fail("negative fundamental coefficient");
                    return r;
                }
                coeff_sum += c;
            }
            FlagVectors fv = flag_vectors(p);
            i64 exts = count_linear_extensions(p);
            if (coeff_sum != exts || fv.f.back() != exts) {
                r.fail("extension count does not match flag or coefficient totals");
                return r;
            }
            // f is the subset-sum transform of h
            for (std::uint32_t s = 0; s < fv.f.size(); ++s) {
                i64 acc = 0;
                std::uint32_t sub = s;
                for (;;) {
                    acc += fv.h[sub];
                    if (sub == 0) break;
                    sub = (sub - 1) & s;
                }
                if (acc != fv.f[s]) {
                    r.fail("h does not invert back to f");
                    return r;
                }
            }
            if (n <= h_maxn) {
                std::vector<i64> by_desc(std::size_t{1} << (n - 1), 0);
                for_each_linear_extension(
                    p, [&](const std::vector<int>&, std::uint32_t d) { ++by_desc[d]; });
                for (std::uint32_t s = 0; s < by_desc.size(); ++s)
                    if (fv.h_of(s) != by_desc[s]) {
                        r.fail("h does not count extensions by exact descent set");
                        return r;
                    }
            }
        }
    }
    return r;
}

inline SuiteResult verify_ideal_antichain(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"ideal-antichain-counts"};
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            IdealTypeTable table = ideal_type_counts(p);
            std::map<int, i64> by_size;
            i64 total = 0;
            for (const auto& [kij, count] : table) {
                by_size[kij[1]] += count;
                total += count;
            }
            std::map<int, i64> antichains;
            for (std::uint32_t mask = 0;; ++mask) {
                bool anti = true;
                for (std::uint32_t m = mask; anti && m; m &= m - 1) {
                    int x = lowest_bit(m);
                    if ((p.up_mask(x) | p.down_mask(x)) & mask & ~(1u << x)) anti = false;
                }
                if (anti) ++antichains[popcount(mask)];
                if (mask == p.full_mask()) break;
            }
            i64 anti_total = 0;
            for (auto& [size, count] : antichains) {
                anti_total += count;
                if (by_size[size] != count) {
                    r.fail("ideal maximal-element sizes do not count antichains");
                    return r;
                }
            }
            if (total != anti_total || total != ideal_lattice(p).ideal_count()) {
                r.fail("ideal and antichain totals disagree");
                return r;
            }
        }
    }
    return r;
}

inline SuiteResult verify_greene_duality(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"greene-duality"};
    for (int n = 1; n <= maxn; ++n)
        for (const GeneratedClass& g : cache.classes(n)) {
            GreeneData gd = greene_data(g.representative);  // throws if not conjugate
            if (gd.shape.weight() != n) {
                r.fail("shape weight mismatch");
                return r;
            }
        }
    return r;
}

inline SuiteResult verify_ordinal_projection(int trials = 50, unsigned seed = 101) {
    SuiteResult r{"ordinal-sum-projection"};
    std::mt19937 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int parts = 2 + static_cast<int>(rng() % 2);
        std::vector<Poset> factors;
        std::vector<int> blocks;
        int total = 0;
        for (int t = 0; t < parts; ++t) {
            int budget = 7 - total - (parts - 1 - t);
            int n = 1 + static_cast<int>(rng() % std::max(1, std::min(4, budget)));
            total += n;
            blocks.push_back(n);
            factors.push_back(verify_detail::random_natural_poset(n, rng));
        }
        Poset sum = factors[0];
        for (int t = 1; t < parts; ++t) sum = ordinal_sum(sum, factors[t]);
        QSymElement ks = kp_via_extensions(sum);
        for (int t = 0; t < parts; ++t)
            if (!(component_projection(ks, blocks, t + 1) == kp_via_extensions(factors[t]))) {
                r.fail("projection failed to recover a factor");
                return r;
            }
    }
    r.note("checked " + std::to_string(trials) + " random ordinal sums");
    return r;
}

inline SuiteResult verify_ideal_type_routes(GenerationCache& cache, int maxn = 6) {
    SuiteResult r{"ideal-type-dual-route"};
    long long triples = 0;
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            QSymElement kp = kp_via_extensions(p);
            IdealTypeTable direct = ideal_type_counts(p);
            for (int k = 0; k <= n; ++k)
                for (int i = 0; i <= k; ++i)
                    for (int j = 0; j <= n - k; ++j) {
                        ++triples;
                        if (ideal_type_count_from_kp(kp, k, i, j) !=
                            ideal_type_count(direct, k, i, j)) {
                            r.fail("functional route disagrees with direct ideal counts");
                            return r;
                        }
                    }
        }
    }
    r.note("checked " + std::to_string(triples) + " triples");
    return r;
}

inline SuiteResult verify_shape_from_support(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"shape-from-support"};
    for (int n = 1; n <= maxn; ++n)
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            if (shape_from_support(support_L(kp_via_extensions(p))) != greene_shape(p)) {
                r.fail("support shape disagrees with the direct shape");
                return r;
            }
        }
    return r;
}

inline SuiteResult verify_jump_from_support(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"jump-from-support"};
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            JumpData jd = jump_statistics(p);
            std::set<Composition> support = support_L(kp_via_extensions(p));
            int i = 0;
            for (;;) {
                Poset pi = jump_filtration(p, i);
                if (pi.size() == 0) break;
                if (support != support_L(kp_via_extensions(pi))) {
                    r.fail("stripped support disagrees with the jump filtration");
                    return r;
                }
                StrippedSupport next = jump_data_from_support(support);
                if (next.j0 != jd.jump_seq[i]) {
                    r.fail("stripped layer size disagrees with the jump sequence");
                    return r;
                }
                support = std::move(next.support);
                ++i;
            }
        }
    }
    return r;
}

// Solves the triangular system between ideal type counts and the
// fundamental coefficients on hook-framed compositions, then matches
// the actual coefficients.
inline SuiteResult verify_coefficient_reconstruction(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"coefficient-reconstruction"};
    for (int n = 2; n <= maxn; ++n) {
        // weight matrix depends only on the degree
        std::vector<Composition> comps = verify_detail::all_compositions(n);
        std::map<Composition, int> unknown_index;
        std::vector<std::map<int, i64>> rows;
        std::vector<std::array<int, 3>> triples;
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= n - k; ++j) {
                    std::map<int, i64> row;
                    for (const Composition& alpha : comps) {
                        QSymElement basis_el(Basis::L, n);
                        basis_el.add_term(alpha, 1);
                        i64 w = ideal_type_count_from_kp(basis_el, k, i, j);
                        if (w == 0) continue;
                        auto [it, fresh] =
                            unknown_index.emplace(alpha, static_cast<int>(unknown_index.size()));
                        row[it->second] = w;
                    }
                    rows.push_back(std::move(row));
                    triples.push_back({k, i, j});
                }

        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            QSymElement kp = kp_via_extensions(p);
            IdealTypeTable table = ideal_type_counts(p);
            std::vector<i64> solved(unknown_index.size(), 0), rhs;
            std::vector<bool> known(unknown_index.size(), false);
            for (size_t e = 0; e < rows.size(); ++e)
                rhs.push_back(ideal_type_count(table, triples[e][0], triples[e][1], triples[e][2]));
            bool progress = true;
            while (progress) {
                progress = false;
                for (size_t e = 0; e < rows.size(); ++e) {
                    int pending = -1;
                    i64 acc = rhs[e];
                    bool stuck = false;
                    for (const auto& [idx, w] : rows[e]) {
                        if (known[idx])
                            acc -= w * solved[idx];
                        else if (pending < 0)
                            pending = idx;
                        else {
                            stuck = true;
                            break;
                        }
                    }
                    if (stuck || pending < 0) continue;
                    i64 w = rows[e].at(pending);
                    if (acc % w != 0) {
                        r.fail("reconstruction system is not integral");
                        return r;
                    }
                    solved[pending] = acc / w;
                    known[pending] = true;
                    progress = true;
                }
            }
            for (const auto& [alpha, idx] : unknown_index) {
                if (!known[idx]) {
                    r.fail("reconstruction system lost rank at degree " + std::to_string(n));
                    return r;
                }
                if (solved[idx] != kp.coeff(alpha)) {
                    r.fail("reconstructed coefficient mismatch at degree " + std::to_string(n));
                    return r;
                }
            }
        }
    }
    return r;
}

inline SuiteResult verify_width2_operations(GenerationCache& cache, int maxn = 7) {
    SuiteResult r{"width2-and-antichain-ops"};
    long long width2_checked = 0;
    for (int n = 1; n <= maxn; ++n) {
        for (const GeneratedClass& g : cache.classes(n)) {
            const Poset& p = g.representative;
            QSymElement kp = kp_via_extensions(p);
            Partition shape = greene_shape(p);

            // below the canonical maximum antichain, against the direct route
            int width = shape.length();
            std::vector<std::uint32_t> maxanti;
            for (std::uint32_t mask = 0;; ++mask) {
                bool anti = true;
                for (std::uint32_t m = mask; anti && m; m &= m - 1) {
                    int x = lowest_bit(m);
                    if ((p.up_mask(x) | p.down_mask(x)) & mask & ~(1u << x)) anti = false;
                }
                if (anti && popcount(mask) == width) maxanti.push_back(mask);
                if (mask == p.full_mask()) break;
            }
            auto ideal_of = [&](std::uint32_t mask) {
                std::uint32_t id = mask;
                for (std::uint32_t m = mask; m; m &= m - 1) id |= p.down_mask(lowest_bit(m));
                return id;
            };
            std::uint32_t chosen = 0;
            bool found = false;
            for (std::uint32_t a : maxanti) {
                bool dominates = true;
                for (std::uint32_t b : maxanti)
                    if (b & ~ideal_of(a)) {
                        dominates = false;
                        break;
                    }
                if (dominates) {
                    chosen = a;
                    found = true;
                    break;
                }
            }
            if (!found) {
                r.fail("no dominating maximum antichain found");
                return r;
            }
            Poset below = induced_subposet(p, ideal_of(chosen) & ~chosen);
            if (!(kp_below_max_antichain(kp, shape) == kp_via_extensions(below))) {
                r.fail("below-antichain route disagrees with the direct subposet");
                return r;
            }

            // width-2 specific operations
            if (width != 2 || ordinal_sum_decomposition(p).size() != 1) continue;
            ++width2_checked;
            Poset upper = induced_subposet(p, p.full_mask() & ~p.minimal_mask());
            if (!(width2_remove_minimal(kp) == kp_via_extensions(upper))) {
                r.fail("width-2 minimal removal disagrees with the direct subposet");
                return r;
            }
            std::vector<int> chain_ideal_sizes;
            for (std::uint32_t mask = 1;; ++mask) {
                if (mask > p.full_mask()) break;
                if (!is_ideal(p, mask)) continue;
                bool chain = true;
                for (std::uint32_t a = mask; chain && a; a &= a - 1)
                    for (std::uint32_t b = a & (a - 1); chain && b; b &= b - 1) {
                        int x = lowest_bit(a), y = lowest_bit(b);
                        if (!((p.up_mask(x) >> y) & 1) && !((p.up_mask(y) >> x) & 1)) chain = false;
                    }
                if (chain) chain_ideal_sizes.push_back(popcount(mask));
            }
            int direct_b = *std::max_element(chain_ideal_sizes.begin(), chain_ideal_sizes.end());
            int direct_a = 0;
            for (int size : chain_ideal_sizes)
                if (std::count(chain_ideal_sizes.begin(), chain_ideal_sizes.end(), size) == 2 &&
                    size > direct_a)
                    direct_a = size;
            if (chain_ideal_bounds(kp) != std::pair<int, int>{direct_a, direct_b}) {
                r.fail("chain ideal bounds disagree with direct enumeration");
                return r;
            }
        }
    }
    r.note("width-2 irreducible posets checked: " + std::to_string(width2_checked));
    return r;
}

inline SuiteResult verify_canonical_invariance(GenerationCache& cache, unsigned seed = 103) {
    SuiteResult r{"canonical-invariance"};
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Poset p = verify_detail::random_natural_poset(n, rng);
        std::vector<int> perm(n);
        for (int x = 0; x < n; ++x) perm[x] = x;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (canonical_form(p) != canonical_form(apply_permutation(p, perm))) {
            r.fail("canonical keys differ across a relabeling");
            return r;
        }
    }
    for (int n = 1; n <= 5; ++n) {
        const auto& classes = cache.classes(n);
        for (size_t a = 0; a < classes.size(); ++a)
            for (size_t b = a + 1; b < classes.size(); ++b)
                if (verify_detail::brute_isomorphic(classes[a].representative,
                                                    classes[b].representative)) {
                    r.fail("distinct canonical keys on isomorphic posets");
                    return r;
                }
    }
    return r;
}

inline SuiteResult verify_twist_examples() {
    SuiteResult r{"twist-construction-examples"};
    {
        TwistResult t = construct_twisted_pair(verify_detail::example_seven_input());
        if (t.m != 1 || !(t.p == verify_detail::example_seven_p()) ||
            !(t.q == verify_detail::example_seven_q()))
            r.fail("seven-element construction did not reproduce the known pair");
        else if (!(kp_via_extensions(t.p) == kp_via_extensions(t.q)))
            r.fail("seven-element pair is not K-equivalent");
        else if (canonical_form(t.p) == canonical_form(t.q))
            r.fail("seven-element pair is isomorphic");
    }
    {
        TwistResult t = construct_twisted_pair(verify_detail::example_eight_input());
        if (t.m != 1) r.fail("eight-element construction found the wrong orbit step");
        if (!(kp_via_extensions(t.p) == kp_via_extensions(t.q)))
            r.fail("eight-element pair is not K-equivalent");
        if (canonical_form(t.p) == canonical_form(t.q)) r.fail("eight-element pair is isomorphic");
        if (greene_shape(t.p) != Partition({2, 2, 2, 2}))
            r.fail("eight-element pair has the wrong shape");
    }
    return r;
}

inline SuiteResult verify_shape_families(const std::vector<Partition>& shapes) {
    SuiteResult r{"shape-family-pairs"};
    for (const Partition& shape : shapes) {
        auto [p, q] = equivalent_pair_of_shape(shape);
        if (greene_shape(p) != shape || greene_shape(q) != shape) {
            r.fail("family member has the wrong shape");
            return r;
        }
        if (!(kp_via_extensions(p) == kp_via_extensions(q))) {
            r.fail("family pair is not K-equivalent");
            return r;
        }
        if (isomorphic(p, q)) {
            r.fail("family pair is isomorphic");
            return r;
        }
        std::string parts;
        for (int v : shape.parts()) parts += (parts.empty() ? "" : ",") + std::to_string(v);
        r.note("shape (" + parts + "): pair verified");
    }
    return r;
}

inline SuiteResult verify_generation_counts(GenerationCache& cache) {
    SuiteResult r{"generation-counts"};
    const std::vector<long long> small{1, 2, 5, 16, 63};
    for (int n = 1; n <= 5; ++n)
        if (static_cast<long long>(cache.classes(n).size()) != small[n - 1]) {
            r.fail("class count mismatch at " + std::to_string(n) + " elements");
            return r;
        }
    // regression values recorded at the first verified run
    if (static_cast<long long>(cache.classes(6).size()) != 318) r.fail("class count changed at 6");
    if (static_cast<long long>(cache.classes(7).size()) != 2045) r.fail("class count changed at 7");
    return r;
}

inline SuiteResult verify_smallest_collision(GenerationCache& cache) {
    SuiteResult r{"smallest-collision"};
    for (int n = 1; n <= 6; ++n) {
        EquivalenceReport report =
            k_equivalence_report(cache.classes(n), n, cache.threads());
        i64 size_sum = 0;
        for (i64 s : report.class_sizes) size_sum += s;
        if (size_sum != report.total_classes) {
            r.fail("class sizes do not partition the classes");
            return r;
        }
        if (!report.nontrivial.empty()) {
            r.fail("unexpected collision below seven elements");
            return r;
        }
    }
    EquivalenceReport report7 = k_equivalence_report(cache.classes(7), 7, cache.threads());
    std::vector<CanonicalKey> expected{canonical_form(verify_detail::example_seven_p()),
                                       canonical_form(verify_detail::example_seven_q())};
    std::sort(expected.begin(), expected.end());
    bool found = false;
    for (const KEquivalenceClass& cls : report7.nontrivial)
        if (cls.keys == expected) found = true;
    if (!found) {
        r.fail("the known seven-element pair is not a collision class");
        return r;
    }
    r.note("seven-element nontrivial classes: " + std::to_string(report7.nontrivial.size()));
    return r;
}

inline SuiteResult verify_width2_audit(GenerationCache& cache, int maxn = 8) {
    SuiteResult r{"width2-uniqueness-audit"};
    for (int n = 1; n <= maxn; ++n) {
        AuditResult a = injectivity_audit(cache.classes(n), AuditMode::K, is_width2_shape,
                                          cache.threads());
        if (!a.collisions.empty()) {
            r.fail("collision among width-2 posets at " + std::to_string(n) + " elements");
            return r;
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(a.classes_checked) + " classes");
    }
    return r;
}

inline SuiteResult verify_hook_audit(GenerationCache& cache, int maxn = 8) {
    SuiteResult r{"hook-support-audit"};
    for (int n = 1; n <= maxn; ++n) {
        AuditResult a = injectivity_audit(cache.classes(n), AuditMode::Support, is_hook_shape,
                                          cache.threads());
        if (!a.collisions.empty()) {
            r.fail("support collision among hook-shaped posets at " + std::to_string(n) +
                   " elements");
            return r;
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(a.classes_checked) + " classes");
    }
    // the thirteen-element hook pair: supports must differ, witnessed by a
    // jump pair present in one and absent in the other
    Poset p = verify_detail::example_thirteen(false);
    Poset q = verify_detail::example_thirteen(true);
    if (!is_hook_shape(greene_shape(p)) || greene_shape(p) != greene_shape(q)) {
        r.fail("thirteen-element pair does not have matching hook shapes");
        return r;
    }
    JumpData jp = jump_statistics(p), jq = jump_statistics(q);
    bool p_has = jp.jump_pairs.count({1, 3}) && jp.jump_pairs.at({1, 3}) > 0;
    bool q_has = jq.jump_pairs.count({1, 3}) && jq.jump_pairs.at({1, 3}) > 0;
    if (!p_has || q_has) {
        r.fail("jump-pair witness (1,3) did not separate the thirteen-element pair");
        return r;
    }
    r.note("thirteen-element pair separated by jump pair (1,3)");
    return r;
}

inline SuiteResult verify_nearhook_audit(GenerationCache& cache, int maxn = 8) {
    SuiteResult r{"nearly-hook-uniqueness-audit"};
    for (int n = 1; n <= maxn; ++n) {
        AuditResult a = injectivity_audit(cache.classes(n), AuditMode::K, is_near_hook_shape,
                                          cache.threads());
        if (!a.collisions.empty()) {
            r.fail("collision among nearly hook shaped posets at " + std::to_string(n) +
                   " elements");
            return r;
        }
        r.note("n=" + std::to_string(n) + ": " + std::to_string(a.classes_checked) + " classes");
    }
    return r;
}

inline SuiteResult verify_example_pairs() {
    SuiteResult r{"example-pair-reproduction"};
    {
        Poset p = verify_detail::example_seven_p(), q = verify_detail::example_seven_q();
        if (qsym_signature(kp_via_extensions(p)) != qsym_signature(kp_via_extensions(q)))
            r.fail("seven-element expansions differ");
        if (canonical_form(p) == canonical_form(q)) r.fail("seven-element pair is isomorphic");
        if (greene_shape(p) != Partition({3, 3, 1}) || greene_shape(q) != Partition({3, 3, 1}))
            r.fail("seven-element pair has the wrong shape");
    }
    {
        Poset p = Poset::from_cover_relations(8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                                                  {4, 7}, {4, 8}, {1, 6}, {3, 5}});
        Poset q = Poset::from_cover_relations(8, {{1, 5}, {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                                                  {4, 7}, {4, 8}, {2, 7}, {3, 5}});
        if (qsym_signature(kp_via_extensions(p)) != qsym_signature(kp_via_extensions(q)))
            r.fail("eight-element expansions differ");
        if (canonical_form(p) == canonical_form(q)) r.fail("eight-element pair is isomorphic");
        if (greene_shape(p) != Partition({2, 2, 2, 2}) || greene_shape(q) != Partition({2, 2, 2, 2}))
            r.fail("eight-element pair has the wrong shape");
    }
    return r;
}

inline std::vector<SuiteResult> run_all_suites(GenerationCache& cache) {
    std::vector<SuiteResult> out;
    out.push_back(verify_composition_core());
    out.push_back(verify_basis_roundtrip());
    out.push_back(verify_coalgebra());
    out.push_back(verify_example_pairs());
    out.push_back(verify_extremal_indicator(cache));
    out.push_back(verify_product_morphism(cache));
    out.push_back(verify_hopf_pairs(cache));
    out.push_back(verify_flag_routes(cache));
    out.push_back(verify_ideal_antichain(cache));
    out.push_back(verify_greene_duality(cache));
    out.push_back(verify_ordinal_projection());
    out.push_back(verify_ideal_type_routes(cache));
    out.push_back(verify_shape_from_support(cache));
    out.push_back(verify_jump_from_support(cache));
    out.push_back(verify_coefficient_reconstruction(cache));
    out.push_back(verify_width2_operations(cache));
    out.push_back(verify_canonical_invariance(cache));
    out.push_back(verify_twist_examples());
    out.push_back(verify_shape_families({Partition({3, 3, 1}), Partition({4, 3, 1}),
                                         Partition({3, 3, 2}), Partition({4, 4, 1, 1}),
                                         Partition({2, 2, 2, 2}), Partition({3, 2, 2, 2, 1})}));
    out.push_back(verify_generation_counts(cache));
    out.push_back(verify_smallest_collision(cache));
    out.push_back(verify_width2_audit(cache));
    out.push_back(verify_hook_audit(cache));
    out.push_back(verify_nearhook_audit(cache));
    return out;
}

}  // namespace pposet
