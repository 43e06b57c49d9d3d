#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pposet/qsym.hpp"

namespace pposet {

// A finite strict partial order on labels 1..n, stored transitively
// closed as per-element bitmasks (bit y of up_mask(x) means x < y in the
// order, 0-based). Immutable after construction. n is capped at 16 by
// the mask width.
class Poset {
public:
    static constexpr int kMaxElements = 16;

    Poset() = default;

    // covers are 1-based (a, b) pairs meaning a < b. The closure is
    // computed by repeated squaring; cycles (including a == b) are
    // rejected.
    static Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers) {
        check_size(n);
        std::vector<std::uint32_t> up(n, 0);
        for (auto [a, b] : covers) {
            if (a < 1 || a > n || b < 1 || b > n)
                throw poset_error("cover label out of range 1..n");
            if (a == b) throw poset_error("relation creates a cycle");
            up[a - 1] |= 1u << (b - 1);
        }
        close_transitively(up);
        for (int x = 0; x < n; ++x)
            if (up[x] & (1u << x)) throw poset_error("relation creates a cycle");
        return Poset(n, std::move(up));
    }

    // down[x] must already be the full strict down-set of x (transitively
    // closed, irreflexive); used where that holds by construction.
    static Poset from_down_masks(int n, const std::vector<std::uint32_t>& down) {
        check_size(n);
        std::vector<std::uint32_t> up(n, 0);
        for (int x = 0; x < n; ++x)
            for (std::uint32_t m = down[x]; m; m &= m - 1) up[lowest_bit(m)] |= 1u << x;
        return Poset(n, std::move(up));
    }

    int size() const { return n_; }
    bool naturally_labeled() const { return natural_; }

    // 0-based strict relation masks.
    std::uint32_t up_mask(int x) const { return up_[x]; }
    std::uint32_t down_mask(int x) const { return down_[x]; }
    std::uint32_t cover_up_mask(int x) const { return cover_up_[x]; }
    std::uint32_t cover_down_mask(int x) const { return cover_down_[x]; }
    std::uint32_t full_mask() const { return n_ == 0 ? 0 : (1u << n_) - 1; }

    // 1-based strict comparison.
    bool less(int a, int b) const { return (up_[a - 1] >> (b - 1)) & 1; }

    // 1-based cover pairs, sorted.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            for (std::uint32_t m = cover_up_[x]; m; m &= m - 1)
                out.push_back({x + 1, lowest_bit(m) + 1});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint32_t minimal_mask() const {
        std::uint32_t m = 0;
        for (int x = 0; x < n_; ++x)
            if (down_[x] == 0) m |= 1u << x;
        return m;
    }

    std::uint32_t maximal_mask() const {
        std::uint32_t m = 0;
        for (int x = 0; x < n_; ++x)
            if (up_[x] == 0) m |= 1u << x;
        return m;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.up_ == b.up_;
    }

private:
    Poset(int n, std::vector<std::uint32_t> up) : n_(n), up_(std::move(up)) {
        down_.assign(n_, 0);
        for (int x = 0; x < n_; ++x)
            for (std::uint32_t m = up_[x]; m; m &= m - 1) down_[lowest_bit(m)] |= 1u << x;
        cover_up_.assign(n_, 0);
        cover_down_.assign(n_, 0);
        for (int x = 0; x < n_; ++x) {
            std::uint32_t strict_between = 0;
            for (std::uint32_t m = up_[x]; m; m &= m - 1) strict_between |= up_[lowest_bit(m)];
            cover_up_[x] = up_[x] & ~strict_between;
            for (std::uint32_t m = cover_up_[x]; m; m &= m - 1)
                cover_down_[lowest_bit(m)] |= 1u << x;
        }
        natural_ = true;
        for (int x = 0; x < n_; ++x)
            if (up_[x] & ((1u << (x + 1)) - 1)) natural_ = false;
    }

    static void check_size(int n) {
        if (n < 0 || n > kMaxElements)
            throw size_limit_error("poset size must be between 0 and 16");
    }

    static void close_transitively(std::vector<std::uint32_t>& up) {
        for (;;) {
            bool changed = false;
            for (size_t x = 0; x < up.size(); ++x) {
                std::uint32_t reach = up[x];
                for (std::uint32_t m = up[x]; m; m &= m - 1) reach |= up[lowest_bit(m)];
                if (reach != up[x]) {
                    up[x] = reach;
                    changed = true;
                }
            }
            if (!changed) return;
        }
    }

    int n_ = 0;
    std::vector<std::uint32_t> up_, down_, cover_up_, cover_down_;
    bool natural_ = true;
};

// Relabels by perm (0-based, perm[old] = new).
inline Poset apply_permutation(const Poset& p, const std::vector<int>& perm) {
    std::vector<std::uint32_t> down(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        for (std::uint32_t m = p.down_mask(x); m; m &= m - 1)
            down[perm[x]] |= 1u << perm[lowest_bit(m)];
    return Poset::from_down_masks(p.size(), down);
}

// Induced subposet on the elements of mask, labels compressed in
// increasing order (so a natural labeling stays natural).
inline Poset induced_subposet(const Poset& p, std::uint32_t mask) {
    std::vector<int> index(p.size(), -1);
    int m = 0;
    for (int x = 0; x < p.size(); ++x)
        if ((mask >> x) & 1) index[x] = m++;
    std::vector<std::uint32_t> down(m, 0);
    for (int x = 0; x < p.size(); ++x) {
        if (index[x] < 0) continue;
        for (std::uint32_t mm = p.down_mask(x) & mask; mm; mm &= mm - 1)
            down[index[x]] |= 1u << index[lowest_bit(mm)];
    }
    return Poset::from_down_masks(m, down);
}

// Relabels along the lexicographically smallest linear extension; the
// result is naturally labeled and isomorphic to the input.
inline Poset natural_relabel(const Poset& p) {
    std::vector<int> perm(p.size());
    std::uint32_t placed = 0;
    for (int t = 0; t < p.size(); ++t) {
        for (int x = 0; x < p.size(); ++x) {
            if (((placed >> x) & 1) == 0 && (p.down_mask(x) & ~placed) == 0) {
                perm[x] = t;
                placed |= 1u << x;
                break;
            }
        }
    }
    return apply_permutation(p, perm);
}

// Enumerates linear extensions by backtracking over currently minimal
// elements in increasing label order, maintaining the descent set
// incrementally. The callback receives the listing as 0-based labels
// and the descent positions as a bitmask (bit t-1 set when positions t
// and t+1 form a descent).
template <class F>
inline void for_each_linear_extension(const Poset& p, F&& f, bool allow_unnatural = false) {
    if (!p.naturally_labeled() && !allow_unnatural)
        throw poset_error("linear extensions require a naturally labeled poset");
    int n = p.size();
    std::vector<int> perm(n);
    auto rec = [&](auto&& self, std::uint32_t placed, int depth, std::uint32_t desc) -> void {
        if (depth == n) {
            f(static_cast<const std::vector<int>&>(perm), desc);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if ((placed >> x) & 1) continue;
            if (p.down_mask(x) & ~placed) continue;
            perm[depth] = x;
            std::uint32_t d = desc;
            if (depth > 0 && perm[depth - 1] > x) d |= 1u << (depth - 1);
            self(self, placed | (1u << x), depth + 1, d);
        }
    };
    rec(rec, 0, 0, 0);
}

inline i64 count_linear_extensions(const Poset& p, bool allow_unnatural = false) {
    i64 c = 0;
    for_each_linear_extension(
        p, [&](const std::vector<int>&, std::uint32_t) { c = checked_add(c, 1); },
        allow_unnatural);
    return c;
}

// The generating function in the fundamental basis: one L term per
// linear extension, keyed by the descent composition.
inline QSymElement kp_via_extensions(const Poset& p, bool allow_unnatural = false) {
    int n = p.size();
    if (n == 0) return QSymElement::unit(Basis::L);
    std::vector<i64> counts(std::size_t{1} << (n - 1), 0);
    for_each_linear_extension(
        p, [&](const std::vector<int>&, std::uint32_t desc) { ++counts[desc]; },
        allow_unnatural);
    QSymElement out(Basis::L, n);
    for (std::uint32_t mask = 0; mask < counts.size(); ++mask)
        if (counts[mask]) out.add_term(composition_of_mask(mask, n), counts[mask]);
    return out;
}

// The distributive lattice of order ideals, grouped by rank (= ideal
// cardinality); masks within a rank are sorted.
struct IdealLattice {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> by_rank;

    i64 ideal_count() const {
        i64 c = 0;
        for (const auto& r : by_rank) c += static_cast<i64>(r.size());
        return c;
    }
};

inline bool is_ideal(const Poset& p, std::uint32_t mask) {
    for (std::uint32_t m = mask; m; m &= m - 1)
        if (p.down_mask(lowest_bit(m)) & ~mask) return false;
    return true;
}

inline IdealLattice ideal_lattice(const Poset& p) {
    IdealLattice out;
    out.n = p.size();
    out.by_rank.assign(p.size() + 1, {});
    std::uint32_t full = p.full_mask();
    for (std::uint32_t mask = 0;; ++mask) {
        if (is_ideal(p, mask)) out.by_rank[popcount(mask)].push_back(mask);
        if (mask == full) break;
    }
    return out;
}

// Ideals covering `mask` in the lattice (single-element insertions).
inline std::vector<std::uint32_t> ideal_cover_targets(const Poset& p, std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (int x = 0; x < p.size(); ++x) {
        if ((mask >> x) & 1) continue;
        if ((p.down_mask(x) & ~mask) == 0) out.push_back(mask | (1u << x));
    }
    return out;
}

// Flag vectors of the ideal lattice, indexed by subset masks of [n-1]
// (bit b stands for rank b+1). f(S) counts the maximal chains of the
// rank-selected subposet; h is its inclusion-exclusion transform.
struct FlagVectors {
    int n = 0;
    std::vector<i64> f, h;

    i64 f_of(std::uint32_t s) const { return f[s]; }
    i64 h_of(std::uint32_t s) const { return h[s]; }
};

inline FlagVectors flag_vectors(const Poset& p) {
    int n = p.size();
    IdealLattice lat = ideal_lattice(p);
    std::size_t nsub = n >= 1 ? (std::size_t{1} << (n - 1)) : 1;
    FlagVectors out;
    out.n = n;
    out.f.assign(nsub, 0);
    out.h.assign(nsub, 0);
    for (std::uint32_t s = 0; s < nsub; ++s) {
        std::vector<int> ranks;
        for (std::uint32_t m = s; m; m &= m - 1) ranks.push_back(lowest_bit(m) + 1);
        if (ranks.empty()) {
            out.f[s] = 1;
            continue;
        }
        std::vector<i64> cur(lat.by_rank[ranks[0]].size(), 1);
        for (size_t t = 1; t < ranks.size(); ++t) {
            const auto& lo = lat.by_rank[ranks[t - 1]];
            const auto& hi = lat.by_rank[ranks[t]];
            std::vector<i64> next(hi.size(), 0);
            for (size_t j = 0; j < hi.size(); ++j)
                for (size_t i = 0; i < lo.size(); ++i)
                    if ((lo[i] & ~hi[j]) == 0) next[j] = checked_add(next[j], cur[i]);
            cur = std::move(next);
        }
        for (i64 v : cur) out.f[s] = checked_add(out.f[s], v);
    }
    for (std::uint32_t s = 0; s < nsub; ++s) {
        i64 acc = 0;
        std::uint32_t sub = s;
        for (;;) {
            i64 sign = (popcount(s) - popcount(sub)) % 2 == 0 ? 1 : -1;
            acc = checked_add(acc, checked_mul(sign, out.f[sub]));
            if (sub == 0) break;
            sub = (sub - 1) & s;
        }
        out.h[s] = acc;
    }
    return out;
}

// The generating function via flag vectors: sum of f(D(a)) M_a.
inline QSymElement kp_via_flag_vectors(const Poset& p) {
    int n = p.size();
    if (n == 0) return QSymElement::unit(Basis::M);
    FlagVectors fv = flag_vectors(p);
    QSymElement out(Basis::M, n);
    for (std::uint32_t s = 0; s < fv.f.size(); ++s)
        if (fv.f[s]) out.add_term(composition_of_mask(s, n), fv.f[s]);
    return out;
}

// Counts of k-element ideals with i maximal elements whose complement
// has j minimal elements, keyed by (k, i, j).
using IdealTypeTable = std::map<std::array<int, 3>, i64>;

inline IdealTypeTable ideal_type_counts(const Poset& p) {
    IdealTypeTable out;
    std::uint32_t full = p.full_mask();
    for (std::uint32_t mask = 0;; ++mask) {
        if (is_ideal(p, mask)) {
            int k = popcount(mask);
            int maxed = 0, mined = 0;
            std::uint32_t comp = full & ~mask;
            for (std::uint32_t m = mask; m; m &= m - 1)
                if ((p.up_mask(lowest_bit(m)) & mask) == 0) ++maxed;
            for (std::uint32_t m = comp; m; m &= m - 1)
                if ((p.down_mask(lowest_bit(m)) & comp) == 0) ++mined;
            ++out[{k, maxed, mined}];
        }
        if (mask == full) break;
    }
    return out;
}

inline i64 ideal_type_count(const IdealTypeTable& t, int k, int i, int j) {
    auto it = t.find({k, i, j});
    return it == t.end() ? 0 : it->second;
}

// Greene data computed by brute force over subsets: a_i is the largest
// subset whose induced longest chain has at most i elements (a union of
// i antichains), c_i dually via the longest induced antichain. The two
// difference sequences must be conjugate partitions.
struct GreeneData {
    Partition shape;             // from chain-union differences
    std::vector<int> max_antichain_unions;  // a_1, a_2, ...
    std::vector<int> max_chain_unions;      // c_1, c_2, ...
};

inline GreeneData greene_data(const Poset& p) {
    int n = p.size();
    GreeneData out;
    if (n == 0) return out;
    std::size_t nmask = std::size_t{1} << n;

    std::vector<int> topo(n);
    for (int x = 0; x < n; ++x) topo[x] = x;
    std::sort(topo.begin(), topo.end(),
              [&](int a, int b) { return popcount(p.down_mask(a)) < popcount(p.down_mask(b)); });

    std::vector<std::uint8_t> longest_chain(nmask, 0), longest_antichain(nmask, 0);
    std::vector<std::uint8_t> chain_end(n);
    for (std::size_t mask = 1; mask < nmask; ++mask) {
        int best = 0;
        for (int x : topo) {
            if (((mask >> x) & 1) == 0) continue;
            int e = 1;
            for (std::uint32_t m = p.down_mask(x) & mask; m; m &= m - 1) {
                int v = 1 + chain_end[lowest_bit(m)];
                if (v > e) e = v;
            }
            chain_end[x] = static_cast<std::uint8_t>(e);
            if (e > best) best = e;
        }
        longest_chain[mask] = static_cast<std::uint8_t>(best);

        int x = lowest_bit(static_cast<std::uint32_t>(mask));
        std::uint32_t comparable = p.up_mask(x) | p.down_mask(x) | (1u << x);
        int skip = longest_antichain[mask & (mask - 1)];
        int take = 1 + longest_antichain[mask & ~comparable];
        longest_antichain[mask] = static_cast<std::uint8_t>(skip > take ? skip : take);
    }

    std::vector<int> amax(n + 1, 0), cmax(n + 1, 0);
    for (std::size_t mask = 0; mask < nmask; ++mask) {
        int pc = popcount(static_cast<std::uint32_t>(mask));
        if (pc > amax[longest_chain[mask]]) amax[longest_chain[mask]] = pc;
        if (pc > cmax[longest_antichain[mask]]) cmax[longest_antichain[mask]] = pc;
    }
    for (int i = 1; i <= n; ++i) {
        if (amax[i] < amax[i - 1]) amax[i] = amax[i - 1];
        if (cmax[i] < cmax[i - 1]) cmax[i] = cmax[i - 1];
    }

    std::vector<int> lambda, lambda_conj;
    for (int i = 1; i <= n; ++i) {
        if (cmax[i] > cmax[i - 1]) lambda.push_back(cmax[i] - cmax[i - 1]);
        if (amax[i] > amax[i - 1]) lambda_conj.push_back(amax[i] - amax[i - 1]);
        out.max_antichain_unions.push_back(amax[i]);
        out.max_chain_unions.push_back(cmax[i]);
    }
    out.shape = Partition(lambda);
    if (conjugate_partition(out.shape) != Partition(lambda_conj))
        throw std::logic_error("chain and antichain sequences are not conjugate");
    return out;
}

inline Partition greene_shape(const Poset& p) { return greene_data(p).shape; }

inline int poset_width(const Poset& p) {
    return greene_shape(p).length();
}

// Jump of an element: the longest saturated chain of covers down to a
// minimal element; up-jump dually. The jump sequence counts elements by
// jump value.
struct JumpData {
    std::vector<int> jump, upjump;          // per element, 0-based index
    std::vector<i64> jump_seq, upjump_seq;  // counts by value
    std::map<std::pair<int, int>, i64> jump_pairs;
    std::vector<int> ideal_size, filter_size;  // principal, per element
};

inline JumpData jump_statistics(const Poset& p) {
    int n = p.size();
    JumpData out;
    out.jump.assign(n, 0);
    out.upjump.assign(n, 0);
    std::vector<int> topo(n);
    for (int x = 0; x < n; ++x) topo[x] = x;
    std::sort(topo.begin(), topo.end(),
              [&](int a, int b) { return popcount(p.down_mask(a)) < popcount(p.down_mask(b)); });
    for (int x : topo)
        for (std::uint32_t m = p.cover_down_mask(x); m; m &= m - 1) {
            int v = 1 + out.jump[lowest_bit(m)];
            if (v > out.jump[x]) out.jump[x] = v;
        }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (std::uint32_t m = p.cover_up_mask(*it); m; m &= m - 1) {
            int v = 1 + out.upjump[lowest_bit(m)];
            if (v > out.upjump[*it]) out.upjump[*it] = v;
        }
    int jmax = 0, umax = 0;
    for (int x = 0; x < n; ++x) {
        if (out.jump[x] > jmax) jmax = out.jump[x];
        if (out.upjump[x] > umax) umax = out.upjump[x];
    }
    out.jump_seq.assign(n ? jmax + 1 : 0, 0);
    out.upjump_seq.assign(n ? umax + 1 : 0, 0);
    for (int x = 0; x < n; ++x) {
        ++out.jump_seq[out.jump[x]];
        ++out.upjump_seq[out.upjump[x]];
        ++out.jump_pairs[{out.jump[x], out.upjump[x]}];
        out.ideal_size.push_back(popcount(p.down_mask(x)) + 1);
        out.filter_size.push_back(popcount(p.up_mask(x)) + 1);
    }
    return out;
}

// Induced subposet of elements with jump >= i, labels compressed.
inline Poset jump_filtration(const Poset& p, int i) {
    if (i < 0) throw std::invalid_argument("jump_filtration: index must be nonnegative");
    if (i == 0) return p;
    JumpData jd = jump_statistics(p);
    std::uint32_t mask = 0;
    for (int x = 0; x < p.size(); ++x)
        if (jd.jump[x] >= i) mask |= 1u << x;
    return induced_subposet(p, mask);
}

// Splits at every rank where the ideal lattice has a unique element;
// the factors are irreducible and their ordinal sum reproduces the
// input up to isomorphism.
inline std::vector<Poset> ordinal_sum_decomposition(const Poset& p) {
    std::vector<Poset> out;
    if (p.size() == 0) return out;
    IdealLattice lat = ideal_lattice(p);
    std::uint32_t prev = 0;
    for (int k = 1; k <= p.size(); ++k) {
        if (lat.by_rank[k].size() == 1) {
            out.push_back(induced_subposet(p, lat.by_rank[k][0] & ~prev));
            prev = lat.by_rank[k][0];
        }
    }
    return out;
}

// Ordinal sum: everything in p below everything in q, q's labels
// shifted by |p|. Preserves natural labeling.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
    int n = p.size() + q.size();
    if (n > Poset::kMaxElements) throw size_limit_error("composed poset too large");
    std::vector<std::uint32_t> down(n, 0);
    std::uint32_t pfull = p.full_mask();
    for (int x = 0; x < p.size(); ++x) down[x] = p.down_mask(x);
    for (int x = 0; x < q.size(); ++x)
        down[p.size() + x] = (q.down_mask(x) << p.size()) | pfull;
    return Poset::from_down_masks(n, down);
}

inline Poset disjoint_union(const Poset& p, const Poset& q) {
    int n = p.size() + q.size();
    if (n > Poset::kMaxElements) throw size_limit_error("composed poset too large");
    std::vector<std::uint32_t> down(n, 0);
    for (int x = 0; x < p.size(); ++x) down[x] = p.down_mask(x);
    for (int x = 0; x < q.size(); ++x) down[p.size() + x] = q.down_mask(x) << p.size();
    return Poset::from_down_masks(n, down);
}

// Order-reversal, relabeled x -> n+1-x so a natural labeling stays
// natural.
inline Poset dual(const Poset& p) {
    int n = p.size();
    std::vector<std::uint32_t> down(n, 0);
    for (int x = 0; x < n; ++x)
        for (std::uint32_t m = p.up_mask(x); m; m &= m - 1)
            down[n - 1 - x] |= 1u << (n - 1 - lowest_bit(m));
    return Poset::from_down_masks(n, down);
}

}  // namespace pposet
