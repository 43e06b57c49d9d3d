#pragma once

#include <string>

#include "pposet/poset.hpp"

namespace pposet {

// Canonical byte key identifying an isomorphism class: equal keys iff
// isomorphic posets. Layout: one size byte, then the relation matrix of
// the canonically relabeled poset, row-major bit-packed.
using CanonicalKey = std::string;

namespace detail {

// Iteratively refined isomorphism-invariant coloring. Cells are ordered
// by their invariant values, so the ordering itself is invariant.
inline std::vector<std::vector<int>> invariant_cells(const Poset& p) {
    int n = p.size();
    JumpData jd = jump_statistics(p);
    std::vector<int> color(n);
    {
        std::map<std::array<int, 4>, int> order;
        for (int x = 0; x < n; ++x)
            order[{popcount(p.down_mask(x)), popcount(p.up_mask(x)), jd.jump[x], jd.upjump[x]}] = 0;
        int next = 0;
        for (auto& [key, id] : order) id = next++;
        for (int x = 0; x < n; ++x)
            color[x] = order[{popcount(p.down_mask(x)), popcount(p.up_mask(x)), jd.jump[x],
                              jd.upjump[x]}];
    }
    for (int round = 0; round < n; ++round) {
        using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::vector<Sig> sig(n);
        for (int x = 0; x < n; ++x) {
            std::vector<int> lo, hi;
            for (std::uint32_t m = p.down_mask(x); m; m &= m - 1) lo.push_back(color[lowest_bit(m)]);
            for (std::uint32_t m = p.up_mask(x); m; m &= m - 1) hi.push_back(color[lowest_bit(m)]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            sig[x] = {color[x], std::move(lo), std::move(hi)};
        }
        std::map<Sig, int> order;
        for (int x = 0; x < n; ++x) order[sig[x]] = 0;
        int next = 0;
        for (auto& [key, id] : order) id = next++;
        bool changed = false;
        for (int x = 0; x < n; ++x) {
            int c = order[sig[x]];
            if (c != color[x]) changed = true;
            color[x] = c;
        }
        if (!changed) break;
    }
    int ncells = 0;
    for (int x = 0; x < n; ++x) ncells = std::max(ncells, color[x] + 1);
    std::vector<std::vector<int>> cells(ncells);
    for (int x = 0; x < n; ++x) cells[color[x]].push_back(x);
    return cells;
}

// Branch-and-bound search for the minimum relation encoding over all
// cell-respecting relabelings. The encoding at position t packs the
// relation bits against all earlier positions, so prefixes are
// comparable during the search.
struct CanonicalSearch {
    const Poset& p;
    std::vector<int> cell_of_pos;        // position -> cell index
    std::vector<std::vector<int>> cells;
    std::vector<std::uint32_t> used_in_cell;
    std::vector<int> order, best_order;  // position -> element
    std::vector<std::uint32_t> cur, best;
    bool have_best = false;

    explicit CanonicalSearch(const Poset& poset) : p(poset) {
        cells = invariant_cells(p);
        used_in_cell.assign(cells.size(), 0);
        for (size_t c = 0; c < cells.size(); ++c)
            for (size_t t = 0; t < cells[c].size(); ++t) cell_of_pos.push_back(static_cast<int>(c));
        order.assign(p.size(), -1);
        best_order.assign(p.size(), -1);
        cur.assign(p.size(), 0);
        best.assign(p.size(), 0);
    }

    std::uint32_t chunk_at(int depth, int x) const {
        std::uint32_t bits = 0;
        for (int s = 0; s < depth; ++s) {
            int y = order[s];
            bits |= static_cast<std::uint32_t>((p.up_mask(x) >> y) & 1) << (2 * s);
            bits |= static_cast<std::uint32_t>((p.up_mask(y) >> x) & 1) << (2 * s + 1);
        }
        return bits;
    }

    // state: 0 = prefix equals best, -1 = strictly smaller. Returns true
    // if this subtree replaced best (the caller's prefix then equals the
    // new best's prefix).
    bool dfs(int depth, int state) {
        if (depth == p.size()) {
            if (!have_best || state < 0) {
                best = cur;
                best_order = order;
                have_best = true;
                return true;
            }
            return false;
        }
        int c = cell_of_pos[depth];
        bool replaced = false;
        for (size_t t = 0; t < cells[c].size(); ++t) {
            if ((used_in_cell[c] >> t) & 1) continue;
            int x = cells[c][t];
            std::uint32_t bits = chunk_at(depth, x);
            int st = state;
            if (have_best && st == 0) {
                if (bits > best[depth]) continue;
                if (bits < best[depth]) st = -1;
            }
            cur[depth] = bits;
            order[depth] = x;
            used_in_cell[c] |= 1u << t;
            if (dfs(depth + 1, st)) {
                replaced = true;
                state = 0;
                st = 0;
            }
            used_in_cell[c] &= ~(1u << t);
        }
        return replaced;
    }
};

}  // namespace detail

inline CanonicalKey canonical_form(const Poset& p) {
    if (p.size() > 10) throw size_limit_error("canonical_form supports up to 10 elements");
    detail::CanonicalSearch search(p);
    search.dfs(0, 0);
    int n = p.size();
    std::string key(1 + (n * n + 7) / 8, '\0');
    key[0] = static_cast<char>(n);
    for (int i = 0; i < n; ++i) {
        int x = search.best_order[i];
        for (int j = 0; j < n; ++j) {
            int y = search.best_order[j];
            if ((p.up_mask(x) >> y) & 1) key[1 + (i * n + j) / 8] |= static_cast<char>(1 << ((i * n + j) % 8));
        }
    }
    return key;
}

// All relation-preserving bijections, as 1-based image vectors
// (perm[a-1] is the image of label a). Sorted.
inline std::vector<std::vector<int>> automorphisms(const Poset& p) {
    if (p.size() > 10) throw size_limit_error("automorphisms supports up to 10 elements");
    int n = p.size();
    auto cells = detail::invariant_cells(p);
    std::vector<int> cell_id(n);
    for (size_t c = 0; c < cells.size(); ++c)
        for (int x : cells[c]) cell_id[x] = static_cast<int>(c);
    std::vector<int> image(n, -1);
    std::uint32_t used = 0;
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            std::vector<int> perm(n);
            for (int a = 0; a < n; ++a) perm[a] = image[a] + 1;
            out.push_back(std::move(perm));
            return;
        }
        for (int y : cells[cell_id[x]]) {
            if ((used >> y) & 1) continue;
            bool ok = true;
            for (int a = 0; a < x && ok; ++a) {
                if (((p.up_mask(x) >> a) & 1) != ((p.up_mask(y) >> image[a]) & 1)) ok = false;
                if (((p.up_mask(a) >> x) & 1) != ((p.up_mask(image[a]) >> y) & 1)) ok = false;
            }
            if (!ok) continue;
            image[x] = y;
            used |= 1u << y;
            self(self, x + 1);
            used &= ~(1u << y);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Isomorphism test by color-constrained backtracking; works above the
// canonical_form size limit.
inline bool isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    int n = p.size();
    if (n == 0) return true;
    auto pc = detail::invariant_cells(p);
    auto qc = detail::invariant_cells(q);
    if (pc.size() != qc.size()) return false;
    for (size_t c = 0; c < pc.size(); ++c)
        if (pc[c].size() != qc[c].size()) return false;
    std::vector<int> cell_id(n);
    for (size_t c = 0; c < pc.size(); ++c)
        for (int x : pc[c]) cell_id[x] = static_cast<int>(c);
    std::vector<int> image(n, -1);
    std::uint32_t used = 0;
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == n) return true;
        for (int y : qc[cell_id[x]]) {
            if ((used >> y) & 1) continue;
            bool ok = true;
            for (int a = 0; a < x && ok; ++a) {
                if (((p.up_mask(x) >> a) & 1) != ((q.up_mask(y) >> image[a]) & 1)) ok = false;
                if (((p.up_mask(a) >> x) & 1) != ((q.up_mask(image[a]) >> y) & 1)) ok = false;
            }
            if (!ok) continue;
            image[x] = y;
            used |= 1u << y;
            if (self(self, x + 1)) return true;
            used &= ~(1u << y);
        }
        return false;
    };
    return rec(rec, 0);
}

inline std::string key_to_hex(const CanonicalKey& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

}  // namespace pposet
