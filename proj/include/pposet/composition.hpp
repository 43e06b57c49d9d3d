#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <utility>
#include <vector>

#include "pposet/common.hpp"

namespace pposet {

// A composition of n: an ordered list of positive parts. The empty
// composition is the degree-0 unit key. Compositions order
// lexicographically on their part lists.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
            weight_ += p;
        }
    }

    static Composition ones(int k) {
        return k == 0 ? Composition{} : Composition(std::vector<int>(k, 1));
    }

    // single(0) is the empty composition; convenient for flank absorption.
    static Composition single(int a) {
        return a == 0 ? Composition{} : Composition({a});
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Strictly increasing proper partial sums of the parts.
inline std::vector<int> descent_set(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("descent_set: composition must be nonempty");
    std::vector<int> d;
    int s = 0;
    for (size_t t = 0; t + 1 < a.parts().size(); ++t) {
        s += a.parts()[t];
        d.push_back(s);
    }
    return d;
}

inline std::uint32_t descent_mask(const Composition& a) {
    std::uint32_t m = 0;
    int s = 0;
    for (size_t t = 0; t + 1 < a.parts().size(); ++t) {
        s += a.parts()[t];
        m |= 1u << (s - 1);
    }
    return m;
}

// Inverse of descent_set: the composition of n whose descent set is s.
inline Composition composition_of_set(std::vector<int> s, int n) {
    if (n <= 0) throw std::invalid_argument("composition_of_set: n must be positive");
    std::sort(s.begin(), s.end());
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        if (x <= prev || x >= n)
            throw std::invalid_argument("composition_of_set: subset element outside 1..n-1");
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

inline Composition composition_of_mask(std::uint32_t mask, int n) {
    std::vector<int> s;
    for (std::uint32_t m = mask; m; m &= m - 1) s.push_back(lowest_bit(m) + 1);
    return composition_of_set(std::move(s), n);
}

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

// Near-concatenation: merge the junction parts. Empty operands absorb.
inline Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

inline std::pair<Composition, Composition> concatenate_pair(const Composition& a,
                                                            const Composition& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("concatenate_pair: operands must be nonempty");
    return {concat(a, b), near_concat(a, b)};
}

// Column heights of the ribbon of a: the unique (a_1,...,a_l) with
// ones(a_1) (.) ... (.) ones(a_l) = a. These are the parts of the
// composition complementary to a's descent set.
inline std::vector<int> near_concat_decomposition(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("near_concat_decomposition: nonempty input required");
    int n = a.weight();
    std::vector<int> d = descent_set(a);
    std::vector<int> comp;
    std::vector<bool> in_d(n, false);
    for (int x : d) in_d[x] = true;
    for (int x = 1; x < n; ++x)
        if (!in_d[x]) comp.push_back(x);
    return composition_of_set(std::move(comp), n).parts();
}

// All compositions whose adjacent-part merges produce a, i.e. whose
// descent set contains D(a). Sorted lexicographically.
inline std::vector<Composition> refinements(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("refinements: nonempty input required");
    int n = a.weight();
    std::uint32_t d = descent_mask(a);
    std::uint32_t all = n >= 2 ? ((1u << (n - 1)) - 1) : 0u;
    std::uint32_t free = all & ~d;
    std::vector<Composition> out;
    std::uint32_t sub = free;
    for (;;) {
        out.push_back(composition_of_mask(d | sub, n));
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// B(a) counts descents not preceded by a descent (decreasing runs of
// length >= 2); L_i(a) = i + |D(a)|.
struct RunStatistics {
    int runs;
    i64 li;
};

inline RunStatistics run_statistics(const Composition& a, int i) {
    if (a.empty()) throw std::invalid_argument("run_statistics: nonempty input required");
    if (i < 1) throw std::invalid_argument("run_statistics: index must be positive");
    std::uint32_t d = descent_mask(a);
    int runs = popcount(d & ~(d << 1));
    return {runs, static_cast<i64>(i) + popcount(d)};
}

// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t t = 0; t < parts_.size(); ++t) {
            if (parts_[t] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (t > 0 && parts_[t] > parts_[t - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            weight_ += parts_[t];
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Containment of Young diagrams.
    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (int t = 0; t < other.length(); ++t)
            if (parts_[t] < other.parts_[t]) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

inline Partition conjugate_partition(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(p.parts()[0], 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++out[c];
    return Partition(std::move(out));
}

}  // namespace pposet
