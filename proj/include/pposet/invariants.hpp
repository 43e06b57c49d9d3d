#pragma once

#include "pposet/poset.hpp"

namespace pposet {

// Everything in this header is computed purely from a generating
// function in the fundamental basis; the poset-side counterparts in
// poset.hpp serve as independent oracles for all of it.

namespace detail {

inline FunctionalSpec max_or_counit(int i) {
    return i == 0 ? FunctionalSpec::counit() : FunctionalSpec::max_count(i);
}
inline FunctionalSpec min_or_counit(int j) {
    return j == 0 ? FunctionalSpec::counit() : FunctionalSpec::min_count(j);
}

}  // namespace detail

// Number of k-element ideals with i maximal elements whose complement
// has j minimal elements, read off the generating function alone.
inline i64 ideal_type_count_from_kp(const QSymElement& x, int k, int i, int j) {
    int n = x.degree();
    if (k < 0 || k > n) throw std::invalid_argument("ideal_type_count_from_kp: k out of range");
    if (i < 0 || j < 0) throw std::invalid_argument("ideal_type_count_from_kp: negative index");
    QSymTensor t = coproduct_graded(x, k);
    return tensor_pair_functional(detail::max_or_counit(i), detail::min_or_counit(j), t);
}

inline IdealTypeTable ideal_type_table_from_kp(const QSymElement& x) {
    IdealTypeTable out;
    int n = x.degree();
    for (int k = 0; k <= n; ++k) {
        QSymTensor t = coproduct_graded(x, k);
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j <= n - k; ++j) {
                i64 v = tensor_pair_functional(detail::max_or_counit(i), detail::min_or_counit(j), t);
                if (v != 0) out[{k, i, j}] = v;
            }
        }
    }
    return out;
}

// Generating function of the complement of the (k, i)-ideal. Certified
// only when that ideal is unique; otherwise the returned element is a
// formal combination.
struct RemovalResult {
    QSymElement element;
    bool certified;
};

inline RemovalResult remove_unique_ideal(const QSymElement& x, int k, int i) {
    int n = x.degree();
    if (k < 0 || k > n) throw std::invalid_argument("remove_unique_ideal: k out of range");
    i64 count = 0;
    for (int j = 0; j <= n - k; ++j)
        count = checked_add(count, ideal_type_count_from_kp(x, k, i, j));
    QSymTensor t = coproduct_graded(x, k);
    return {contract_left(detail::max_or_counit(i), t), count == 1};
}

// Recovers the Greene shape from the fundamental support: the maximal
// union of i antichains has max{ i + |D(a)| : a in support, at most i
// decreasing runs } elements.
inline Partition shape_from_support(const std::set<Composition>& support) {
    if (support.empty()) throw std::invalid_argument("shape_from_support: empty support");
    if (support.size() == 1 && support.begin()->empty()) return {};
    int n = support.begin()->weight();
    for (const Composition& a : support)
        if (a.empty() || a.weight() != n)
            throw std::invalid_argument("shape_from_support: mixed degrees in support");

    std::vector<int> conj;
    int prev = 0;
    for (int i = 1; i <= n && prev < n; ++i) {
        i64 best = -1;
        for (const Composition& a : support) {
            RunStatistics rs = run_statistics(a, i);
            if (rs.runs <= i && rs.li > best) best = rs.li;
        }
        if (best <= prev || best > n)
            throw std::invalid_argument("shape_from_support: support is not a poset support");
        conj.push_back(static_cast<int>(best) - prev);
        prev = static_cast<int>(best);
    }
    if (prev != n) throw std::invalid_argument("shape_from_support: support is not a poset support");
    for (size_t t = 1; t < conj.size(); ++t)
        if (conj[t] > conj[t - 1])
            throw std::invalid_argument("shape_from_support: support is not a poset support");
    return conjugate_partition(Partition(std::move(conj)));
}

// Strips the minimal layer from a support: j0 is the largest m for
// which some support composition starts with m-1 descents; the stripped
// set is the support of the poset with those minimal elements removed.
struct StrippedSupport {
    int j0;
    std::set<Composition> support;
};

inline StrippedSupport jump_data_from_support(const std::set<Composition>& support) {
    if (support.empty()) throw std::invalid_argument("jump_data_from_support: empty support");
    int j0 = 1;
    for (const Composition& a : support) {
        int lead = 0;
        for (int part : a.parts()) {
            if (part != 1) break;
            ++lead;
        }
        // a = ones(m-1) . (rest) realizes m-1 leading descents when the
        // first m-1 parts are 1; the whole composition ones(n) has n-1.
        int m = lead == a.length() ? a.length() : lead + 1;
        if (m > j0) j0 = m;
    }
    StrippedSupport out;
    out.j0 = j0;
    for (const Composition& a : support) {
        const std::vector<int>& parts = a.parts();
        int lead = 0;
        while (lead < a.length() && parts[lead] == 1) ++lead;
        if (lead < j0 - 1) continue;
        if (a.weight() == j0 && lead == a.length()) {
            out.support.insert(Composition{});
            continue;
        }
        if (lead == j0 - 1 && parts[j0 - 1] >= 2) {
            std::vector<int> rest;
            rest.push_back(parts[j0 - 1] - 1);
            rest.insert(rest.end(), parts.begin() + j0, parts.end());
            out.support.insert(Composition(std::move(rest)));
        }
    }
    return out;
}

// For an irreducible width-2 poset (two minimal elements), the
// generating function of the subposet of non-minimal elements.
inline QSymElement width2_remove_minimal(const QSymElement& x) {
    int n = x.degree();
    if (n < 2) throw std::invalid_argument("width2_remove_minimal: degree must be at least 2");
    if (extremal_functional(Extremal::Min, 2, x) != 1)
        throw std::invalid_argument("width2_remove_minimal: input does not have exactly 2 minimal elements");
    return contract_left(FunctionalSpec::max_count(2), coproduct_graded(x, 2));
}

namespace detail {

inline i64 rank_or_zero(const QSymElement& x, int k) {
    if (k < 0 || k > x.degree()) return 0;
    return rank_count(x, k);
}

}  // namespace detail

// Sizes (a <= b) of the two maximal chain ideals of an irreducible
// width-2 poset, located through rank differences against the poset
// with its minimal elements removed.
inline std::pair<int, int> chain_ideal_bounds(const QSymElement& x) {
    int n = x.degree();
    QSymElement upper = width2_remove_minimal(x);
    int a = 0, b = -1;
    for (int k = 1; k <= n; ++k) {
        if (detail::rank_or_zero(x, k) - detail::rank_or_zero(upper, k - 2) == 2) a = k;
        if (b < 0 && detail::rank_or_zero(x, k + 1) - detail::rank_or_zero(upper, k - 1) == 0)
            b = k;
    }
    if (a == 0 || b < 0 || a > b)
        throw std::invalid_argument("chain_ideal_bounds: input is not an irreducible width-2 generating function");
    return {a, b};
}

// Generating function of the part of the poset strictly below its
// canonical maximum antichain A: the ideal generated by A has the
// largest size m among ideals whose maximal-element count equals the
// width, and the part below A has m - width elements.
inline QSymElement kp_below_max_antichain(const QSymElement& x, const Partition& shape) {
    int n = x.degree();
    if (shape.weight() != n)
        throw std::invalid_argument("kp_below_max_antichain: shape weight does not match degree");
    int width = shape.length();
    int m = -1;
    for (int k = n; k >= 0 && m < 0; --k)
        for (int j = 0; j <= n - k; ++j)
            if (ideal_type_count_from_kp(x, k, width, j) > 0) {
                m = k;
                break;
            }
    if (m < width) throw std::invalid_argument("kp_below_max_antichain: no antichain of the stated width");
    return contract_right(FunctionalSpec::min_count(width), coproduct_graded(x, m - width));
}

// Hopf compatibility of the generating-function map on a pair:
// comultiplicativity of the first argument at every bidegree,
// multiplicativity on the disjoint union, and the character identity.
inline bool hopf_morphism_check(const Poset& p, const Poset& q) {
    QSymElement kp = kp_via_extensions(p);
    QSymElement kq = kp_via_extensions(q);
    int n = p.size();
    for (int k = 0; k <= n; ++k) {
        QSymTensor lhs(k, n - k);
        std::uint32_t full = p.full_mask();
        for (std::uint32_t mask = 0;; ++mask) {
            if (is_ideal(p, mask) && popcount(mask) == k) {
                QSymElement left = kp_via_extensions(induced_subposet(p, mask));
                QSymElement right = kp_via_extensions(induced_subposet(p, full & ~mask));
                for (const auto& [ka, ca] : left.terms())
                    for (const auto& [kb, cb] : right.terms())
                        lhs.add_term(ka, kb, checked_mul(ca, cb));
            }
            if (mask == full) break;
        }
        if (!(lhs == coproduct_graded(kp, k))) return false;
    }
    QSymElement prod = qsym_product(l_to_m(kp), l_to_m(kq));
    if (!(prod == l_to_m(kp_via_extensions(disjoint_union(p, q))))) return false;
    if (apply_functional(FunctionalSpec::zeta(), kp) != 1) return false;
    return true;
}

}  // namespace pposet
