#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pposet/composition.hpp"

namespace pposet {

enum class Basis { M, L };

// A homogeneous quasisymmetric function of a fixed degree, stored as a
// sparse map from compositions of that degree to exact coefficients.
// Zero coefficients are never stored.
class QSymElement {
public:
    QSymElement(Basis basis, int degree) : basis_(basis), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static QSymElement unit(Basis basis) {
        QSymElement x(basis, 0);
        x.add_term(Composition{}, 1);
        return x;
    }

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Composition, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    i64 coeff(const Composition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Composition& key, i64 c) {
        if (key.weight() != degree_)
            throw std::invalid_argument("term key weight does not match element degree");
        if (c == 0) return;
        i64& slot = terms_[key];
        slot = checked_add(slot, c);
        if (slot == 0) terms_.erase(key);
    }

    QSymElement& operator+=(const QSymElement& other) {
        if (other.basis_ != basis_) throw basis_error("basis mismatch in addition");
        if (other.degree_ != degree_)
            throw std::invalid_argument("degree mismatch in addition");
        for (const auto& [key, c] : other.terms_) add_term(key, c);
        return *this;
    }

    QSymElement operator-() const {
        QSymElement out(basis_, degree_);
        for (const auto& [key, c] : terms_) out.add_term(key, -c);
        return out;
    }

    friend bool operator==(const QSymElement& a, const QSymElement& b) {
        return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    Basis basis_;
    int degree_;
    std::map<Composition, i64> terms_;
};

// A bihomogeneous tensor of two quasisymmetric functions, keyed by
// composition pairs of fixed degrees (k, n-k).
class QSymTensor {
public:
    QSymTensor(int left_degree, int right_degree)
        : left_degree_(left_degree), right_degree_(right_degree) {}

    int left_degree() const { return left_degree_; }
    int right_degree() const { return right_degree_; }
    const std::map<std::pair<Composition, Composition>, i64>& terms() const { return terms_; }

    void add_term(const Composition& a, const Composition& b, i64 c) {
        if (a.weight() != left_degree_ || b.weight() != right_degree_)
            throw std::invalid_argument("tensor key degrees do not match");
        if (c == 0) return;
        i64& slot = terms_[{a, b}];
        slot = checked_add(slot, c);
        if (slot == 0) terms_.erase({a, b});
    }

    friend bool operator==(const QSymTensor& a, const QSymTensor& b) {
        return a.left_degree_ == b.left_degree_ && a.right_degree_ == b.right_degree_ &&
               a.terms_ == b.terms_;
    }

private:
    int left_degree_, right_degree_;
    std::map<std::pair<Composition, Composition>, i64> terms_;
};

// L_a = sum of M_b over refinements b of a.
inline QSymElement l_to_m(const QSymElement& x) {
    if (x.basis() != Basis::L) throw basis_error("l_to_m: input must be in the L basis");
    QSymElement out(Basis::M, x.degree());
    for (const auto& [key, c] : x.terms()) {
        if (key.empty()) {
            out.add_term(key, c);
            continue;
        }
        for (const Composition& r : refinements(key)) out.add_term(r, c);
    }
    return out;
}

// Inclusion-exclusion over refinements: M_a = sum (-1)^(extra parts) L_b.
inline QSymElement m_to_l(const QSymElement& x) {
    if (x.basis() != Basis::M) throw basis_error("m_to_l: input must be in the M basis");
    QSymElement out(Basis::L, x.degree());
    for (const auto& [key, c] : x.terms()) {
        if (key.empty()) {
            out.add_term(key, c);
            continue;
        }
        for (const Composition& r : refinements(key)) {
            i64 sign = ((r.length() - key.length()) % 2 == 0) ? 1 : -1;
            out.add_term(r, checked_mul(sign, c));
        }
    }
    return out;
}

inline QSymElement to_basis(const QSymElement& x, Basis b) {
    if (x.basis() == b) return x;
    return b == Basis::M ? l_to_m(x) : m_to_l(x);
}

namespace detail {

template <class Sink>
inline void quasi_shuffle(const std::vector<int>& a, size_t ia, const std::vector<int>& b,
                          size_t ib, std::vector<int>& prefix, Sink&& sink) {
    if (ia == a.size() && ib == b.size()) {
        sink(prefix);
        return;
    }
    if (ia < a.size()) {
        prefix.push_back(a[ia]);
        quasi_shuffle(a, ia + 1, b, ib, prefix, sink);
        prefix.pop_back();
    }
    if (ib < b.size()) {
        prefix.push_back(b[ib]);
        quasi_shuffle(a, ia, b, ib + 1, prefix, sink);
        prefix.pop_back();
    }
    if (ia < a.size() && ib < b.size()) {
        prefix.push_back(a[ia] + b[ib]);
        quasi_shuffle(a, ia + 1, b, ib + 1, prefix, sink);
        prefix.pop_back();
    }
}

}  // namespace detail

// Bilinear quasi-shuffle (overlapping shuffle) of monomial terms.
inline QSymElement qsym_product(const QSymElement& x, const QSymElement& y) {
    if (x.basis() != Basis::M || y.basis() != Basis::M)
        throw basis_error("qsym_product: both operands must be in the M basis");
    QSymElement out(Basis::M, x.degree() + y.degree());
    std::vector<int> prefix;
    for (const auto& [ka, ca] : x.terms()) {
        for (const auto& [kb, cb] : y.terms()) {
            i64 c = checked_mul(ca, cb);
            detail::quasi_shuffle(ka.parts(), 0, kb.parts(), 0, prefix,
                                  [&](const std::vector<int>& parts) {
                                      out.add_term(Composition(parts), c);
                                  });
        }
    }
    return out;
}

// Graded coproduct on the fundamental basis. For 0 < k < n each L_a has
// exactly one splitting of bidegree (k, n-k): at a descent it is the
// concatenation split, inside a part it is the near-concatenation split.
inline QSymTensor coproduct_graded(const QSymElement& x, int k) {
    if (x.basis() != Basis::L) throw basis_error("coproduct_graded: input must be in the L basis");
    int n = x.degree();
    if (k < 0 || k > n) throw std::invalid_argument("coproduct_graded: k out of range");
    QSymTensor out(k, n - k);
    for (const auto& [key, c] : x.terms()) {
        if (k == 0) {
            out.add_term(Composition{}, key, c);
            continue;
        }
        if (k == n) {
            out.add_term(key, Composition{}, c);
            continue;
        }
        const std::vector<int>& parts = key.parts();
        int s = 0;
        for (size_t t = 0; t < parts.size(); ++t) {
            if (s + parts[t] == k) {
                std::vector<int> left(parts.begin(), parts.begin() + t + 1);
                std::vector<int> right(parts.begin() + t + 1, parts.end());
                out.add_term(Composition(std::move(left)), Composition(std::move(right)), c);
                break;
            }
            if (s < k && k < s + parts[t]) {
                std::vector<int> left(parts.begin(), parts.begin() + t);
                left.push_back(k - s);
                std::vector<int> right{s + parts[t] - k};
                right.insert(right.end(), parts.begin() + t + 1, parts.end());
                out.add_term(Composition(std::move(left)), Composition(std::move(right)), c);
                break;
            }
            s += parts[t];
        }
    }
    return out;
}

enum class Extremal { Max, Min };

// Linear functionals on QSym_n that evaluate to 1 on the generating
// function of a poset with exactly `index` maximal (Max) or minimal
// (Min) elements, and to 0 otherwise. Max is supported on hook-tail
// compositions (n-k, 1^k); Min on their reversals (1^k, n-k).
struct FunctionalSpec {
    enum class Kind { MaxCount, MinCount, Counit, Zeta };
    Kind kind;
    int index = 0;

    static FunctionalSpec max_count(int i) { return {Kind::MaxCount, i}; }
    static FunctionalSpec min_count(int i) { return {Kind::MinCount, i}; }
    static FunctionalSpec counit() { return {Kind::Counit, 0}; }
    static FunctionalSpec zeta() { return {Kind::Zeta, 0}; }
};

namespace detail {

inline i64 hook_tail_value(const Composition& key, int degree, int index) {
    // nonzero only on (degree-k, 1^k); then (-1)^(k-index+1) * C(k, index-1)
    const std::vector<int>& p = key.parts();
    int k = key.length() - 1;
    for (size_t t = 1; t < p.size(); ++t)
        if (p[t] != 1) return 0;
    if (p.empty() || p[0] != degree - k) return 0;
    i64 v = binomial(k, index - 1);
    return ((k - index + 1) % 2 == 0) ? v : -v;
}

inline i64 hook_head_value(const Composition& key, int degree, int index) {
    const std::vector<int>& p = key.parts();
    int k = key.length() - 1;
    for (size_t t = 0; t + 1 < p.size(); ++t)
        if (p[t] != 1) return 0;
    if (p.empty() || p.back() != degree - k) return 0;
    i64 v = binomial(k, index - 1);
    return ((k - index + 1) % 2 == 0) ? v : -v;
}

// Value of a functional on a single fundamental-basis key of the given degree.
inline i64 functional_on_key(const FunctionalSpec& f, const Composition& key, int degree) {
    switch (f.kind) {
        case FunctionalSpec::Kind::Counit:
            return key.empty() ? 1 : 0;
        case FunctionalSpec::Kind::Zeta:
            return key.empty() || key.length() == 1 ? 1 : 0;
        case FunctionalSpec::Kind::MaxCount:
            return key.empty() ? 0 : hook_tail_value(key, degree, f.index);
        case FunctionalSpec::Kind::MinCount:
            return key.empty() ? 0 : hook_head_value(key, degree, f.index);
    }
    return 0;
}

}  // namespace detail

inline i64 apply_functional(const FunctionalSpec& f, const QSymElement& x) {
    if (x.basis() != Basis::L) throw basis_error("apply_functional: input must be in the L basis");
    i64 total = 0;
    for (const auto& [key, c] : x.terms())
        total = checked_add(total, checked_mul(c, detail::functional_on_key(f, key, x.degree())));
    return total;
}

inline i64 extremal_functional(Extremal mode, int index, const QSymElement& x) {
    if (index < 1) throw std::invalid_argument("extremal_functional: index must be positive");
    FunctionalSpec f = mode == Extremal::Max ? FunctionalSpec::max_count(index)
                                             : FunctionalSpec::min_count(index);
    return apply_functional(f, x);
}

inline i64 tensor_pair_functional(const FunctionalSpec& left, const FunctionalSpec& right,
                                  const QSymTensor& t) {
    i64 total = 0;
    for (const auto& [key, c] : t.terms()) {
        i64 lv = detail::functional_on_key(left, key.first, t.left_degree());
        if (lv == 0) continue;
        i64 rv = detail::functional_on_key(right, key.second, t.right_degree());
        total = checked_add(total, checked_mul(c, checked_mul(lv, rv)));
    }
    return total;
}

// Applies (functional x id) to a tensor, producing the right factor.
inline QSymElement contract_left(const FunctionalSpec& f, const QSymTensor& t) {
    QSymElement out(Basis::L, t.right_degree());
    for (const auto& [key, c] : t.terms()) {
        i64 v = detail::functional_on_key(f, key.first, t.left_degree());
        if (v != 0) out.add_term(key.second, checked_mul(c, v));
    }
    return out;
}

inline QSymElement contract_right(const FunctionalSpec& f, const QSymTensor& t) {
    QSymElement out(Basis::L, t.left_degree());
    for (const auto& [key, c] : t.terms()) {
        i64 v = detail::functional_on_key(f, key.second, t.right_degree());
        if (v != 0) out.add_term(key.first, checked_mul(c, v));
    }
    return out;
}

inline std::set<Composition> support_L(const QSymElement& x) {
    QSymElement l = to_basis(x, Basis::L);
    std::set<Composition> out;
    for (const auto& [key, c] : l.terms()) out.insert(key);
    return out;
}

// Number of k-element order ideals when x is a poset generating
// function: the M-coefficient of (k, n-k), with the trivial boundary
// ranks equal to 1.
inline i64 rank_count(const QSymElement& x, int k) {
    int n = x.degree();
    if (k < 0 || k > n) throw std::invalid_argument("rank_count: k out of range");
    if (k == 0 || k == n) return 1;
    QSymElement m = to_basis(x, Basis::M);
    return m.coeff(Composition({k, n - k}));
}

// Projection onto the i-th factor of an ordinal sum with the given
// block sizes: keeps L_b exactly when every descent lies strictly
// inside block i's window.
inline QSymElement component_projection(const QSymElement& x, const std::vector<int>& block_sizes,
                                        int i) {
    if (x.basis() != Basis::L)
        throw basis_error("component_projection: input must be in the L basis");
    int n = 0;
    for (int b : block_sizes) {
        if (b <= 0) throw std::invalid_argument("component_projection: block sizes must be positive");
        n += b;
    }
    if (n != x.degree())
        throw std::invalid_argument("component_projection: block sizes do not sum to the degree");
    if (i < 1 || i > static_cast<int>(block_sizes.size()))
        throw std::invalid_argument("component_projection: block index out of range");
    int left = 0;
    for (int t = 0; t + 1 < i; ++t) left += block_sizes[t];
    int width = block_sizes[i - 1];

    QSymElement out(Basis::L, width);
    for (const auto& [key, c] : x.terms()) {
        std::vector<int> inner;
        bool keep = true;
        for (int d : descent_set(key)) {
            if (d <= left || d >= left + width) {
                keep = false;
                break;
            }
            inner.push_back(d - left);
        }
        if (keep) out.add_term(composition_of_set(std::move(inner), width), c);
    }
    return out;
}

// Stable byte encoding of an element, used wherever exact K-equality is
// decided (class grouping keys on these bytes).
inline std::string qsym_signature(const QSymElement& x) {
    QSymElement l = to_basis(x, Basis::L);
    std::string s = "L" + std::to_string(l.degree()) + ":";
    for (const auto& [key, c] : l.terms()) {
        for (int p : key.parts()) s += std::to_string(p) + ",";
        s += "=" + std::to_string(c) + ";";
    }
    return s;
}

inline std::string support_signature(const QSymElement& x) {
    std::string s = "S" + std::to_string(x.degree()) + ":";
    for (const Composition& key : support_L(x)) {
        for (int p : key.parts()) s += std::to_string(p) + ",";
        s += ";";
    }
    return s;
}

}  // namespace pposet
