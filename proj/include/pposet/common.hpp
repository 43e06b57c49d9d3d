#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pposet {

using i64 = std::int64_t;

// All coefficient arithmetic is exact 64-bit with overflow checks.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

inline i64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (int t = 1; t <= k; ++t)
        r = checked_mul(r, n - k + t) / t;
    return r;
}

inline int popcount(std::uint32_t m) { return std::popcount(m); }
inline int lowest_bit(std::uint32_t m) { return std::countr_zero(m); }

// Thrown when an operation is asked to exceed its supported problem size.
struct size_limit_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a relation set is not a strict partial order.
struct poset_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an element is in the wrong basis for an operation.
struct basis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace pposet
