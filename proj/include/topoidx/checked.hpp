#pragma once

#include <cstdint>

#include "topoidx/errors.hpp"

namespace topoidx {

// Checked 64-bit arithmetic. Closed forms and index accumulators go through
// these so an out-of-range input fails loudly instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
    return r;
}

// Exact halving; the quantities halved here (degree sums, k(k-3), ...) are
// even by parity arguments, so an odd value means a bug upstream.
inline std::int64_t exact_half(std::int64_t a) {
    if (a % 2 != 0) throw Error("internal: expected an even value, got " + std::to_string(a));
    return a / 2;
}

}  // namespace topoidx
