#pragma once

#include <cstdint>

#include "topoidx/checked.hpp"
#include "topoidx/errors.hpp"
#include "topoidx/hosoya.hpp"

namespace topoidx {

// O(1) index formulas for k-sun graphs, plus a constant-time distance
// classifier for their vertex pairs. All arithmetic is checked; a k whose
// formula value leaves the 64-bit range raises OverflowError.

namespace detail {

inline void require_sun_k(std::int64_t k) {
    if (k < 3) throw InvalidParameterError("k must be >= 3");
}

}  // namespace detail

// W(S_k) = k(4k - 5).
inline std::int64_t wiener_sun(std::int64_t k) {
    detail::require_sun_k(k);
    return checked_mul(k, checked_sub(checked_mul(4, k), 5));
}

// W_P(S_k) = k(k - 3)/2; k(k - 3) is even for every integer k.
inline std::int64_t wiener_polarity_sun(std::int64_t k) {
    detail::require_sun_k(k);
    return exact_half(checked_mul(k, k - 3));
}

// H(S_k, t) = k(k+3)/2 * t + k(k-1) * t^2 + k(k-3)/2 * t^3.
// The cubic coefficient vanishes exactly at k = 3, where the diameter is 2.
inline DistancePolynomial hosoya_sun(std::int64_t k) {
    detail::require_sun_k(k);
    return normalized({exact_half(checked_mul(k, checked_add(k, 3))),
                       checked_mul(k, k - 1),
                       exact_half(checked_mul(k, k - 3))});
}

// Totals of the vertex transmissions over the two sides of a k-sun.
struct TransmissionSplit {
    std::int64_t independent_total = 0;  // sum over s_1..s_k: k(5k - 7)
    std::int64_t clique_total = 0;       // sum over c_1..c_k: k(3k - 3)
};

inline TransmissionSplit transmission_split_sun(std::int64_t k) {
    detail::require_sun_k(k);
    return {checked_mul(k, checked_sub(checked_mul(5, k), 7)),
            checked_mul(k, checked_sub(checked_mul(3, k), 3))};
}

enum class SunVertexKind { Clique, Independent };

// A vertex of S_k named by side and 1-based position.
struct SunVertex {
    SunVertexKind kind;
    std::int64_t index;  // 1..k

    static SunVertex clique(std::int64_t i) { return {SunVertexKind::Clique, i}; }
    static SunVertex independent(std::int64_t i) { return {SunVertexKind::Independent, i}; }
    friend bool operator==(const SunVertex& a, const SunVertex& b) = default;
};

// Distance between two vertices of S_k by case analysis, not traversal:
//   clique-clique pairs are adjacent; s_i touches c_i and c_{i+1} and is at
//   distance 2 from every other clique vertex; s-pairs are at distance 2
//   when cyclically adjacent and 3 otherwise. At k = 3 every distinct
//   s-pair is cyclically adjacent, so distance 3 never occurs there.
inline int sun_distance(std::int64_t k, const SunVertex& a, const SunVertex& b) {
    detail::require_sun_k(k);
    for (const SunVertex& v : {a, b})
        if (v.index < 1 || v.index > k)
            throw InvalidParameterError("sun vertex index " + std::to_string(v.index) +
                                        " out of range [1, " + std::to_string(k) + "]");
    if (a == b) return 0;
    if (a.kind == SunVertexKind::Clique && b.kind == SunVertexKind::Clique) return 1;
    if (a.kind != b.kind) {
        const std::int64_t i = (a.kind == SunVertexKind::Independent ? a : b).index;
        const std::int64_t j = (a.kind == SunVertexKind::Clique ? a : b).index;
        return (j == i || j == i % k + 1) ? 1 : 2;
    }
    const std::int64_t gap = a.index > b.index ? a.index - b.index : b.index - a.index;
    return (gap == 1 || gap == k - 1) ? 2 : 3;
}

}  // namespace topoidx
