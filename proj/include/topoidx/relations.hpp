#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topoidx/checked.hpp"
#include "topoidx/indices.hpp"

namespace topoidx {

// Degree-based identities and bounds tying W and W_P to the Zagreb index M1.
// These are evaluated and reported, never asserted: direct computation shows
// the M1-based equalities fail on graphs with triangles (sun graphs
// included), so each report carries both sides and a status.

enum class RelationStatus { EqualityHolds, InequalityHolds, Violated, NotApplicable };

inline const char* to_string(RelationStatus s) {
    switch (s) {
    case RelationStatus::EqualityHolds: return "EqualityHolds";
    case RelationStatus::InequalityHolds: return "InequalityHolds";
    case RelationStatus::Violated: return "Violated";
    case RelationStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

struct RelationReport {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;  // signed: the M1-based bounds go negative on dense graphs
    RelationStatus status = RelationStatus::NotApplicable;
    Vertex n = 0;
    std::int64_t m = 0;
    int diameter = 0;
};

namespace detail {

inline std::int64_t half_m1(const IndexReport& r) {
    // M1 = sum of deg^2 has the parity of sum of deg = 2m, so it is even.
    return exact_half(r.m1);
}

inline std::int64_t pairs(const IndexReport& r) {
    return checked_mul(r.n, static_cast<std::int64_t>(r.n) - 1) / 2;
}

inline RelationReport make_report(const char* name, const IndexReport& r, std::int64_t lhs,
                                  std::int64_t rhs, RelationStatus status) {
    return {name, lhs, rhs, status, r.n, r.m, r.diameter};
}

inline RelationStatus equality_status(std::int64_t lhs, std::int64_t rhs, int diam) {
    if (diam > 3) return RelationStatus::NotApplicable;
    return lhs == rhs ? RelationStatus::EqualityHolds : RelationStatus::Violated;
}

// W_P <= n(n-1)/2 - M1/2, tight at diameter 3.
inline RelationReport polarity_bound(const IndexReport& r) {
    const std::int64_t rhs = checked_sub(pairs(r), half_m1(r));
    const std::int64_t lhs = r.wiener_polarity;
    RelationStatus status = RelationStatus::Violated;
    if (lhs == rhs) status = RelationStatus::EqualityHolds;
    else if (lhs < rhs) status = RelationStatus::InequalityHolds;
    return make_report("polarity_bound", r, lhs, rhs, status);
}

// W = 3n(n-1)/2 - M1/2 - m, claimed for diameter <= 3.
inline RelationReport corollary_wiener(const IndexReport& r) {
    const std::int64_t rhs =
        checked_sub(checked_sub(checked_mul(3, pairs(r)), half_m1(r)), r.m);
    return make_report("corollary_wiener", r, r.wiener, rhs,
                       equality_status(r.wiener, rhs, r.diameter));
}

// W = n(n-1) + W_P - m, an identity whenever the diameter is <= 3.
inline RelationReport proposition_wiener(const IndexReport& r) {
    const std::int64_t rhs =
        checked_sub(checked_add(checked_mul(2, pairs(r)), r.wiener_polarity), r.m);
    return make_report("proposition_wiener", r, r.wiener, rhs,
                       equality_status(r.wiener, rhs, r.diameter));
}

// W = sum over d of d * W_d, with the two sides computed by different
// aggregation routes (direct pair sum vs. distribution).
inline RelationReport wd_decomposition(const IndexReport& r, std::int64_t wiener_direct) {
    const RelationStatus status = wiener_direct == r.wiener ? RelationStatus::EqualityHolds
                                                            : RelationStatus::Violated;
    return make_report("wd_decomposition", r, wiener_direct, r.wiener, status);
}

}  // namespace detail

inline RelationReport check_polarity_bound(const Graph& g) {
    return detail::polarity_bound(full_report(g));
}

inline RelationReport check_corollary_wiener(const Graph& g) {
    return detail::corollary_wiener(full_report(g));
}

inline RelationReport check_proposition(const Graph& g) {
    return detail::proposition_wiener(full_report(g));
}

// All relation reports in a fixed order, from an already-computed report
// plus an independently aggregated Wiener value for the decomposition row.
inline std::vector<RelationReport> relation_reports(const IndexReport& r,
                                                    std::int64_t wiener_direct) {
    return {detail::polarity_bound(r), detail::corollary_wiener(r),
            detail::proposition_wiener(r), detail::wd_decomposition(r, wiener_direct)};
}

inline std::vector<RelationReport> check_all(const Graph& g, unsigned threads = 1) {
    return relation_reports(full_report(g, threads), wiener_pairwise(g));
}

}  // namespace topoidx
