#pragma once

#include <cstdint>
#include <vector>

#include "topoidx/checked.hpp"
#include "topoidx/distance.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

// All indices are exact integers; this module has no floating point.
struct IndexReport {
    Vertex n = 0;
    std::int64_t m = 0;
    int diameter = 0;
    std::int64_t wiener = 0;
    std::int64_t wiener_polarity = 0;
    std::vector<std::int64_t> w_d;  // w_d[d-1] = pairs at distance exactly d
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
};

namespace detail {

// Sum of d * counts[d-1], i.e. the Wiener index of a distribution.
inline std::int64_t weighted_distance_sum(const std::vector<std::int64_t>& counts) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        total = checked_add(total, checked_mul(static_cast<std::int64_t>(i + 1), counts[i]));
    return total;
}

}  // namespace detail

// Wiener index as a direct sum over unordered pairs. Must stay a distinct
// aggregation route from wiener_transmission; tests compare the two.
inline std::int64_t wiener_pairwise(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::int64_t total = 0;
    std::vector<int> dist;
    std::vector<Vertex> order;
    for (Vertex s = 0; s < n; ++s) {
        if (detail::bfs_fill(g, s, dist, order) != n)
            throw DisconnectedError(s, detail::first_unreached(dist));
        for (Vertex v = s + 1; v < n; ++v)
            total = checked_add(total, dist[static_cast<std::size_t>(v)]);
    }
    return total;
}

// Wiener index as half the sum of all vertex transmissions.
inline std::int64_t wiener_transmission(const Graph& g) {
    std::int64_t doubled = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        doubled = checked_add(doubled, transmission(g, v));
    return exact_half(doubled);
}

// Number of unordered pairs at distance exactly d; 0 beyond the diameter.
inline std::int64_t generalized_wd(const Graph& g, int d) {
    if (d < 1) throw InvalidParameterError("distance d must be >= 1");
    const DistanceDistribution dist = distance_distribution(g);
    return d <= dist.diameter() ? dist.counts[static_cast<std::size_t>(d - 1)] : 0;
}

// Pairs at distance exactly 3.
inline std::int64_t wiener_polarity(const Graph& g) { return generalized_wd(g, 3); }

// First Zagreb index: sum of squared degrees.
inline std::int64_t zagreb_m1(const Graph& g) {
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = static_cast<std::int64_t>(g.degree(v));
        total = checked_add(total, checked_mul(d, d));
    }
    return total;
}

// Second Zagreb index: sum over edges of the endpoint degree product.
inline std::int64_t zagreb_m2(const Graph& g) {
    std::int64_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            total = checked_add(total, checked_mul(g.degree(u), g.degree(v)));
        }
    }
    return total;
}

inline IndexReport full_report(const Graph& g, unsigned threads = 1) {
    const AllPairsSummary summary = all_pairs_summary(g, threads);
    IndexReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.diameter = summary.distribution.diameter();
    r.w_d = summary.distribution.counts;
    r.wiener = detail::weighted_distance_sum(r.w_d);
    r.wiener_polarity = r.diameter >= 3 ? r.w_d[2] : 0;
    r.m1 = zagreb_m1(g);
    r.m2 = zagreb_m2(g);
    return r;
}

}  // namespace topoidx
