#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>
#include <vector>

#include "topoidx/checked.hpp"
#include "topoidx/errors.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

// counts[l-1] = number of unordered vertex pairs {u, v} with d(u, v) = l,
// for l = 1..diameter. The last entry is nonzero by construction.
struct DistanceDistribution {
    std::vector<std::int64_t> counts;

    int diameter() const { return static_cast<int>(counts.size()); }
    std::int64_t total_pairs() const {
        std::int64_t total = 0;
        for (std::int64_t c : counts) total = checked_add(total, c);
        return total;
    }
};

// One all-pairs sweep: the pair-distance distribution plus the per-vertex
// transmissions (sum of distances from each vertex to all others).
struct AllPairsSummary {
    DistanceDistribution distribution;
    std::vector<std::int64_t> transmissions;
};

namespace detail {

// Frontier BFS from `source` into a reusable dist buffer (-1 = unreached).
// Returns the number of reached vertices; `order` is the visit queue.
inline Vertex bfs_fill(const Graph& g, Vertex source, std::vector<int>& dist,
                       std::vector<Vertex>& order) {
    const Vertex n = g.vertex_count();
    dist.assign(static_cast<std::size_t>(n), -1);
    order.clear();
    order.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex u = order[head];
        const int next = dist[static_cast<std::size_t>(u)] + 1;
        for (Vertex v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = next;
                order.push_back(v);
            }
        }
    }
    return static_cast<Vertex>(order.size());
}

inline Vertex first_unreached(const std::vector<int>& dist) {
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] < 0) return static_cast<Vertex>(v);
    return -1;
}

}  // namespace detail

// Hop distances from one source; entry source is 0.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    const Vertex n = g.vertex_count();
    if (source < 0 || source >= n) throw VertexOutOfRangeError(source, n);
    std::vector<int> dist;
    std::vector<Vertex> order;
    if (detail::bfs_fill(g, source, dist, order) != n)
        throw DisconnectedError(source, detail::first_unreached(dist));
    return dist;
}

// n independent single-source traversals; no n x n matrix is ever stored.
// Pair counts take only targets v > source from each pass, so every
// unordered pair is counted exactly once. Sources may be swept by several
// threads: each worker accumulates into private counters and the merge is
// integer addition, so results are identical for any thread count.
// threads = 0 picks the hardware concurrency.
inline AllPairsSummary all_pairs_summary(const Graph& g, unsigned threads = 1) {
    const Vertex n = g.vertex_count();
    AllPairsSummary out;
    out.transmissions.assign(static_cast<std::size_t>(n), 0);
    if (n <= 1) return out;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    std::vector<std::vector<std::int64_t>> worker_counts(threads);
    std::vector<std::exception_ptr> worker_errors(threads);

    auto sweep = [&](unsigned w, Vertex begin, Vertex end) {
        try {
            std::vector<int> dist;
            std::vector<Vertex> order;
            auto& counts = worker_counts[w];
            for (Vertex s = begin; s < end; ++s) {
                if (detail::bfs_fill(g, s, dist, order) != n)
                    throw DisconnectedError(s, detail::first_unreached(dist));
                std::int64_t sum = 0;
                for (Vertex v = 0; v < n; ++v) sum = checked_add(sum, dist[static_cast<std::size_t>(v)]);
                out.transmissions[static_cast<std::size_t>(s)] = sum;
                for (Vertex v = s + 1; v < n; ++v) {
                    const auto d = static_cast<std::size_t>(dist[static_cast<std::size_t>(v)]);
                    if (d > counts.size()) counts.resize(d, 0);
                    ++counts[d - 1];
                }
            }
        } catch (...) {
            worker_errors[w] = std::current_exception();
        }
    };

    if (threads == 1) {
        sweep(0, 0, n);
    } else {
        const Vertex chunk = (n + static_cast<Vertex>(threads) - 1) / static_cast<Vertex>(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            const Vertex begin = std::min<Vertex>(n, static_cast<Vertex>(w) * chunk);
            const Vertex end = std::min<Vertex>(n, begin + chunk);
            pool.emplace_back(sweep, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    for (unsigned w = 0; w < threads; ++w)
        if (worker_errors[w]) std::rethrow_exception(worker_errors[w]);

    auto& merged = out.distribution.counts;
    for (const auto& counts : worker_counts) {
        if (counts.size() > merged.size()) merged.resize(counts.size(), 0);
        for (std::size_t i = 0; i < counts.size(); ++i)
            merged[i] = checked_add(merged[i], counts[i]);
    }
    return out;
}

inline DistanceDistribution distance_distribution(const Graph& g, unsigned threads = 1) {
    return all_pairs_summary(g, threads).distribution;
}

inline int diameter(const Graph& g) { return distance_distribution(g).diameter(); }

// Transmission of v: sum of distances from v to every other vertex.
inline std::int64_t transmission(const Graph& g, Vertex v) {
    const std::vector<int> dist = bfs_distances(g, v);
    std::int64_t sum = 0;
    for (int d : dist) sum = checked_add(sum, d);
    return sum;
}

}  // namespace topoidx
