#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "topoidx/checked.hpp"
#include "topoidx/errors.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

// Brute-force cross-validation path. Must share no traversal code with the
// BFS engine: distances come from the Floyd-Warshall recurrence and the
// indices from literal pair enumeration. Dense storage; meant for small
// graphs.

class DistanceMatrix {
public:
    explicit DistanceMatrix(Vertex n)
        : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfinity) {}

    Vertex size() const { return n_; }
    std::int32_t at(Vertex u, Vertex v) const { return cells_[index(u, v)]; }
    bool reachable(Vertex u, Vertex v) const { return at(u, v) < kInfinity; }

    bool all_reachable() const {
        for (std::int32_t c : cells_)
            if (c >= kInfinity) return false;
        return true;
    }

    void set(Vertex u, Vertex v, std::int32_t d) { cells_[index(u, v)] = d; }

    static constexpr std::int32_t kInfinity = std::numeric_limits<std::int32_t>::max() / 2;

private:
    std::size_t index(Vertex u, Vertex v) const {
        if (u < 0 || u >= n_) throw VertexOutOfRangeError(u, n_);
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    Vertex n_;
    std::vector<std::int32_t> cells_;
};

inline DistanceMatrix floyd_warshall(const Graph& g) {
    const Vertex n = g.vertex_count();
    DistanceMatrix dm(n);
    for (Vertex v = 0; v < n; ++v) {
        dm.set(v, v, 0);
        for (Vertex u : g.neighbors(v)) dm.set(v, u, 1);
    }
    for (Vertex via = 0; via < n; ++via) {
        for (Vertex u = 0; u < n; ++u) {
            const std::int32_t head = dm.at(u, via);
            if (head >= DistanceMatrix::kInfinity) continue;
            for (Vertex v = 0; v < n; ++v) {
                const std::int32_t candidate = head + dm.at(via, v);
                if (candidate < dm.at(u, v)) dm.set(u, v, candidate);
            }
        }
    }
    return dm;
}

namespace detail {

inline void require_connected(const DistanceMatrix& dm) {
    for (Vertex u = 0; u < dm.size(); ++u)
        for (Vertex v = u + 1; v < dm.size(); ++v)
            if (!dm.reachable(u, v)) throw DisconnectedError(u, v);
}

}  // namespace detail

// Literal Wiener index: sum of matrix entries over unordered pairs.
inline std::int64_t wiener_naive(const DistanceMatrix& dm) {
    detail::require_connected(dm);
    std::int64_t total = 0;
    for (Vertex u = 0; u < dm.size(); ++u)
        for (Vertex v = u + 1; v < dm.size(); ++v)
            total = checked_add(total, dm.at(u, v));
    return total;
}

// Literal Wiener polarity index: count of unordered pairs with entry 3.
inline std::int64_t polarity_naive(const DistanceMatrix& dm) {
    detail::require_connected(dm);
    std::int64_t total = 0;
    for (Vertex u = 0; u < dm.size(); ++u)
        for (Vertex v = u + 1; v < dm.size(); ++v)
            if (dm.at(u, v) == 3) ++total;
    return total;
}

}  // namespace topoidx
