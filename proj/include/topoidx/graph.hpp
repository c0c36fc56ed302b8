#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "topoidx/errors.hpp"

namespace topoidx {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph. Vertices are 0..n-1 and adjacency lists
// are kept sorted ascending, so every enumeration made from a Graph is
// deterministic. Construction validates simplicity (no self-loops, no
// duplicate edges); connectivity is the distance operations' concern.
class Graph {
public:
    // Validates and builds; see build_graph for the error contract.
    Graph(Vertex n, const std::vector<Edge>& edges);

    Vertex vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // Every edge once as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

inline Graph::Graph(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidParameterError("vertex count must be >= 0");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u == v) throw SelfLoopError(u);
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) throw DuplicateEdgeError(std::min(v, *dup), std::max(v, *dup));
    }
    n_ = n;
    m_ = static_cast<std::int64_t>(edges.size());
}

inline Graph build_graph(Vertex n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline std::vector<Vertex> degrees(const Graph& g) {
    std::vector<Vertex> out(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
    return out;
}

// k-sun: a k-clique c_1..c_k plus an independent set s_1..s_k, where s_i is
// adjacent to c_i and c_{i+1} (indices wrapping k -> 1). Fixed labeling:
// c_i -> i-1 and s_i -> k+i-1, so generated graphs are byte-stable.
struct SunSpec {
    std::int64_t k = 0;

    Vertex clique_id(std::int64_t i) const { return static_cast<Vertex>(i - 1); }
    Vertex independent_id(std::int64_t i) const { return static_cast<Vertex>(k + i - 1); }
};

inline Graph sun(const SunSpec& spec) {
    const std::int64_t k = spec.k;
    if (k < 3) throw InvalidParameterError("k must be >= 3");
    if (k > (std::numeric_limits<Vertex>::max() - 1) / 2)
        throw InvalidParameterError("k too large to materialize a sun graph");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(k * (k + 3) / 2));
    for (std::int64_t i = 1; i <= k; ++i)
        for (std::int64_t j = i + 1; j <= k; ++j)
            edges.emplace_back(spec.clique_id(i), spec.clique_id(j));
    for (std::int64_t i = 1; i <= k; ++i) {
        edges.emplace_back(spec.independent_id(i), spec.clique_id(i));
        edges.emplace_back(spec.independent_id(i), spec.clique_id(i % k + 1));
    }
    return Graph(static_cast<Vertex>(2 * k), edges);
}

inline Graph sun(std::int64_t k) { return sun(SunSpec{k}); }

enum class Family { Sun, Path, Cycle, Complete };

struct FamilySpec {
    Family family;
    std::int64_t size;  // sun parameter k, or vertex count n
};

// Deterministic canonical labelings: paths and cycles use consecutive ids,
// complete graphs all pairs, suns the SunSpec convention.
inline Graph generate(const FamilySpec& spec) {
    const std::int64_t n = spec.size;
    if (spec.family != Family::Sun && n > std::numeric_limits<Vertex>::max())
        throw InvalidParameterError("graph order exceeds the vertex id range");
    const auto to_vertex = [](std::int64_t v) { return static_cast<Vertex>(v); };
    std::vector<Edge> edges;
    switch (spec.family) {
    case Family::Sun:
        return sun(spec.size);
    case Family::Path:
        if (n < 1) throw InvalidParameterError("path order must be >= 1");
        for (std::int64_t v = 0; v + 1 < n; ++v) edges.emplace_back(to_vertex(v), to_vertex(v + 1));
        break;
    case Family::Cycle:
        if (n < 3) throw InvalidParameterError("cycle order must be >= 3");
        for (std::int64_t v = 0; v + 1 < n; ++v) edges.emplace_back(to_vertex(v), to_vertex(v + 1));
        edges.emplace_back(to_vertex(0), to_vertex(n - 1));
        break;
    case Family::Complete:
        if (n < 1) throw InvalidParameterError("complete graph order must be >= 1");
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = u + 1; v < n; ++v) edges.emplace_back(to_vertex(u), to_vertex(v));
        break;
    }
    return Graph(static_cast<Vertex>(n), edges);
}

}  // namespace topoidx
