#pragma once

// Shared test corpus: sun graphs, the small named families, and a seeded
// set of random connected graphs. Everything here is deterministic for a
// fixed seed so frozen expectations stay stable.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "topoidx/graph.hpp"

namespace corpus {

inline constexpr unsigned kSeed = 0x5047u;

struct Entry {
    std::string name;
    topoidx::Graph graph;
};

// Random connected graph: a random spanning tree plus extra edges, so no
// rejection sampling is needed.
inline topoidx::Graph random_connected(std::mt19937& rng, int n) {
    std::vector<topoidx::Edge> edges;
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        const int u = pick(rng);
        edges.emplace_back(u, v);
        present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    }
    std::uniform_real_distribution<double> density(0.0, 0.35);
    const double p = density(rng);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && flip(rng))
                edges.emplace_back(u, v);
    return topoidx::Graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline topoidx::Graph relabeled(const topoidx::Graph& g, const std::vector<int>& perm) {
    std::vector<topoidx::Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return topoidx::Graph(g.vertex_count(), edges);
}

inline std::vector<Entry> random_connected_corpus(unsigned seed = kSeed, int count = 200,
                                                  int max_n = 30) {
    std::mt19937 rng(seed);
    std::vector<Entry> out;
    out.reserve(static_cast<std::size_t>(count));
    std::uniform_int_distribution<int> order(2, max_n);
    for (int i = 0; i < count; ++i) {
        const int n = order(rng);
        out.push_back({"random_" + std::to_string(i) + "_n" + std::to_string(n),
                       random_connected(rng, n)});
    }
    return out;
}

// Suns k = 3..64, paths/cycles/completes up to n = 30, plus the random set.
// Every entry has at most 128 vertices, so the cubic oracle covers all of it.
inline std::vector<Entry> standard(int max_sun_k = 64) {
    std::vector<Entry> out;
    for (int k = 3; k <= max_sun_k; ++k)
        out.push_back({"sun_" + std::to_string(k), topoidx::sun(k)});
    for (int n = 1; n <= 30; ++n)
        out.push_back({"path_" + std::to_string(n),
                       topoidx::generate({topoidx::Family::Path, n})});
    for (int n = 3; n <= 30; ++n)
        out.push_back({"cycle_" + std::to_string(n),
                       topoidx::generate({topoidx::Family::Cycle, n})});
    for (int n = 1; n <= 30; ++n)
        out.push_back({"complete_" + std::to_string(n),
                       topoidx::generate({topoidx::Family::Complete, n})});
    for (auto& entry : random_connected_corpus()) out.push_back(std::move(entry));
    return out;
}

// Double star: adjacent centers with a and b pendant leaves; diameter 3
// whenever a, b >= 1. These are the tight cases for the degree bounds.
inline topoidx::Graph double_star(int a, int b) {
    std::vector<topoidx::Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
    return topoidx::Graph(2 + a + b, edges);
}

}  // namespace corpus
