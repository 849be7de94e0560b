// Test-only reference implementations, kept independent of the library's
// search and distance code paths.
#ifndef C48_TESTS_REFERENCE_HPP
#define C48_TESTS_REFERENCE_HPP

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "c48/graph.hpp"

namespace c48ref {

// All-pairs distances by Floyd-Warshall; kInf marks unreachable.
constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const c48::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kInf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<int> naive_common_neighbors(const c48::Graph& g, int u, int v) {
    std::vector<int> out;
    for (int t = 0; t < g.vertex_count(); ++t)
        if (t != u && t != v && g.adjacent(t, u) && g.adjacent(t, v)) out.push_back(t);
    return out;
}

// Does any simple k-cycle exist? Enumerates k-subsets and checks the
// induced subgraph for a Hamiltonian cycle by permutation brute force.
inline bool subset_cycle_exists(const c48::Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 3 || k > n) return false;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::sort(pick.begin(), pick.end());  // lowest lexicographic mask first
    do {
        int j = 0;
        for (int v = 0; v < n; ++v)
            if (pick[static_cast<std::size_t>(v)]) subset[static_cast<std::size_t>(j++)] = v;
        // Hamiltonian cycle on the induced subgraph: fix subset[0] as the
        // start, permute the rest.
        std::vector<int> perm(subset.begin() + 1, subset.end());
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = g.adjacent(subset[0], perm.front()) &&
                      g.adjacent(perm.back(), subset[0]);
            for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
                ok = g.adjacent(perm[i], perm[i + 1]);
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

inline c48::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (unit(rng) < p) edges.emplace_back(u, v);
    return c48::Graph::from_edge_list(n, edges);
}

} // namespace c48ref

#endif
