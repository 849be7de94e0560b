#ifndef C48_GRAPH_HPP
#define C48_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c48/errors.hpp"

namespace c48 {

/// Immutable simple undirected graph over vertices 0..n-1.
/// Adjacency is a packed bit matrix: adjacent() is O(1), neighbor
/// iteration walks 64-bit words. Duplicate input edges collapse;
/// self-loops are rejected.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return bit(u, v);
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<int> common_neighbors(int u, int v) const;

    /// First neighbor of v with id > after, or -1. Range-checked on v only.
    int next_neighbor(int v, int after) const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph parse_graph6(std::string_view);
    friend class GraphBuilder;

    void init(int n);
    void set_edge(int u, int v);
    bool bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable construction helper for generators; finish() freezes the graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    void clear_edges();
    Graph finish() const { return g_; }
    const Graph& view() const { return g_; }

private:
    Graph g_;
};

/// Hypothesis check for the main theorem: diameter 2 and minimum degree >= 3.
/// diameter is empty when the graph is disconnected or has fewer than 2 vertices.
struct PreconditionReport {
    std::optional<int> diameter;
    int min_degree = 0;
    bool satisfied = false;
};

/// Hop counts from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

PreconditionReport precondition_report(const Graph& g);

/// graph6 text form (bit-exact per the standard format).
/// Accepts an optional ">>graph6<<" prefix and one trailing newline.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v", 0-indexed.
Graph parse_edge_list_text(std::string_view text);

} // namespace c48

#endif
