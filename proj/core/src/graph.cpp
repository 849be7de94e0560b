#include "c48/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>

namespace c48 {

void Graph::init(int n) {
    if (n < 0) throw input_error("negative vertex count");
    n_ = n;
    m_ = 0;
    words_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::set_edge(int u, int v) {
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    if (bit(u, v)) return;  // duplicates collapse
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
    ++m_;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g;
    g.init(n);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = row[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64) + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("common_neighbors requires distinct vertices");
    std::vector<int> out;
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = ru[w] & rv[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64) + b);
            word &= word - 1;
        }
    }
    return out;
}

int Graph::next_neighbor(int v, int after) const {
    check_vertex(v);
    int start = after + 1;
    if (start >= n_) return -1;
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    std::size_t w = static_cast<std::size_t>(start) >> 6;
    std::uint64_t word = row[w] & (~0ull << (start & 63));
    while (true) {
        if (word) return static_cast<int>(w * 64) + std::countr_zero(word);
        if (++w >= words_) return -1;
        word = row[w];
    }
}

GraphBuilder::GraphBuilder(int n) { g_.init(n); }
void GraphBuilder::add_edge(int u, int v) { g_.set_edge(u, v); }
void GraphBuilder::clear_edges() {
    std::fill(g_.bits_.begin(), g_.bits_.end(), 0);
    g_.m_ = 0;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw input_error("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push_back(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u = g.next_neighbor(v, -1); u != -1; u = g.next_neighbor(v, u)) {
            if (dist[static_cast<std::size_t>(u)] == -1) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push_back(u);
            }
        }
    }
    return dist;
}

PreconditionReport precondition_report(const Graph& g) {
    PreconditionReport rep;
    const int n = g.vertex_count();
    if (n == 0) return rep;
    rep.min_degree = g.degree(0);
    for (int v = 1; v < n; ++v) rep.min_degree = std::min(rep.min_degree, g.degree(v));
    if (n < 2) return rep;
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u) {
            if (dist[static_cast<std::size_t>(u)] == -1) return rep;  // disconnected
            diam = std::max(diam, dist[static_cast<std::size_t>(u)]);
        }
    }
    rep.diameter = diam;
    rep.satisfied = (diam == 2) && (rep.min_degree >= 3);
    return rep;
}

// --- graph6 ---------------------------------------------------------------

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;
constexpr int kMaxEncodableN = 1 << 18;  // multi-byte header cap

int g6_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw parse_error("truncated graph6 record", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kG6Lo || c > kG6Hi) throw parse_error("byte outside graph6 range 63..126", pos);
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    long long n;
    if (pos >= text.size()) throw parse_error("empty graph6 record", pos);
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = g6_byte(text, pos);
        ++pos;
    } else {
        ++pos;
        int groups = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            groups = 6;
            ++pos;
        }
        n = 0;
        for (int i = 0; i < groups; ++i) {
            n = (n << 6) | g6_byte(text, pos);
            ++pos;
        }
        if (n > kMaxEncodableN) throw parse_error("graph6 order beyond supported cap (n > 2^18)", pos);
    }

    Graph g;
    g.init(static_cast<int>(n));
    const long long pairs = n * (n - 1) / 2;
    int acc = 0, avail = 0;
    int u = 0, v = 1;
    for (long long i = 0; i < pairs; ++i) {
        if (avail == 0) {
            acc = g6_byte(text, pos);
            ++pos;
            avail = 6;
        }
        if ((acc >> (avail - 1)) & 1) g.set_edge(u, v);
        --avail;
        if (++u == v) {
            u = 0;
            ++v;
        }
    }
    if (pos < text.size() && text[pos] == '\n') ++pos;
    if (pos != text.size()) throw parse_error("trailing bytes after graph6 record", pos);
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxEncodableN) throw input_error("graph too large for supported graph6 headers (n > 2^18)");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Lo + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Lo + ((n >> shift) & 63)));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Lo + ((n >> shift) & 63)));
    }
    int acc = 0, used = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(kG6Lo + acc));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>(kG6Lo + (acc << (6 - used))));
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) throw parse_error("expected header line \"n m\"", 0);
    if (n < 0 || m < 0) throw parse_error("negative count in header", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("expected " + std::to_string(m) + " edge lines", 0);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

} // namespace c48
