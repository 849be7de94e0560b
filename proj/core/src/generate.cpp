#include "c48/generate.hpp"

#include <bit>

namespace c48 {

bool passes_filter(const Graph& g, GenFilter f) {
    switch (f) {
        case GenFilter::none:
            return true;
        case GenFilter::min_degree_3: {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) < 3) return false;
            return g.vertex_count() > 0;
        }
        case GenFilter::theorem_preconditions:
            return precondition_report(g).satisfied;
    }
    return false;
}

LabeledEnumerator::LabeledEnumerator(int n, GenFilter filter)
    : filter_(filter), builder_(n) {
    if (n < 0 || n > 8) throw input_error("exhaustive enumeration supports n <= 8");
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs_.emplace_back(u, v);
    total_ = 1ull << pairs_.size();
}

std::optional<Graph> LabeledEnumerator::next() {
    for (; mask_ < total_; ++mask_) {
        builder_.clear_edges();
        std::uint64_t bits = mask_;
        while (bits) {
            int i = std::countr_zero(bits);
            builder_.add_edge(pairs_[static_cast<std::size_t>(i)].first,
                              pairs_[static_cast<std::size_t>(i)].second);
            bits &= bits - 1;
        }
        if (passes_filter(builder_.view(), filter_)) {
            ++mask_;
            return builder_.finish();
        }
    }
    return std::nullopt;
}

void enumerate_labeled(int n, GenFilter filter,
                       const std::function<bool(const Graph&)>& emit) {
    LabeledEnumerator en(n, filter);
    while (auto g = en.next())
        if (!emit(*g)) return;
}

RandomGraphStream::RandomGraphStream(const GenSpec& spec)
    : spec_(spec), rng_(spec.seed) {
    if (spec.mode != GenSpec::Mode::random) throw input_error("spec is not random mode");
    if (spec.count < 1) throw input_error("random mode requires count >= 1");
    if (!(spec.edge_probability > 0.0 && spec.edge_probability < 1.0))
        throw input_error("edge probability must lie strictly between 0 and 1");
    if (spec.n < 0) throw input_error("negative vertex count");
}

std::optional<Graph> RandomGraphStream::next() {
    if (emitted_ >= spec_.count) return std::nullopt;
    constexpr std::uint64_t kRejectionCap = 1'000'000;
    GraphBuilder builder(spec_.n);
    for (std::uint64_t misses = 0;; ++misses) {
        if (misses >= kRejectionCap)
            throw progress_error(
                "rejection sampling made no progress after 10^6 misses; "
                "adjust n, p, or the filter");
        builder.clear_edges();
        for (int v = 1; v < spec_.n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng_.next_unit() < spec_.edge_probability) builder.add_edge(u, v);
        if (passes_filter(builder.view(), spec_.filter)) {
            ++emitted_;
            return builder.finish();
        }
    }
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Outer 5-cycle, spokes, inner pentagram.
Graph make_petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, e);
}

Graph make_k33() {
    EdgeList e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(6, e);
}

Graph make_k4() {
    EdgeList e;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(4, e);
}

// Case-1 exerciser: the rank-3 polarity graph on 13 vertices (diameter 2,
// min degree 3, C4-free), relabeled so the construction roles are
// v1=0 v2=1 a=2 b=3 d=4 v6=5 w1=6 w2=7 w3=8 w4=9 and every deterministic
// tie-break lands on them. Contains the drawn configuration: triangle
// v1v2a, b~v1, d~v2, v6~b,d, w1~b, w2~v6, w3~d, w4~w1,w2.
Graph make_figure5_case1() {
    return Graph::from_edge_list(13, {{0, 1},  {0, 2},  {0, 3},  {0, 11}, {1, 2},  {1, 4},
                                      {1, 10}, {2, 7},  {2, 9},  {3, 5},  {3, 6},  {3, 11},
                                      {4, 5},  {4, 8},  {4, 10}, {5, 7},  {6, 9},  {6, 10},
                                      {7, 9},  {7, 12}, {8, 9},  {8, 11}, {10, 12}, {11, 12}});
}

// Case-2 exerciser: the Petersen graph relabeled so the roles are
// v1=0 v2=1 a=2 b=3 c=4 d=5 x=6 y=7. Drawn cycle edges v1a ax xc cv2
// v2d dy yb bv1 plus the chord v1v2 are all present.
Graph make_figure6_case2() {
    return Graph::from_edge_list(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                                      {2, 6}, {2, 9}, {3, 7}, {3, 8}, {4, 6},
                                      {4, 8}, {5, 7}, {5, 9}, {6, 7}, {8, 9}});
}

}  // namespace

Graph fixture(std::string_view name) {
    if (name == "petersen") return make_petersen();
    if (name == "k33") return make_k33();
    if (name == "k4") return make_k4();
    if (name == "figure5-case1") return make_figure5_case1();
    if (name == "figure6-case2") return make_figure6_case2();
    throw input_error("unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
    return {"petersen", "k33", "k4", "figure5-case1", "figure6-case2"};
}

} // namespace c48
