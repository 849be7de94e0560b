#include "c48/oracle.hpp"

#include <algorithm>

namespace c48 {

CycleWitness canonical_witness(CycleWitness w) {
    const int k = w.length();
    if (k < 3) return w;
    auto mn = std::min_element(w.vertices.begin(), w.vertices.end());
    std::rotate(w.vertices.begin(), mn, w.vertices.end());
    if (w.vertices[static_cast<std::size_t>(k - 1)] < w.vertices[1])
        std::reverse(w.vertices.begin() + 1, w.vertices.end());
    return w;
}

bool verify_witness(const Graph& g, const CycleWitness& w) {
    const int k = w.length();
    if (k < 3) return false;
    const int n = g.vertex_count();
    for (int v : w.vertices)
        if (v < 0 || v >= n) return false;
    auto sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < k; ++i)
        if (!g.adjacent(w.vertices[static_cast<std::size_t>(i)],
                        w.vertices[static_cast<std::size_t>((i + 1) % k)]))
            return false;
    return true;
}

namespace {

struct DfsState {
    const Graph& g;
    int k;
    std::uint64_t budget;       // 0 = unlimited
    std::uint64_t expansions = 0;
    std::vector<int> path;
    std::vector<char> on_path;
    bool exhausted = false;

    // Path extension; all vertices stay above the anchor path[0], and a
    // closing is accepted only when path[1] < path.back() (reflection kill).
    bool dfs() {
        const int anchor = path[0];
        const int last = path.back();
        if (static_cast<int>(path.size()) == k) {
            return g.adjacent(last, anchor) && path[1] < last;
        }
        for (int u = g.next_neighbor(last, anchor); u != -1; u = g.next_neighbor(last, u)) {
            if (on_path[static_cast<std::size_t>(u)]) continue;
            if (budget && ++expansions > budget) {
                exhausted = true;
                return false;
            }
            path.push_back(u);
            on_path[static_cast<std::size_t>(u)] = 1;
            if (dfs()) return true;
            on_path[static_cast<std::size_t>(u)] = 0;
            path.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

CycleSearchResult find_cycle_of_length(const Graph& g, int k, std::uint64_t budget) {
    if (k < 3) throw input_error("cycle length must be at least 3");
    CycleSearchResult res;
    const int n = g.vertex_count();
    if (k > n) return res;
    DfsState st{g, k, budget};
    st.on_path.assign(static_cast<std::size_t>(n), 0);
    for (int s = 0; s + k <= n; ++s) {
        st.path.assign(1, s);
        std::fill(st.on_path.begin(), st.on_path.end(), 0);
        st.on_path[static_cast<std::size_t>(s)] = 1;
        if (st.dfs()) {
            res.status = SearchStatus::found;
            res.witness = CycleWitness{st.path};  // already canonical
            return res;
        }
        if (st.exhausted) {
            res.status = SearchStatus::budget_exhausted;
            return res;
        }
    }
    res.status = SearchStatus::absent;
    return res;
}

std::optional<PowerOfTwoCycle> smallest_power_of_two_cycle(const Graph& g, int max_exp) {
    if (max_exp < 2) throw input_error("max_exp must be at least 2");
    for (int e = 2; e <= max_exp; ++e) {
        const long long len = 1ll << e;
        if (len > g.vertex_count()) break;
        auto res = find_cycle_of_length(g, static_cast<int>(len));
        if (res.status == SearchStatus::found)
            return PowerOfTwoCycle{e, *res.witness};
    }
    return std::nullopt;
}

} // namespace c48
