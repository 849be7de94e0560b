#ifndef C48_ORACLE_HPP
#define C48_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "c48/graph.hpp"

namespace c48 {

/// A simple cycle given as its vertex sequence; the closing edge
/// (back, front) is implied.
struct CycleWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
};

/// Rotate so the minimum vertex comes first and orient so the second
/// vertex is the smaller of the first vertex's two cycle neighbors.
CycleWitness canonical_witness(CycleWitness w);

/// True iff w is a valid simple cycle in g: length >= 3, vertices
/// distinct and in range, consecutive pairs (incl. closing) adjacent.
/// Malformed witnesses return false, never throw.
bool verify_witness(const Graph& g, const CycleWitness& w);

enum class SearchStatus { found, absent, budget_exhausted };

struct CycleSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<CycleWitness> witness;
};

/// Exact search for a simple cycle on exactly k vertices.
///
/// DFS path extension anchored at each start vertex in ascending order,
/// with the standard prunings: every path vertex exceeds the anchor (so
/// the anchor is the cycle minimum) and the second vertex is below the
/// last (kills reflections). The returned cycle is the lexicographically
/// least one and is already in canonical form.
///
/// budget caps node expansions; 0 means unlimited. Hitting the cap is a
/// distinct outcome, never reported as absent.
CycleSearchResult find_cycle_of_length(const Graph& g, int k, std::uint64_t budget = 0);

struct PowerOfTwoCycle {
    int exponent;
    CycleWitness witness;
};

/// Least e in [2, max_exp] with a 2^e-cycle, or empty if none up to the cap.
std::optional<PowerOfTwoCycle> smallest_power_of_two_cycle(const Graph& g, int max_exp);

} // namespace c48

#endif
