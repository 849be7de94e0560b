#ifndef C48_EXTRACT_HPP
#define C48_EXTRACT_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "c48/graph.hpp"
#include "c48/oracle.hpp"

namespace c48 {

enum class Branch {
    case1_contradiction_c4,
    case1_c8,
    case2_contradiction_c4,
    case2_c8,
    fallback_oracle,
};

const char* branch_name(Branch b);

enum class CaseTag { case1, case2 };

/// Which construction branch fired and which vertices played each role.
/// Role names follow the construction: v1, v2, a, b, c, d, v6, w1..w4, x, y.
struct ExtractionTrace {
    Branch branch;
    std::map<std::string, int> roles;
    std::optional<std::array<int, 6>> base_c6;  // case-1 only: (v1,b,v6,d,v2,a)
};

struct ExtractionResult {
    CycleWitness witness;  // canonical; length 4 or 8
    ExtractionTrace trace;
};

/// Case 1 iff v1,v2 have a common neighbor, else Case 2.
CaseTag classify_edge(const Graph& g, int v1, int v2);

/// Case-1 construction from edge v1v2 with common neighbor a.
/// Returns empty if every deterministic role assignment is abandoned
/// (possible: the w4 step is not fully justified; callers fall back).
std::optional<ExtractionResult> case1_extract(const Graph& g, int v1, int v2, int a);

/// Case-2 construction from edge v1v2 with no common neighbor.
/// Total under the theorem's hypotheses.
std::optional<ExtractionResult> case2_extract(const Graph& g, int v1, int v2);

/// Run the construction from the lexicographically least edge.
/// Throws precondition_error if the hypotheses fail and extraction_error
/// if the proof path fails on that edge (use extract_with_fallback).
ExtractionResult extract(const Graph& g);

/// Fallback ladder: every deterministic role choice per edge, then
/// subsequent edges in lexicographic order, then the brute-force oracle
/// (C4 first, then C8). Throws counterexample_error if even the oracle
/// finds neither -- that would refute the theorem.
ExtractionResult extract_with_fallback(const Graph& g);

} // namespace c48

#endif
