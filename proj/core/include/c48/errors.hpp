#ifndef C48_ERRORS_HPP
#define C48_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c48 {

// Bad argument: out-of-range vertex, self-loop, invalid parameter.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed graph6 or edge-list text. byte_offset points at the offending byte.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

// Graph fails the diameter-2 / min-degree-3 hypotheses.
struct precondition_error : std::runtime_error {
    precondition_error(const std::string& msg, int diameter, int min_degree)
        : std::runtime_error(msg), diameter(diameter), min_degree(min_degree) {}
    int diameter;   // -1 = disconnected / undefined
    int min_degree;
};

// Proof-path construction exhausted its choices for the starting edge.
// extract_with_fallback handles this internally; extract surfaces it.
struct extraction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Neither the construction nor the oracle found a C4 or C8 on a graph
// satisfying the hypotheses. Carries the graph6 id; highest-severity report.
struct counterexample_error : std::runtime_error {
    explicit counterexample_error(std::string g6)
        : std::runtime_error("no cycle of length 4 or 8 found: " + g6),
          graph6(std::move(g6)) {}
    std::string graph6;
};

// Rejection sampling made no progress within the miss cap.
struct progress_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace c48

#endif
