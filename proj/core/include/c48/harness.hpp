#ifndef C48_HARNESS_HPP
#define C48_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "c48/extract.hpp"
#include "c48/generate.hpp"
#include "c48/graph.hpp"
#include "c48/oracle.hpp"

namespace c48 {

enum class ReportFormat { json, tsv };
enum class OracleMode { on, off, auto_mode };

struct HarnessOptions {
    int jobs = 1;
    ReportFormat report = ReportFormat::json;
    bool strict = false;           // abort on malformed input lines
    OracleMode oracle = OracleMode::auto_mode;
    bool timing = false;           // emit measured elapsed_micros / wall_time
    // Known stream length, 0 if unknown. auto oracle mode switches off
    // above 10^5 graphs; with an unknown length the switch happens at
    // record index 10^5.
    std::uint64_t stream_size_hint = 0;
    int max_exp = 3;               // scan mode cap
};

/// One input graph: either already built (generated) or a raw graph6
/// line still to parse (so malformed lines become per-record entries).
using GraphInput = std::variant<Graph, std::string>;

/// Pull-based input stream; empty optional ends the stream.
using GraphSource = std::function<std::optional<GraphInput>()>;

struct VerificationRecord {
    std::uint64_t graph_index = 0;
    std::string graph_id;          // graph6
    int n = 0, m = 0;
    std::optional<PreconditionReport> precondition;
    std::string branch;            // branch name, "skipped", or "error"
    std::optional<CycleWitness> witness;
    std::optional<bool> oracle_agrees;
    std::uint64_t elapsed_micros = 0;
    std::optional<std::string> error;  // parse or counterexample message
    bool counterexample = false;
};

struct RunSummary {
    std::map<std::string, std::uint64_t> branch_totals;
    std::uint64_t graphs = 0;
    std::uint64_t skipped = 0;
    std::uint64_t errors = 0;
    std::uint64_t counterexample_count = 0;
    std::uint64_t fallback_count = 0;
    double fallback_rate = 0.0;    // fallback_oracle / extracted
    std::uint64_t wall_micros = 0;
};

std::string serialize_record(const VerificationRecord& r, ReportFormat f);
std::string serialize_summary(const RunSummary& s, ReportFormat f);

/// Theorem verification over a stream: one record per input graph in
/// input order regardless of --jobs; record bytes are identical at any
/// parallelism level. Throws parse_error in strict mode.
RunSummary run_verify(const GraphSource& source, const HarnessOptions& opts,
                      std::ostream& out);

/// Power-of-two-cycle scan (min-degree-3 filter only). Graphs below
/// min degree 3 are recorded as skipped; graphs with no power-of-two
/// cycle up to 2^max_exp are flagged (cap-bounded, not a refutation).
RunSummary run_scan_eg(const GraphSource& source, const HarnessOptions& opts,
                       std::ostream& out);

/// Exit code contract: 0 verified, 1 input/config error, 2 counterexample.
int exit_code_for(const RunSummary& s);

} // namespace c48

#endif
