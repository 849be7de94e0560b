// Batch front door: verify | extract | scan-eg | gen over graph6 or
// edge-list inputs. All behavior is flag-driven; no environment variables.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "c48/extract.hpp"
#include "c48/generate.hpp"
#include "c48/graph.hpp"
#include "c48/harness.hpp"
#include "c48/oracle.hpp"

namespace {

using c48::GenFilter;
using c48::GenSpec;
using c48::Graph;
using c48::GraphInput;
using c48::GraphSource;

struct GenFlags {
    bool exhaustive = false;
    bool random = false;
    std::string fixture;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    std::string filter = "none";

    bool any() const { return exhaustive || random || !fixture.empty(); }

    GenFilter parsed_filter() const {
        if (filter == "none") return GenFilter::none;
        if (filter == "theorem-preconditions") return GenFilter::theorem_preconditions;
        if (filter == "min-degree-3") return GenFilter::min_degree_3;
        throw c48::input_error("unknown filter: " + filter);
    }
};

void add_gen_flags(CLI::App* cmd, GenFlags& gf) {
    cmd->add_flag("--exhaustive", gf.exhaustive, "all labeled graphs on n vertices (n <= 8)");
    cmd->add_flag("--random", gf.random, "seeded G(n,p) samples");
    cmd->add_option("--fixture", gf.fixture, "named fixture graph");
    cmd->add_option("--n", gf.n, "vertex count");
    cmd->add_option("--p", gf.p, "edge probability (random mode)");
    cmd->add_option("--seed", gf.seed, "64-bit generator seed");
    cmd->add_option("--count", gf.count, "number of random graphs");
    cmd->add_option("--filter", gf.filter,
                    "none | theorem-preconditions | min-degree-3");
}

// Materializes generated graphs lazily; counts them first where cheap so
// the oracle auto mode can decide from the stream size.
GraphSource make_gen_source(const GenFlags& gf, std::uint64_t* size_hint) {
    if (gf.exhaustive) {
        auto en = std::make_shared<c48::LabeledEnumerator>(gf.n, gf.parsed_filter());
        *size_hint = 0;  // unknown without a counting pass
        return [en]() -> std::optional<GraphInput> {
            auto g = en->next();
            if (!g) return std::nullopt;
            return GraphInput{std::move(*g)};
        };
    }
    if (gf.random) {
        GenSpec spec;
        spec.mode = GenSpec::Mode::random;
        spec.n = gf.n;
        spec.edge_probability = gf.p;
        spec.seed = gf.seed;
        spec.count = gf.count;
        spec.filter = gf.parsed_filter();
        auto stream = std::make_shared<c48::RandomGraphStream>(spec);
        *size_hint = gf.count;
        return [stream]() -> std::optional<GraphInput> {
            auto g = stream->next();
            if (!g) return std::nullopt;
            return GraphInput{std::move(*g)};
        };
    }
    auto g = std::make_shared<std::optional<Graph>>(c48::fixture(gf.fixture));
    *size_hint = 1;
    return [g]() -> std::optional<GraphInput> {
        if (!*g) return std::nullopt;
        GraphInput out{std::move(**g)};
        g->reset();
        return out;
    };
}

std::string read_all(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// graph6 line stream from a file or stdin; an optional leading
// ">>graph6<<" header line is skipped.
GraphSource make_file_source(const std::string& path, std::uint64_t* size_hint) {
    auto lines = std::make_shared<std::vector<std::string>>();
    std::string text;
    if (path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw c48::input_error("cannot open input file: " + path);
        text = read_all(f);
    }
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line == ">>graph6<<") {
            first = false;
            continue;
        }
        first = false;
        if (!line.empty()) lines->push_back(line);
    }
    *size_hint = lines->size();
    auto pos = std::make_shared<std::size_t>(0);
    return [lines, pos]() -> std::optional<GraphInput> {
        if (*pos >= lines->size()) return std::nullopt;
        return GraphInput{(*lines)[(*pos)++]};
    };
}

Graph load_single_graph(const std::string& path, const std::string& format,
                        const std::string& fixture_name) {
    if (!fixture_name.empty()) return c48::fixture(fixture_name);
    std::string text;
    if (path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw c48::input_error("cannot open input file: " + path);
        text = read_all(f);
    }
    if (format == "edgelist") return c48::parse_edge_list_text(text);
    // strip trailing newline(s) around a single graph6 record
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return c48::parse_graph6(text);
}

struct SharedFlags {
    std::string input = "-";
    std::string format = "graph6";
    std::string report = "json";
    std::string oracle = "auto";
    int jobs = 1;
    bool strict = false;
    bool timing = false;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& sf) {
    cmd->add_option("input", sf.input, "input file or - for stdin");
    cmd->add_option("--format", sf.format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--report", sf.report, "json | tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--oracle", sf.oracle, "on | off | auto")
        ->check(CLI::IsMember({"on", "off", "auto"}));
    cmd->add_option("--jobs", sf.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", sf.strict, "abort on malformed input lines");
    cmd->add_flag("--timing", sf.timing,
                  "emit measured timings (breaks byte-reproducibility)");
}

c48::HarnessOptions harness_options(const SharedFlags& sf) {
    c48::HarnessOptions opts;
    opts.jobs = sf.jobs;
    opts.report = sf.report == "tsv" ? c48::ReportFormat::tsv : c48::ReportFormat::json;
    opts.strict = sf.strict;
    opts.timing = sf.timing;
    if (sf.oracle == "on")
        opts.oracle = c48::OracleMode::on;
    else if (sf.oracle == "off")
        opts.oracle = c48::OracleMode::off;
    else
        opts.oracle = c48::OracleMode::auto_mode;
    return opts;
}

GraphSource make_source(const SharedFlags& sf, const GenFlags& gf,
                        std::uint64_t* size_hint) {
    if (gf.any()) return make_gen_source(gf, size_hint);
    if (sf.format == "edgelist") {
        auto g = std::make_shared<std::optional<Graph>>(
            load_single_graph(sf.input, "edgelist", ""));
        *size_hint = 1;
        return [g]() -> std::optional<GraphInput> {
            if (!*g) return std::nullopt;
            GraphInput out{std::move(**g)};
            g->reset();
            return out;
        };
    }
    return make_file_source(sf.input, size_hint);
}

int cmd_extract_run(const SharedFlags& sf, const std::string& fixture_name,
                    bool check, bool as_json) {
    Graph g = load_single_graph(sf.input, sf.format, fixture_name);
    c48::ExtractionResult res = c48::extract_with_fallback(g);
    bool oracle_agrees = true;
    if (check) {
        bool c4 = c48::find_cycle_of_length(g, 4).status == c48::SearchStatus::found;
        bool c8 = c4 || c48::find_cycle_of_length(g, 8).status == c48::SearchStatus::found;
        oracle_agrees = (c4 || c8) && c48::verify_witness(g, res.witness);
    }
    if (as_json) {
        nlohmann::ordered_json j;
        j["graph_id"] = c48::encode_graph6(g);
        j["branch"] = c48::branch_name(res.trace.branch);
        j["witness"] = res.witness.vertices;
        nlohmann::ordered_json roles = nlohmann::ordered_json::object();
        for (const auto& [k, v] : res.trace.roles) roles[k] = v;
        j["roles"] = roles;
        if (res.trace.base_c6) j["base_c6"] = *res.trace.base_c6;
        if (check) j["oracle_agrees"] = oracle_agrees;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "branch: " << c48::branch_name(res.trace.branch) << '\n';
        std::cout << "cycle (" << res.witness.length() << "):";
        for (int v : res.witness.vertices) std::cout << ' ' << v;
        std::cout << '\n';
        if (!res.trace.roles.empty()) {
            std::cout << "roles:";
            for (const auto& [k, v] : res.trace.roles) std::cout << ' ' << k << '=' << v;
            std::cout << '\n';
        }
        if (check)
            std::cout << "oracle_agrees: " << (oracle_agrees ? "true" : "false") << '\n';
    }
    return oracle_agrees ? 0 : 2;
}

int cmd_gen_run(const GenFlags& gf) {
    std::uint64_t hint = 0;
    auto source = make_gen_source(gf, &hint);
    while (auto item = source()) {
        std::cout << c48::encode_graph6(std::get<Graph>(*item)) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-of-4-or-8 extraction and verification harness"};
    app.require_subcommand(1);

    SharedFlags verify_sf, scan_sf, extract_sf;
    GenFlags verify_gf, scan_gf, gen_gf;
    std::string extract_fixture;
    bool extract_check = false, extract_json = false;
    int max_exp = 3;

    auto* verify = app.add_subcommand("verify", "extract and check a C4/C8 witness per graph");
    add_shared_flags(verify, verify_sf);
    add_gen_flags(verify, verify_gf);

    auto* extract = app.add_subcommand("extract", "extract a witness from one graph");
    add_shared_flags(extract, extract_sf);
    extract->add_option("--fixture", extract_fixture, "named fixture graph");
    extract->add_flag("--check", extract_check, "cross-check with the brute-force oracle");
    extract->add_flag("--json", extract_json, "machine-readable output");

    auto* scan = app.add_subcommand("scan-eg", "smallest power-of-two cycle per graph");
    add_shared_flags(scan, scan_sf);
    add_gen_flags(scan, scan_gf);
    scan->add_option("--max-exp", max_exp, "largest exponent to try (cycle length 2^E)");

    auto* gen = app.add_subcommand("gen", "emit graph6 lines");
    add_gen_flags(gen, gen_gf);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            std::uint64_t hint = 0;
            auto source = make_source(verify_sf, verify_gf, &hint);
            auto opts = harness_options(verify_sf);
            opts.stream_size_hint = hint;
            auto summary = c48::run_verify(source, opts, std::cout);
            return c48::exit_code_for(summary);
        }
        if (scan->parsed()) {
            std::uint64_t hint = 0;
            auto source = make_source(scan_sf, scan_gf, &hint);
            auto opts = harness_options(scan_sf);
            opts.stream_size_hint = hint;
            opts.max_exp = max_exp;
            auto summary = c48::run_scan_eg(source, opts, std::cout);
            return c48::exit_code_for(summary);
        }
        if (extract->parsed())
            return cmd_extract_run(extract_sf, extract_fixture, extract_check, extract_json);
        if (gen->parsed()) return cmd_gen_run(gen_gf);
    } catch (const c48::counterexample_error& e) {
        std::cerr << "counterexample: " << e.what() << '\n';
        return 2;
    } catch (const c48::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
