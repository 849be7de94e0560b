#include <doctest.h>

#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "c48/harness.hpp"

using c48::Graph;
using c48::GraphInput;
using c48::GraphSource;
using c48::HarnessOptions;
using c48::RunSummary;
using c48::VerificationRecord;

namespace {

GraphSource vector_source(std::vector<GraphInput> items) {
    auto idx = std::make_shared<std::size_t>(0);
    auto data = std::make_shared<std::vector<GraphInput>>(std::move(items));
    return [idx, data]() -> std::optional<GraphInput> {
        if (*idx >= data->size()) return std::nullopt;
        return (*data)[(*idx)++];
    };
}

}  // namespace

TEST_CASE("record serialization") {
    VerificationRecord r;
    r.graph_index = 3;
    r.graph_id = "C~";
    r.n = 4;
    r.m = 6;
    r.precondition = c48::PreconditionReport{1, 3, false};
    r.branch = "skipped";
    CHECK(c48::serialize_record(r, c48::ReportFormat::json) ==
          R"({"graph_index":3,"graph_id":"C~","n":4,"m":6,)"
          R"("precondition":{"diameter":1,"min_degree":3,"satisfied":false},)"
          R"("branch":"skipped","witness":null,"oracle_agrees":null,"elapsed_micros":0})");
    CHECK(c48::serialize_record(r, c48::ReportFormat::tsv) ==
          "3\tC~\t4\t6\t1\t3\tfalse\tskipped\t-\t-\t0\t-");

    r.witness = c48::CycleWitness{{0, 3, 1, 4}};
    r.oracle_agrees = true;
    r.branch = "Case2-Contradiction-C4";
    std::string tsv = c48::serialize_record(r, c48::ReportFormat::tsv);
    CHECK(tsv.find("0,3,1,4") != std::string::npos);
    CHECK(tsv.find("true") != std::string::npos);
}

TEST_CASE("run_verify over fixtures") {
    std::ostringstream out;
    HarnessOptions opts;
    opts.oracle = c48::OracleMode::on;
    auto summary = c48::run_verify(
        vector_source({c48::fixture("petersen"), c48::fixture("k33"),
                       c48::fixture("k4")}),
        opts, out);
    CHECK(summary.graphs == 3);
    CHECK(summary.skipped == 1);  // K4 has diameter 1
    CHECK(summary.errors == 0);
    CHECK(summary.counterexample_count == 0);
    CHECK(summary.branch_totals.at("Case2-C8") == 1);
    CHECK(summary.branch_totals.at("Case2-Contradiction-C4") == 1);
    CHECK(c48::exit_code_for(summary) == 0);

    std::string text = out.str();
    CHECK(text.find("\"oracle_agrees\":true") != std::string::npos);
    CHECK(text.find("\"summary\"") != std::string::npos);
    // stable record order: petersen first
    CHECK(text.find("IheA@GUAo") < text.find("EFz_"));
}

TEST_CASE("malformed lines: lenient records vs strict throw") {
    std::vector<GraphInput> items{std::string("C~"), std::string("C"),
                                  std::string("EFz_")};
    std::ostringstream out;
    HarnessOptions opts;
    auto summary = c48::run_verify(vector_source(items), opts, out);
    CHECK(summary.graphs == 3);
    CHECK(summary.errors == 1);
    CHECK(out.str().find("\"branch\":\"error\"") != std::string::npos);

    opts.strict = true;
    std::ostringstream out2;
    CHECK_THROWS_AS(c48::run_verify(vector_source(items), opts, out2),
                    c48::parse_error);
}

TEST_CASE("output bytes are identical across job counts") {
    auto make_items = [] {
        std::vector<GraphInput> items;
        c48::GenSpec spec;
        spec.mode = c48::GenSpec::Mode::random;
        spec.n = 10;
        spec.edge_probability = 0.5;
        spec.seed = 42;
        spec.count = 60;
        c48::RandomGraphStream stream(spec);
        while (auto g = stream.next()) items.emplace_back(*g);
        items.emplace_back(std::string("not-a-graph6-line\x01"));
        items.emplace_back(c48::fixture("petersen"));
        return items;
    };
    for (auto report : {c48::ReportFormat::json, c48::ReportFormat::tsv}) {
        std::string baseline;
        for (int jobs : {1, 2, 4}) {
            HarnessOptions opts;
            opts.jobs = jobs;
            opts.report = report;
            opts.oracle = c48::OracleMode::on;
            std::ostringstream out;
            c48::run_verify(vector_source(make_items()), opts, out);
            if (jobs == 1)
                baseline = out.str();
            else
                CHECK(out.str() == baseline);
        }
    }
}

TEST_CASE("strict failure propagates from worker threads") {
    std::vector<GraphInput> items(20, GraphInput{std::string("C~")});
    items.emplace_back(std::string("C"));
    HarnessOptions opts;
    opts.strict = true;
    opts.jobs = 4;
    std::ostringstream out;
    CHECK_THROWS_AS(c48::run_verify(vector_source(items), opts, out),
                    c48::parse_error);
}

TEST_CASE("scan-eg branches") {
    std::ostringstream out;
    HarnessOptions opts;
    opts.max_exp = 3;
    Graph triangle_pad = Graph::from_edge_list(
        4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});  // min degree 1: skipped
    Graph k4_plus = c48::fixture("k4");
    auto summary = c48::run_scan_eg(
        vector_source({c48::fixture("petersen"), k4_plus, triangle_pad}),
        opts, out);
    CHECK(summary.graphs == 3);
    CHECK(summary.skipped == 1);
    CHECK(summary.branch_totals.at("exp-3") == 1);  // Petersen: C8, no C4
    CHECK(summary.branch_totals.at("exp-2") == 1);  // K4 has a C4

    // Petersen has girth 5, so capping the scan at exp 2 flags it.
    std::ostringstream out2;
    HarnessOptions low;
    low.max_exp = 2;
    auto s2 = c48::run_scan_eg(vector_source({c48::fixture("petersen")}), low, out2);
    CHECK(s2.branch_totals.at("flagged-max-exp-2") == 1);
}
