#include "c48/harness.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace c48 {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kOracleAutoCap = 100'000;

std::string witness_csv(const CycleWitness& w) {
    std::string s;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(w.vertices[i]);
    }
    return s;
}

ordered_json precondition_json(const PreconditionReport& rep) {
    ordered_json j;
    j["diameter"] = rep.diameter ? ordered_json(*rep.diameter) : ordered_json(nullptr);
    j["min_degree"] = rep.min_degree;
    j["satisfied"] = rep.satisfied;
    return j;
}

}  // namespace

std::string serialize_record(const VerificationRecord& r, ReportFormat f) {
    if (f == ReportFormat::json) {
        ordered_json j;
        j["graph_index"] = r.graph_index;
        j["graph_id"] = r.graph_id;
        j["n"] = r.n;
        j["m"] = r.m;
        j["precondition"] = r.precondition ? precondition_json(*r.precondition) : ordered_json(nullptr);
        j["branch"] = r.branch;
        j["witness"] = r.witness ? ordered_json(r.witness->vertices) : ordered_json(nullptr);
        j["oracle_agrees"] = r.oracle_agrees ? ordered_json(*r.oracle_agrees) : ordered_json(nullptr);
        j["elapsed_micros"] = r.elapsed_micros;
        if (r.error) j["error"] = *r.error;
        return j.dump();
    }
    // Fixed tsv column order.
    std::ostringstream s;
    s << r.graph_index << '\t' << r.graph_id << '\t' << r.n << '\t' << r.m << '\t';
    if (r.precondition) {
        s << (r.precondition->diameter ? std::to_string(*r.precondition->diameter)
                                       : std::string("inf"))
          << '\t' << r.precondition->min_degree << '\t'
          << (r.precondition->satisfied ? "true" : "false");
    } else {
        s << "-\t-\t-";
    }
    s << '\t' << r.branch << '\t' << (r.witness ? witness_csv(*r.witness) : "-") << '\t';
    if (r.oracle_agrees)
        s << (*r.oracle_agrees ? "true" : "false");
    else
        s << "-";
    s << '\t' << r.elapsed_micros << '\t' << (r.error ? *r.error : "-");
    return s.str();
}

std::string serialize_summary(const RunSummary& s, ReportFormat f) {
    if (f == ReportFormat::json) {
        ordered_json totals = ordered_json::object();
        for (const auto& [k, v] : s.branch_totals) totals[k] = v;
        ordered_json j;
        j["summary"] = {{"graphs", s.graphs},
                        {"skipped", s.skipped},
                        {"errors", s.errors},
                        {"branch_totals", totals},
                        {"counterexample_count", s.counterexample_count},
                        {"fallback_rate", s.fallback_rate},
                        {"wall_micros", s.wall_micros}};
        return j.dump();
    }
    std::ostringstream out;
    out << "# summary graphs=" << s.graphs << " skipped=" << s.skipped
        << " errors=" << s.errors << " counterexamples=" << s.counterexample_count
        << " fallback_rate=" << s.fallback_rate << " wall_micros=" << s.wall_micros;
    for (const auto& [k, v] : s.branch_totals) out << ' ' << k << '=' << v;
    return out.str();
}

int exit_code_for(const RunSummary& s) {
    if (s.counterexample_count > 0) return 2;
    return 0;
}

namespace {

struct WorkItem {
    std::uint64_t index;
    GraphInput input;
};

// Single reader, pooled workers, single writer restoring input order.
// Record content is deterministic, so parallelism never shows in output.
class OrderedPipeline {
public:
    OrderedPipeline(int jobs, std::function<VerificationRecord(WorkItem&&)> work,
                    std::function<void(VerificationRecord&&)> write)
        : work_(std::move(work)), write_(std::move(write)) {
        const int threads = std::max(1, jobs);
        bound_ = static_cast<std::size_t>(std::max(64, 4 * threads));
        workers_.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
            workers_.emplace_back([this] { worker_loop(); });
    }

    void push(WorkItem item) {
        {
            std::unique_lock lk(mu_);
            cv_space_.wait(lk, [&] { return pending_.size() < bound_ || failed_; });
            if (failed_) drain_failure(lk);
            pending_.push_back(std::move(item));
        }
        cv_work_.notify_one();
        drain_ready();
    }

    void finish() {
        {
            std::lock_guard lk(mu_);
            done_reading_ = true;
        }
        cv_work_.notify_all();
        for (auto& t : workers_) t.join();
        std::unique_lock lk(mu_);
        if (failed_) drain_failure(lk);
        lk.unlock();
        drain_ready();
    }

private:
    void worker_loop() {
        while (true) {
            WorkItem item{0, std::string()};
            {
                std::unique_lock lk(mu_);
                cv_work_.wait(lk, [&] { return !pending_.empty() || done_reading_ || failed_; });
                if (failed_) return;
                if (pending_.empty()) return;  // done_reading_
                item = std::move(pending_.front());
                pending_.pop_front();
            }
            cv_space_.notify_one();
            try {
                auto rec = work_(std::move(item));
                std::lock_guard lk(mu_);
                finished_.emplace(rec.graph_index, std::move(rec));
            } catch (...) {
                std::lock_guard lk(mu_);
                failed_ = true;
                if (!failure_) failure_ = std::current_exception();
                cv_work_.notify_all();
                cv_space_.notify_all();
            }
        }
    }

    void drain_ready() {
        std::unique_lock lk(mu_);
        while (true) {
            auto it = finished_.find(next_emit_);
            if (it == finished_.end()) break;
            VerificationRecord rec = std::move(it->second);
            finished_.erase(it);
            ++next_emit_;
            lk.unlock();
            write_(std::move(rec));
            lk.lock();
        }
    }

    void drain_failure(std::unique_lock<std::mutex>& lk) {
        auto ex = failure_;
        lk.unlock();
        for (auto& t : workers_)
            if (t.joinable()) t.join();
        std::rethrow_exception(ex);
    }

    std::function<VerificationRecord(WorkItem&&)> work_;
    std::function<void(VerificationRecord&&)> write_;
    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_work_, cv_space_;
    std::deque<WorkItem> pending_;
    std::map<std::uint64_t, VerificationRecord> finished_;
    std::uint64_t next_emit_ = 0;
    std::size_t bound_ = 64;
    bool done_reading_ = false;
    bool failed_ = false;
    std::exception_ptr failure_;
};

bool oracle_enabled(const HarnessOptions& opts, std::uint64_t index) {
    switch (opts.oracle) {
        case OracleMode::on: return true;
        case OracleMode::off: return false;
        case OracleMode::auto_mode:
            if (opts.stream_size_hint > 0) return opts.stream_size_hint <= kOracleAutoCap;
            return index < kOracleAutoCap;
    }
    return false;
}

struct PreparedGraph {
    std::optional<Graph> graph;
    std::string graph_id;
    std::optional<std::string> error;
};

PreparedGraph prepare(const GraphInput& input, bool strict) {
    PreparedGraph p;
    if (std::holds_alternative<Graph>(input)) {
        p.graph = std::get<Graph>(input);
        p.graph_id = encode_graph6(*p.graph);
        return p;
    }
    const std::string& line = std::get<std::string>(input);
    try {
        p.graph = parse_graph6(line);
        p.graph_id = encode_graph6(*p.graph);
    } catch (const parse_error& e) {
        if (strict) throw;
        p.error = e.what();
        p.graph_id = line;
    }
    return p;
}

template <typename Fn>
std::uint64_t timed_micros(bool timing, Fn&& fn) {
    if (!timing) {
        fn();
        return 0;
    }
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
}

RunSummary run_pipeline(const GraphSource& source, const HarnessOptions& opts,
                        std::ostream& out,
                        const std::function<VerificationRecord(WorkItem&&)>& work) {
    RunSummary summary;
    auto t0 = std::chrono::steady_clock::now();
    auto write = [&](VerificationRecord&& rec) {
        out << serialize_record(rec, opts.report) << '\n';
        ++summary.graphs;
        if (rec.branch == "skipped")
            ++summary.skipped;
        else if (rec.branch == "error")
            ++summary.errors;
        else
            ++summary.branch_totals[rec.branch];
        if (rec.counterexample) ++summary.counterexample_count;
        if (rec.branch == branch_name(Branch::fallback_oracle)) ++summary.fallback_count;
    };

    std::uint64_t index = 0;
    if (opts.jobs <= 1) {
        while (auto input = source()) {
            write(work(WorkItem{index, std::move(*input)}));
            ++index;
        }
    } else {
        OrderedPipeline pipe(opts.jobs, work, write);
        while (auto input = source()) {
            pipe.push(WorkItem{index, std::move(*input)});
            ++index;
        }
        pipe.finish();
    }

    const std::uint64_t extracted =
        summary.graphs - summary.skipped - summary.errors;
    summary.fallback_rate =
        extracted ? static_cast<double>(summary.fallback_count) / static_cast<double>(extracted)
                  : 0.0;
    if (opts.timing) {
        auto t1 = std::chrono::steady_clock::now();
        summary.wall_micros = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    }
    out << serialize_summary(summary, opts.report) << '\n';
    return summary;
}

}  // namespace

RunSummary run_verify(const GraphSource& source, const HarnessOptions& opts,
                      std::ostream& out) {
    auto work = [&opts](WorkItem&& item) {
        VerificationRecord rec;
        rec.graph_index = item.index;
        PreparedGraph p = prepare(item.input, opts.strict);
        rec.graph_id = p.graph_id;
        if (p.error) {
            rec.branch = "error";
            rec.error = p.error;
            return rec;
        }
        const Graph& g = *p.graph;
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        rec.elapsed_micros = timed_micros(opts.timing, [&] {
            rec.precondition = precondition_report(g);
            if (!rec.precondition->satisfied) {
                rec.branch = "skipped";
                return;
            }
            try {
                ExtractionResult res = extract_with_fallback(g);
                if (!verify_witness(g, res.witness))
                    throw extraction_error("internal: emitted witness failed validation");
                rec.branch = branch_name(res.trace.branch);
                rec.witness = res.witness;
                if (oracle_enabled(opts, item.index)) {
                    bool c4 = find_cycle_of_length(g, 4).status == SearchStatus::found;
                    bool c8 = !c4 && find_cycle_of_length(g, 8).status == SearchStatus::found;
                    rec.oracle_agrees = (c4 || c8);
                }
            } catch (const counterexample_error& e) {
                rec.branch = "error";
                rec.error = e.what();
                rec.counterexample = true;
            }
        });
        return rec;
    };
    return run_pipeline(source, opts, out, work);
}

RunSummary run_scan_eg(const GraphSource& source, const HarnessOptions& opts,
                       std::ostream& out) {
    auto work = [&opts](WorkItem&& item) {
        VerificationRecord rec;
        rec.graph_index = item.index;
        PreparedGraph p = prepare(item.input, opts.strict);
        rec.graph_id = p.graph_id;
        if (p.error) {
            rec.branch = "error";
            rec.error = p.error;
            return rec;
        }
        const Graph& g = *p.graph;
        rec.n = g.vertex_count();
        rec.m = g.edge_count();
        rec.elapsed_micros = timed_micros(opts.timing, [&] {
            if (!passes_filter(g, GenFilter::min_degree_3)) {
                rec.branch = "skipped";
                return;
            }
            auto found = smallest_power_of_two_cycle(g, opts.max_exp);
            if (found) {
                rec.branch = "exp-" + std::to_string(found->exponent);
                rec.witness = found->witness;
            } else {
                // Cap-bounded negative: conjecture-relevant, not a refutation.
                rec.branch = "flagged-max-exp-" + std::to_string(opts.max_exp);
            }
        });
        return rec;
    };
    return run_pipeline(source, opts, out, work);
}

} // namespace c48
