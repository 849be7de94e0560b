#ifndef C48_GENERATE_HPP
#define C48_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c48/graph.hpp"

namespace c48 {

enum class GenFilter { none, theorem_preconditions, min_degree_3 };

bool passes_filter(const Graph& g, GenFilter f);

/// Fully specified xorshift64* generator so streams reproduce across
/// platforms and languages. Update: x ^= x >> 12; x ^= x << 25;
/// x ^= x >> 27; output x * 0x2545F4914F6CDD1D. A zero seed maps to
/// 0x9E3779B97F4A7C15 (the state must be nonzero).
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct GenSpec {
    enum class Mode { exhaustive, random, fixture };
    Mode mode = Mode::random;
    int n = 0;
    double edge_probability = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    GenFilter filter = GenFilter::none;
    std::string fixture_name;
};

/// All 2^(n(n-1)/2) labeled graphs in edge-mask order, filtered; bit i
/// of the mask is pair i in graph6 column order. n <= 8.
class LabeledEnumerator {
public:
    LabeledEnumerator(int n, GenFilter filter);
    std::optional<Graph> next();

private:
    GenFilter filter_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
    GraphBuilder builder_;
};

/// Callback form of the above; the callback returns false to stop early.
void enumerate_labeled(int n, GenFilter filter,
                       const std::function<bool(const Graph&)>& emit);

/// Seeded G(n,p) stream with rejection filtering. Edges are drawn in
/// graph6 column order, one 53-bit uniform per pair. 10^6 consecutive
/// rejections raise progress_error.
class RandomGraphStream {
public:
    explicit RandomGraphStream(const GenSpec& spec);
    std::optional<Graph> next();

private:
    GenSpec spec_;
    Xorshift64Star rng_;
    std::uint64_t emitted_ = 0;
};

/// Named fixture graphs: petersen, k33, k4, figure5-case1, figure6-case2.
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

} // namespace c48

#endif
