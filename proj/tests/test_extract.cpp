#include <doctest.h>

#include <random>
#include <set>

#include "c48/extract.hpp"
#include "c48/generate.hpp"
#include "reference.hpp"

using c48::Branch;
using c48::CaseTag;
using c48::ExtractionResult;
using c48::Graph;

namespace {

// Branch-aware structural checks shared by the property tests.
void check_result(const Graph& g, const ExtractionResult& res) {
    CHECK(c48::verify_witness(g, res.witness));
    const int len = res.witness.length();
    CHECK((len == 4 || len == 8));

    const auto& roles = res.trace.roles;
    switch (res.trace.branch) {
        case Branch::case1_contradiction_c4:
        case Branch::case1_c8: {
            REQUIRE(roles.count("v1"));
            REQUIRE(roles.count("v2"));
            REQUIRE(roles.count("a"));
            auto cn = g.common_neighbors(roles.at("v1"), roles.at("v2"));
            CHECK(std::find(cn.begin(), cn.end(), roles.at("a")) != cn.end());
            break;
        }
        case Branch::case2_contradiction_c4:
        case Branch::case2_c8: {
            REQUIRE(roles.count("v1"));
            REQUIRE(roles.count("v2"));
            CHECK(g.common_neighbors(roles.at("v1"), roles.at("v2")).empty());
            break;
        }
        case Branch::fallback_oracle:
            break;
    }
    if (res.trace.branch == Branch::case1_c8 || res.trace.branch == Branch::case2_c8)
        CHECK(len == 8);
    else if (res.trace.branch != Branch::fallback_oracle)
        CHECK(len == 4);

    // Trace-witness consistency: C8 branches carry the construction's
    // exact cyclic role order.
    if (res.trace.branch == Branch::case2_c8) {
        std::vector<int> order;
        for (const char* r : {"v1", "a", "x", "c", "v2", "d", "y", "b"})
            order.push_back(roles.at(r));
        CHECK(c48::canonical_witness({order}) == res.witness);
        CHECK(std::set<int>(order.begin(), order.end()).size() == 8);
    }
    if (res.trace.branch == Branch::case1_c8) {
        std::vector<int> order;
        bool mirror = !g.adjacent(roles.at("w4"), roles.at("w1"));
        if (!mirror)
            for (const char* r : {"w4", "w2", "v6", "d", "v2", "v1", "b", "w1"})
                order.push_back(roles.at(r));
        else
            for (const char* r : {"w4", "w2", "v6", "b", "v1", "v2", "d", "w3"})
                order.push_back(roles.at(r));
        CHECK(c48::canonical_witness({order}) == res.witness);
    }
}

}  // namespace

TEST_CASE("classify_edge") {
    // triangle 0-1-2 with pendant degree padding
    Graph tri = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
    CHECK(c48::classify_edge(tri, 0, 1) == CaseTag::case1);
    CHECK_THROWS_AS(c48::classify_edge(tri, 0, 4), c48::input_error);

    Graph p = c48::fixture("petersen");
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (p.adjacent(u, v)) CHECK(c48::classify_edge(p, u, v) == CaseTag::case2);
}

TEST_CASE("extract on K33 short-circuits to a C4") {
    auto res = c48::extract(c48::fixture("k33"));
    CHECK(res.trace.branch == Branch::case2_contradiction_c4);
    CHECK(res.witness.vertices == std::vector<int>{0, 3, 1, 4});
    check_result(c48::fixture("k33"), res);
}

TEST_CASE("extract on Petersen: Case2-C8") {
    Graph p = c48::fixture("petersen");
    auto res = c48::extract(p);
    CHECK(res.trace.branch == Branch::case2_c8);
    CHECK(res.witness.vertices == std::vector<int>{0, 4, 3, 2, 1, 6, 8, 5});
    check_result(p, res);
    // extract_with_fallback passes through untouched
    auto fb = c48::extract_with_fallback(p);
    CHECK(fb.witness == res.witness);
    CHECK(fb.trace.branch == res.trace.branch);
}

TEST_CASE("figure-5 fixture: Case1-C8 with the drawn roles") {
    Graph g = c48::fixture("figure5-case1");
    auto res = c48::extract(g);
    CHECK(res.trace.branch == Branch::case1_c8);
    const auto& r = res.trace.roles;
    CHECK(r.at("v1") == 0);
    CHECK(r.at("v2") == 1);
    CHECK(r.at("a") == 2);
    CHECK(r.at("b") == 3);
    CHECK(r.at("d") == 4);
    CHECK(r.at("v6") == 5);
    CHECK(r.at("w1") == 6);
    CHECK(r.at("w2") == 7);
    CHECK(r.at("w3") == 8);
    CHECK(r.at("w4") == 9);
    // (w4,w2,v6,d,v2,v1,b,w1) = (9,7,5,4,1,0,3,6), canonicalized
    CHECK(res.witness ==
          c48::canonical_witness({{9, 7, 5, 4, 1, 0, 3, 6}}));
    REQUIRE(res.trace.base_c6.has_value());
    CHECK(*res.trace.base_c6 == std::array<int, 6>{0, 3, 5, 4, 1, 2});
    check_result(g, res);
}

TEST_CASE("figure-6 fixture: Case2-C8 with the drawn roles") {
    Graph g = c48::fixture("figure6-case2");
    auto res = c48::extract(g);
    CHECK(res.trace.branch == Branch::case2_c8);
    const auto& r = res.trace.roles;
    CHECK(r.at("v1") == 0);
    CHECK(r.at("v2") == 1);
    CHECK(r.at("a") == 2);
    CHECK(r.at("b") == 3);
    CHECK(r.at("c") == 4);
    CHECK(r.at("d") == 5);
    CHECK(r.at("x") == 6);
    CHECK(r.at("y") == 7);
    // (v1,a,x,c,v2,d,y,b) = (0,2,6,4,1,5,7,3), already canonical
    CHECK(res.witness.vertices == std::vector<int>{0, 2, 6, 4, 1, 5, 7, 3});
    check_result(g, res);
}

TEST_CASE("case1 contradiction branches") {
    // b~d closes the C4 (b,v1,v2,d)
    Graph g1 = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {3, 4}});
    auto r1 = c48::case1_extract(g1, 0, 1, 2);
    REQUIRE(r1.has_value());
    CHECK(r1->trace.branch == Branch::case1_contradiction_c4);
    CHECK(r1->witness == c48::canonical_witness({{3, 0, 1, 4}}));

    // a second common neighbor a' gives (v1,a,v2,a')
    Graph g2 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    auto r2 = c48::case1_extract(g2, 0, 1, 2);
    REQUIRE(r2.has_value());
    CHECK(r2->trace.branch == Branch::case1_contradiction_c4);
    CHECK(r2->witness == c48::canonical_witness({{0, 2, 1, 3}}));

    CHECK_THROWS_AS(c48::case1_extract(g2, 0, 3, 2), c48::input_error);
}

TEST_CASE("case2 contradiction branches") {
    // a~c present: C4 (a,c,v2,v1)
    Graph g = Graph::from_edge_list(6,
        {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}});
    auto r = c48::case2_extract(g, 0, 1);
    REQUIRE(r.has_value());
    CHECK(r->trace.branch == Branch::case2_contradiction_c4);
    CHECK(r->witness == c48::canonical_witness({{2, 4, 1, 0}}));

    Graph tri = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(c48::case2_extract(tri, 0, 1), c48::input_error);
}

TEST_CASE("precondition errors name the violated hypothesis") {
    Graph path = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(c48::extract(path), c48::precondition_error);
    try {
        c48::extract_with_fallback(path);
        FAIL("expected precondition_error");
    } catch (const c48::precondition_error& e) {
        CHECK(e.min_degree == 1);
        CHECK(e.diameter == 3);
    }
}

TEST_CASE("exhaustive property at n<=6 plus random sampling") {
    int seen = 0;
    c48::enumerate_labeled(6, c48::GenFilter::theorem_preconditions,
                           [&](const Graph& g) {
                               auto res = c48::extract_with_fallback(g);
                               check_result(g, res);
                               // determinism on a copy
                               Graph copy = g;
                               auto res2 = c48::extract_with_fallback(copy);
                               CHECK(res2.witness == res.witness);
                               ++seen;
                               return true;
                           });
    CHECK(seen > 0);

    std::mt19937_64 rng(1234);
    int tested = 0;
    while (tested < 200) {
        int n = 8 + static_cast<int>(rng() % 6);
        Graph g = c48ref::random_graph(rng, n, 0.5);
        if (!c48::precondition_report(g).satisfied) continue;
        auto res = c48::extract_with_fallback(g);
        check_result(g, res);
        ++tested;
    }
}
