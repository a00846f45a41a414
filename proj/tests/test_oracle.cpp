#include <catch2/catch_amalgamated.hpp>

#include "netpart/branch_and_bound.hpp"
#include "netpart/formulation.hpp"
#include "netpart/oracle.hpp"
#include "support.hpp"

using namespace netpart;
using testsupport::simple_problem;

TEST_CASE("single block: serving beats shedding at nu=0.9") {
    PartitionProblem p;
    Block b;
    b.id = 0;
    b.providers.push_back({"g", 0.0, 5.0, 1.0, true});
    b.consumers.push_back({"m", 3.0});
    p.blocks.push_back(b);
    p.nu = 0.9;
    p.validate();

    auto res = enumerate_optimal(p);
    REQUIRE(res.feasible);
    // serving: 0.1*3 = 0.3 beats shedding: 0.9*1
    CHECK_THAT(res.objective, Catch::Matchers::WithinAbs(0.3, 1e-9));
    REQUIRE(res.optima.size() == 1);
    CHECK(res.optima[0].block_active[0] == 1);
    CHECK(res.optima[0].leader_selected[0] == 1);
    CHECK(res.feasible_count == 2);  // serve-with-leader and full shed
    CHECK(res.enumeration_size == 4);
}

TEST_CASE("two blocks hand enumeration") {
    PartitionProblem p;
    Block b0, b1;
    b0.id = 0;
    b0.providers.push_back({"g", 0.0, 5.0, 1.0, true});
    b0.consumers.push_back({"m0", 2.0});
    b1.id = 1;
    b1.consumers.push_back({"m1", 3.0});
    p.blocks = {b0, b1};
    p.switches.push_back({0, 1, 10.0});
    p.validate();

    auto res = enumerate_optimal(p);
    REQUIRE(res.feasible);
    CHECK_THAT(res.objective, Catch::Matchers::WithinAbs(0.5, 1e-9));  // serve both: 0.1*5
    REQUIRE(res.optima.size() == 1);
    CHECK(res.optima[0].switch_state.closed(0));
    CHECK(res.feasible_count == 4);
    CHECK(res.enumeration_size == 16);
}

TEST_CASE("no optimum of a triangle closes all three switches") {
    auto p = simple_problem(3, {{0, 1}, {1, 2}, {0, 2}});
    auto res = enumerate_optimal(p);
    REQUIRE(res.feasible);
    for (const auto& cfg : res.optima) CHECK(cfg.switch_state.closed_count() <= 2);
}

TEST_CASE("oracle is deterministic") {
    auto p = testsupport::random_problem(5, 2, 99);
    auto a = enumerate_optimal(p);
    auto b = enumerate_optimal(p);
    CHECK(a.objective == b.objective);
    CHECK(a.feasible_count == b.feasible_count);
    REQUIRE(a.optima.size() == b.optima.size());
    for (std::size_t i = 0; i < a.optima.size(); ++i)
        CHECK(a.optima[i].switch_state == b.optima[i].switch_state);
}

TEST_CASE("guard rails refuse oversized instances") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 13; ++i) edges.push_back({i % 4, 4 + i % 3});
    auto p = simple_problem(7, edges);
    CHECK_THROWS_AS(enumerate_optimal(p), std::invalid_argument);
}

TEST_CASE("enumerate_feasible visits exactly feasible_count triples") {
    auto p = simple_problem(4, {{0, 1}, {1, 2}, {2, 3}}, 2);
    p.blocks[2].providers.push_back({"g2", 0.0, 9.0, 1.0, true});
    auto res = enumerate_optimal(p);
    long long visited = 0;
    enumerate_feasible(p, [&](const SwitchState& st, const std::vector<std::uint8_t>& active,
                              const std::vector<std::uint8_t>& leaders) {
        ++visited;
        REQUIRE(feasibility_filter(p, st, active, leaders));
    });
    CHECK(visited == res.feasible_count);
}

TEST_CASE("every optimal configuration passes the feasibility filter") {
    auto p = testsupport::random_problem(6, 3, 1234, 2);
    p.blocks[3].providers.push_back({"g3", 0.0, 30.0, 1.0, true});
    auto res = enumerate_optimal(p);
    REQUIRE(res.feasible);
    for (const auto& cfg : res.optima)
        CHECK(feasibility_filter(p, cfg.switch_state, cfg.block_active, cfg.leader_selected));
}

TEST_CASE("oracle objective equals the full monolithic MIP") {
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        auto p = testsupport::random_problem(4 + seed % 3, 2, 4000 + seed, 1 + seed % 2);
        if (seed % 2 == 0) p.blocks[1].providers.push_back({"gx", 0.0, 20.0, 1.0, true});
        auto oracle = enumerate_optimal(p);
        auto [model, vars] = build_model(p, BuildMode::Full);
        auto mip = solve_mip(model);
        REQUIRE(oracle.feasible);
        REQUIRE(mip.status == MipStatus::Optimal);
        INFO("seed " << seed);
        REQUIRE_THAT(mip.objective, Catch::Matchers::WithinAbs(oracle.objective, 1e-6));
    }
}
