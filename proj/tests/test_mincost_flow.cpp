#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "certlab/mincost_flow.hpp"
#include "certlab/rng.hpp"

using namespace certlab;
using flow::AssignmentProblem;

TEST_CASE("single candidate edge is selected") {
    AssignmentProblem p;
    p.supplies = {1};
    p.demands = {1};
    p.candidates.push_back({0, 0, 5});
    auto chosen = assign_block(p);
    REQUIRE(chosen.size() == 1);
    CHECK(chosen[0] == std::pair<int, int>{0, 0});
}

TEST_CASE("costs steer a 2x2 block to the diagonal") {
    AssignmentProblem p;
    p.supplies = {1, 1};
    p.demands = {1, 1};
    p.candidates.push_back({0, 0, -10});
    p.candidates.push_back({0, 1, 0});
    p.candidates.push_back({1, 0, 0});
    p.candidates.push_back({1, 1, -10});
    auto chosen = assign_block(p);
    REQUIRE(chosen.size() == 2);
    CHECK(chosen[0] == std::pair<int, int>{0, 0});
    CHECK(chosen[1] == std::pair<int, int>{1, 1});
}

TEST_CASE("max flow beats cheap partial flow") {
    // taking only the cheap edge would block the second unit
    AssignmentProblem p;
    p.supplies = {1, 1};
    p.demands = {1, 1};
    p.candidates.push_back({0, 0, -100});
    p.candidates.push_back({0, 1, 50});
    p.candidates.push_back({1, 0, 60});
    auto chosen = assign_block(p);
    REQUIRE(chosen.size() == 2);
    CHECK(chosen[0] == std::pair<int, int>{0, 1});
    CHECK(chosen[1] == std::pair<int, int>{1, 0});
}

TEST_CASE("feasible blocks meet every supply and demand exactly") {
    Rng rng(606);
    for (int iter = 0; iter < 200; ++iter) {
        const int left = 2 + static_cast<int>(rng.below(4));
        const int right = 2 + static_cast<int>(rng.below(4));
        AssignmentProblem p;
        p.supplies.assign(left, 0);
        p.demands.assign(right, 0);
        // sample a target 0-1 matrix, derive exact supplies/demands from it
        std::vector<std::vector<int>> target(left, std::vector<int>(right, 0));
        for (int i = 0; i < left; ++i)
            for (int j = 0; j < right; ++j)
                if (rng.next_double() < 0.5) {
                    target[i][j] = 1;
                    ++p.supplies[i];
                    ++p.demands[j];
                }
        for (int i = 0; i < left; ++i)
            for (int j = 0; j < right; ++j)
                p.candidates.push_back({i, j, static_cast<long long>(rng.below(100)) - 50});
        auto chosen = assign_block(p);
        std::vector<int> got_supply(left, 0), got_demand(right, 0);
        for (auto [i, j] : chosen) {
            ++got_supply[i];
            ++got_demand[j];
        }
        CHECK(got_supply == p.supplies);
        CHECK(got_demand == p.demands);
    }
}

TEST_CASE("infeasible block returns a partial assignment") {
    AssignmentProblem p;
    p.supplies = {2, 1};
    p.demands = {1, 1};
    p.candidates.push_back({0, 0, 0});
    p.candidates.push_back({0, 1, 0});
    p.candidates.push_back({1, 0, 0});
    auto chosen = assign_block(p);
    CHECK(chosen.size() == 2);  // max flow is 2 < total supply 3
}
