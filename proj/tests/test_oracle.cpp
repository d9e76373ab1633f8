#include <doctest.h>

#include <random>

#include "pickqubo/decode.hpp"
#include "pickqubo/errors.hpp"
#include "pickqubo/oracle.hpp"
#include "pickqubo/scenarios.hpp"
#include "support.hpp"

using namespace pickqubo;

TEST_CASE("small optima") {
    SUBCASE("one product") {
        const OracleResult r = oracle_optimum(testing::single_product(4.0, 1.0, 1));
        CHECK(r.optimal_distance == 8.0);
        CHECK(r.routes == std::vector<Route>{{0, 1, 0}});
    }
    SUBCASE("two products, both orders tie") {
        const OracleResult r = oracle_optimum(testing::triangle({1, 1}, 1, 15));
        CHECK(r.optimal_distance == 6.0);
        CHECK(r.routes == std::vector<Route>{{0, 1, 2, 0}});
    }
    SUBCASE("capacity forces a split") {
        const OracleResult r = oracle_optimum(testing::triangle({5, 5}, 2, 5));
        CHECK(r.optimal_distance == 2.0 * 1 + 2.0 * 2);
        CHECK(r.routes == std::vector<Route>{{0, 1, 0}, {0, 2, 0}});
    }
    SUBCASE("spare robots stay parked") {
        const OracleResult r = oracle_optimum(testing::triangle({1, 1}, 3, 15));
        CHECK(r.optimal_distance == 6.0);
        CHECK(r.routes == std::vector<Route>{{0, 0}, {0, 0}, {0, 1, 2, 0}});
    }
}

TEST_CASE("oracle routes are feasible and priced correctly") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 5;
        std::vector<double> w(n);
        for (auto& x : w) x = static_cast<double>(1 + rng() % 4);
        const Instance inst = testing::make_instance(testing::random_metric(n + 1, rng), w, 1 + trial % 3, 6);
        OracleResult r;
        try {
            r = oracle_optimum(inst);
        } catch (const Infeasible&) {
            continue;
        }
        CHECK(validate(r.routes, inst).ok());
        double total = 0.0;
        for (const Route& route : r.routes) total += route_distance(route, inst);
        CHECK(total == doctest::Approx(r.optimal_distance).epsilon(1e-12));
    }
}

TEST_CASE("monotone in fleet size and capacity") {
    const Instance fig5 = fig5_instance();
    double previous = 1e300;
    for (int k = 1; k <= 4; ++k) {
        const double d = oracle_optimum(fig5.with_fleet_size(k)).optimal_distance;
        CHECK(d <= previous + 1e-12);
        previous = d;
    }
    std::mt19937_64 rng(6);
    const auto d = testing::random_metric(5, rng);
    double last = 1e300;
    for (int m = 4; m <= 12; ++m) {
        const double value = oracle_optimum(testing::make_instance(d, {4, 3, 2, 2}, 3, m)).optimal_distance;
        CHECK(value <= last + 1e-12);
        last = value;
    }
}

TEST_CASE("scaling distances scales the optimum") {
    const Instance fig5 = fig5_instance().with_fleet_size(2);
    const OracleResult base = oracle_optimum(fig5);
    const OracleResult scaled = oracle_optimum(fig5.scaled(2.5));
    CHECK(scaled.optimal_distance == doctest::Approx(2.5 * base.optimal_distance).epsilon(1e-12));
    CHECK(scaled.routes == base.routes);
}

TEST_CASE("fig5 keeps a single tour for every fleet size") {
    const double one = oracle_optimum(fig5_instance().with_fleet_size(1)).optimal_distance;
    for (int k = 2; k <= 3; ++k) {
        const OracleResult r = oracle_optimum(fig5_instance().with_fleet_size(k));
        CHECK(r.optimal_distance == doctest::Approx(one).epsilon(1e-12));
        CHECK(solution_from_routes(r.routes, fig5_instance().with_fleet_size(k)).robots_used == 1);
    }
}

TEST_CASE("limits and infeasibility") {
    std::mt19937_64 rng(1);
    const Instance big = testing::make_instance(testing::random_metric(10, rng), std::vector<double>(9, 1.0), 1, 20);
    CHECK_THROWS_AS(oracle_optimum(big), TooLarge);
    CHECK_THROWS_AS(oracle_optimum(testing::triangle({1, 1}, 5, 15)), TooLarge);
    CHECK_THROWS_AS(oracle_optimum(testing::triangle({3, 3}, 1, 5)), Infeasible);
    CHECK_THROWS_AS(oracle_optimum(testing::triangle({6, 1}, 2, 5)), Infeasible);
}
