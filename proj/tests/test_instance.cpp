#include <doctest.h>

#include <array>
#include <string>

#include "pickqubo/errors.hpp"
#include "pickqubo/instance.hpp"
#include "pickqubo/scenarios.hpp"
#include "support.hpp"

using namespace pickqubo;

namespace {

std::string error_of(const std::string& text) {
    try {
        load_instance(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kSingle = R"({
  "name": "toy", "capacity": 5, "robots": 1, "metric": "explicit",
  "nodes": [{"id": 0, "weight": 0}, {"id": 1, "weight": 2}],
  "distances": [[0, 4], [4, 0]]
})";

}  // namespace

TEST_CASE("distance matrix from positions") {
    const std::array<Point, 1> one{{{0, 0}}};
    const auto single = build_distance_matrix(one, Metric::euclidean);
    CHECK(single.size() == 1);
    CHECK(single(0, 0) == 0.0);

    const std::array<Point, 2> pair{{{0, 0}, {3, 4}}};
    const auto euclid = build_distance_matrix(pair, Metric::euclidean);
    CHECK(euclid(0, 1) == 5.0);
    CHECK(euclid(1, 0) == 5.0);
    CHECK(euclid(1, 1) == 0.0);

    const auto manhattan = build_distance_matrix(pair, Metric::manhattan);
    CHECK(manhattan(0, 1) == 7.0);
    CHECK(manhattan(1, 0) == 7.0);

    CHECK_THROWS_AS(build_distance_matrix(pair, Metric::explicit_matrix), InvalidInput);
    CHECK_THROWS_AS(build_distance_matrix(std::span<const Point>{}, Metric::euclidean), InvalidInput);
}

TEST_CASE("metric distances satisfy the triangle inequality") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-10, 10);
    std::vector<Point> points(9);
    for (auto& p : points) p = {coord(rng), coord(rng)};
    for (Metric metric : {Metric::euclidean, Metric::manhattan}) {
        const auto d = build_distance_matrix(points, metric);
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                CHECK(d(i, j) == d(j, i));
                for (std::size_t k = 0; k < points.size(); ++k) CHECK(d(i, j) <= d(i, k) + d(k, j) + 1e-12);
            }
        }
    }
}

TEST_CASE("load a minimal explicit document") {
    const Instance inst = load_instance(kSingle);
    CHECK(inst.num_products() == 1);
    CHECK(inst.name() == "toy");
    CHECK(inst.capacity() == 5);
    CHECK(inst.fleet_size() == 1);
    CHECK(inst.metric() == Metric::explicit_matrix);
    CHECK(inst.distance(0, 1) == 4.0);
    CHECK(inst.weight(1) == 2.0);
    CHECK_FALSE(inst.has_positions());
}

TEST_CASE("bundled fig5 fixture") {
    const Instance inst = load_instance_file("data/fig5.json");
    CHECK(inst.num_products() == 4);
    CHECK(inst.capacity() == 45);
    CHECK(inst.fleet_size() == 3);
    CHECK(inst.weight(1) == 8.0);
    CHECK(inst.weight(2) == 8.0);
    CHECK(inst.weight(3) == 3.0);
    CHECK(inst.weight(4) == 3.0);
    CHECK(inst.has_positions());
    CHECK(serialize_instance(inst) == serialize_instance(fig5_instance()));

    const Instance fig7 = load_instance_file("data/fig7.json");
    CHECK(fig7.num_products() == 7);
    CHECK(fig7.total_weight() == 29.0);
    CHECK(serialize_instance(fig7) == serialize_instance(fig7_instance()));
}

TEST_CASE("asymmetric distances name the offending cell") {
    const std::string doc = R"({
      "name": "bad", "capacity": 5, "robots": 1, "metric": "explicit",
      "nodes": [{"id": 0, "weight": 0}, {"id": 1, "weight": 1}, {"id": 2, "weight": 1}],
      "distances": [[0, 1, 2], [1, 0, 3], [2, 4, 0]]
    })";
    CHECK_THROWS_AS(load_instance(doc), ValidationError);
    const std::string message = error_of(doc);
    CHECK(message.find("distances[1][2]") != std::string::npos);
}

TEST_CASE("validation errors") {
    SUBCASE("negative weight") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":-1}],"distances":[[0,1],[1,0]]})")
                  .find("nodes[1].weight") != std::string::npos);
    }
    SUBCASE("non-zero diagonal") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,1],[1,2]]})")
                  .find("distances[1][1]") != std::string::npos);
    }
    SUBCASE("zero robots") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":0,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,1],[1,0]]})")
                  .find("robots") != std::string::npos);
    }
    SUBCASE("ids out of order") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":2,"weight":1}],"distances":[[0,1],[1,0]]})")
                  .find("nodes[1].id") != std::string::npos);
    }
    SUBCASE("depot carries weight") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":3},{"id":1,"weight":1}],"distances":[[0,1],[1,0]]})")
                  .find("nodes[0].weight") != std::string::npos);
    }
    SUBCASE("wrong matrix shape") {
        CHECK_THROWS_AS(load_instance(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,1]]})"),
                        Error);
    }
    SUBCASE("geometric metric needs positions") {
        CHECK(error_of(R"({"name":"x","capacity":5,"robots":1,"metric":"euclidean",
            "nodes":[{"id":0,"weight":0,"pos":[0,0]},{"id":1,"weight":1}]})")
                  .find("nodes[1].pos") != std::string::npos);
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(load_instance(R"({"name":"x","capacity":5,"robots":1,"metric":"explicit","colour":1,
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,1],[1,0]]})"),
                        ParseError);
    }
    SUBCASE("malformed json") { CHECK_THROWS_AS(load_instance("{"), ParseError); }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_instance_file("/nonexistent/instance.json"), ParseError); }
}

TEST_CASE("serialize round trip") {
    for (const Instance& inst : {load_instance(kSingle), fig5_instance(), fig7_instance(), testing::triangle()}) {
        const std::string text = serialize_instance(inst);
        const Instance back = load_instance(text);
        CHECK(serialize_instance(back) == text);
        CHECK(back.num_products() == inst.num_products());
        CHECK(back.nodes() == inst.nodes());
        for (int i = 0; i <= inst.num_products(); ++i) {
            for (int j = 0; j <= inst.num_products(); ++j) CHECK(back.distance(i, j) == inst.distance(i, j));
        }
    }
}

TEST_CASE("fleet override and scaling") {
    const Instance inst = testing::triangle();
    CHECK(inst.with_fleet_size(3).fleet_size() == 3);
    CHECK_THROWS_AS(inst.with_fleet_size(0), ValidationError);
    const Instance doubled = inst.scaled(2.0);
    CHECK(doubled.distance(1, 2) == 6.0);
    CHECK_THROWS_AS(inst.scaled(0.0), InvalidInput);
    CHECK(inst.has_integer_weights());
    CHECK_FALSE(testing::triangle({1.5, 1}).has_integer_weights());
}
