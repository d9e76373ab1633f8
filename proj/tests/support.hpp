#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pickqubo/instance.hpp"
#include "pickqubo/qubo.hpp"

namespace testing {

inline pickqubo::Instance make_instance(const std::vector<std::vector<double>>& d,
                                        const std::vector<double>& product_weights, int robots, int capacity,
                                        std::string name = "test") {
    const std::size_t size = d.size();
    pickqubo::DistanceMatrix matrix(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) matrix(i, j) = d[i][j];
    }
    std::vector<pickqubo::Node> nodes;
    nodes.push_back({0, std::nullopt, 0.0});
    for (std::size_t i = 0; i < product_weights.size(); ++i) {
        nodes.push_back({static_cast<int>(i + 1), std::nullopt, product_weights[i]});
    }
    return pickqubo::Instance::create(std::move(name), std::move(nodes), std::move(matrix), robots, capacity,
                                      pickqubo::Metric::explicit_matrix);
}

// d01 = 1, d02 = 2, d12 = 3.
inline pickqubo::Instance triangle(const std::vector<double>& weights = {1, 1}, int robots = 1, int capacity = 15) {
    return make_instance({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}, weights, robots, capacity, "triangle");
}

inline pickqubo::Instance single_product(double d01 = 4.0, double weight = 1.0, int capacity = 1) {
    return make_instance({{0, d01}, {d01, 0}}, {weight}, 1, capacity, "single");
}

// Symmetric integer matrix closed under shortest paths, so it satisfies the triangle inequality.
inline std::vector<std::vector<double>> random_metric(int size, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, 9);
    std::vector<std::vector<double>> d(size, std::vector<double>(size, 0.0));
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) d[i][j] = d[j][i] = pick(rng);
    }
    for (int k = 0; k < size; ++k) {
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    return d;
}

inline pickqubo::QuboModel random_qubo(int num_vars, std::mt19937_64& rng, double density = 0.6) {
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    pickqubo::QuboBuilder builder(num_vars);
    for (int i = 0; i < num_vars; ++i) {
        if (unit(rng) < density) builder.add_linear(i, coeff(rng));
        for (int j = i + 1; j < num_vars; ++j) {
            if (unit(rng) < density) builder.add_quadratic(i, j, coeff(rng));
        }
    }
    builder.add_offset(coeff(rng));
    return builder.build();
}

}  // namespace testing
