#include "pickqubo/scenarios.hpp"

#include <vector>

namespace pickqubo {

namespace {

Instance positioned(std::string name, const std::vector<Point>& positions, const std::vector<double>& weights,
                    int robots, int capacity, Metric metric) {
    std::vector<Node> nodes;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        nodes.push_back({static_cast<int>(k), positions[k], weights[k]});
    }
    return Instance::create(std::move(name), std::move(nodes), build_distance_matrix(positions, metric), robots,
                            capacity, metric);
}

}  // namespace

Instance fig5_instance() {
    return positioned("fig5", {{0, 0}, {2, 5}, {6, 4}, {5, -2}, {-3, 3}}, {0, 8, 8, 3, 3}, 3, 45,
                      Metric::euclidean);
}

Instance fig7_instance() {
    return positioned("fig7", {{0, 0}, {1, 3}, {2, 7}, {4, 5}, {6, 8}, {7, 2}, {3, 1}, {5, 4}},
                      {0, 8, 8, 3, 3, 1, 2, 4}, 4, 45, Metric::manhattan);
}

}  // namespace pickqubo
