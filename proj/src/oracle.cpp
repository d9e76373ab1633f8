#include "pickqubo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pickqubo/errors.hpp"

namespace pickqubo {

namespace {

struct BestTour {
    bool allowed = false;
    double distance = 0.0;
    Route route;
};

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Shortest depot-to-depot tour over the products in `mask`; permutations are walked in
// lexicographic order so the first minimum found is also the smallest route.
BestTour best_tour(const Instance& instance, unsigned mask) {
    BestTour best;
    double load = 0.0;
    std::vector<int> products;
    for (int i = 1; i <= instance.num_products(); ++i) {
        if (mask & (1U << (i - 1))) {
            products.push_back(i);
            load += instance.weight(i);
        }
    }
    if (load > instance.capacity() + 1e-9) return best;
    best.allowed = true;
    if (products.empty()) {
        best.route = {0, 0};
        return best;
    }
    bool have = false;
    do {
        double d = instance.distance(0, products.front()) + instance.distance(products.back(), 0);
        for (std::size_t k = 0; k + 1 < products.size(); ++k) d += instance.distance(products[k], products[k + 1]);
        if (!have || (d < best.distance && !nearly_equal(d, best.distance))) {
            have = true;
            best.distance = d;
            best.route.assign(1, 0);
            best.route.insert(best.route.end(), products.begin(), products.end());
            best.route.push_back(0);
        }
    } while (std::next_permutation(products.begin(), products.end()));
    return best;
}

}  // namespace

OracleResult oracle_optimum(const Instance& instance) {
    const int n = instance.num_products();
    const int robots = instance.fleet_size();
    if (n > kOracleMaxItems || robots > kOracleMaxRobots) {
        throw TooLarge("oracle: instance too large (n=" + std::to_string(n) + ", K=" + std::to_string(robots) +
                       "; limits n<=" + std::to_string(kOracleMaxItems) +
                       ", K<=" + std::to_string(kOracleMaxRobots) + ")");
    }

    std::vector<BestTour> tours(std::size_t{1} << n);
    for (unsigned mask = 0; mask < tours.size(); ++mask) tours[mask] = best_tour(instance, mask);

    OracleResult result;
    bool found = false;
    std::vector<unsigned> masks(robots, 0U);
    std::vector<double> loads(robots, 0.0);

    auto leaf = [&] {
        double total = 0.0;
        for (unsigned mask : masks) total += tours[mask].distance;
        ++result.assignments_searched;
        const bool tie = found && nearly_equal(total, result.optimal_distance);
        if (found && !tie && total > result.optimal_distance) return;
        std::vector<Route> routes;
        for (unsigned mask : masks) routes.push_back(tours[mask].route);
        if (!found || (!tie && total < result.optimal_distance) || routes < result.routes) {
            if (!found || !tie) result.optimal_distance = total;
            result.routes = std::move(routes);
            found = true;
        }
    };

    // Assign product `item` (1-based) to each robot in turn, pruning on capacity.
    auto assign = [&](auto&& self, int item) -> void {
        if (item > n) {
            leaf();
            return;
        }
        for (int p = 0; p < robots; ++p) {
            if (loads[p] + instance.weight(item) > instance.capacity() + 1e-9) continue;
            masks[p] |= 1U << (item - 1);
            loads[p] += instance.weight(item);
            self(self, item + 1);
            loads[p] -= instance.weight(item);
            masks[p] &= ~(1U << (item - 1));
        }
    };
    assign(assign, 1);

    if (!found) {
        throw Infeasible("oracle: no assignment of products to " + std::to_string(robots) +
                         " robot(s) respects capacity " + std::to_string(instance.capacity()));
    }
    return result;
}

}  // namespace pickqubo
