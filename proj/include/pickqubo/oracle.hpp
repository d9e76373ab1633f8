#pragma once

#include <cstdint>
#include <vector>

#include "pickqubo/decode.hpp"
#include "pickqubo/instance.hpp"

namespace pickqubo {

inline constexpr int kOracleMaxItems = 8;
inline constexpr int kOracleMaxRobots = 4;

struct OracleResult {
    double optimal_distance = 0.0;
    std::vector<Route> routes;  // one per robot; unused robots get [0, 0]
    std::uint64_t assignments_searched = 0;
};

/// Exhaustive capacitated routing optimum: every product-to-robot assignment that respects
/// capacity, every visiting order per robot, one trip per robot. Ties resolve to the
/// lexicographically smallest route list. Searches routes directly, never bitstrings.
///
/// Throws TooLarge beyond n = 8 or K = 4 and Infeasible when capacity admits no assignment.
OracleResult oracle_optimum(const Instance& instance);

}  // namespace pickqubo
