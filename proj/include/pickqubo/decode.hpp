#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pickqubo/formulation.hpp"
#include "pickqubo/instance.hpp"
#include "pickqubo/qubo.hpp"

namespace pickqubo {

using Route = std::vector<int>;

enum class ViolationKind {
    multi_position,      // set-bit count at a time step is not 1 (bit level)
    missed_product,
    duplicated_product,
    capacity_exceeded,
    bad_boundary,
    slack_mismatch,      // load <= M but load + slack != M (bit level)
};

std::string_view to_string(ViolationKind kind);
ViolationKind violation_from_string(std::string_view text);
/// True for the kinds that can be re-derived from routes alone.
bool is_route_level(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::optional<int> robot;  // 0-based
    std::optional<int> time;
    std::optional<int> product;
    double magnitude = 0.0;

    bool operator==(const Violation&) const = default;
};

struct FeasibilityReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    FeasibilityReport route_level() const;
    bool operator==(const FeasibilityReport&) const = default;
};

struct Solution {
    std::vector<Route> routes;  // one per robot, depot first and last
    std::vector<double> loads;
    double total_distance = 0.0;
    double energy = 0.0;
    FeasibilityReport feasibility;
    int robots_used = 0;
    std::string solver;
    std::uint64_t seed = 0;

    bool operator==(const Solution&) const = default;
};

double route_distance(const Route& route, const Instance& instance);

/// Checks boundaries, product coverage and capacity from the routes alone.
FeasibilityReport validate(const std::vector<Route>& routes, const Instance& instance);
inline FeasibilityReport validate(const Solution& solution, const Instance& instance) {
    return validate(solution.routes, instance);
}

/// Reads one node per robot and time step (no bit set: depot; several: the lowest id, both
/// flagged), trims leading and trailing depot runs, and reports bit-level plus route-level
/// violations. `energy` is copied into the result as-is.
Solution decode(std::span<const std::uint8_t> bits, const EncodingLayout& layout, const Instance& instance,
                double energy = 0.0);
/// Same, taking the layout from the model and the energy from qubo_energy.
Solution decode(std::span<const std::uint8_t> bits, const QuboModel& model, const Instance& instance);

/// Builds a Solution (loads, distance, report) from explicit routes.
Solution solution_from_routes(std::vector<Route> routes, const Instance& instance);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(std::string_view text);

}  // namespace pickqubo
