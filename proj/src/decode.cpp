#include "pickqubo/decode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "pickqubo/errors.hpp"

namespace pickqubo {

namespace {

using nlohmann::json;

constexpr struct {
    ViolationKind kind;
    std::string_view name;
} kKindNames[] = {
    {ViolationKind::multi_position, "multi-position"},
    {ViolationKind::missed_product, "missed-product"},
    {ViolationKind::duplicated_product, "duplicated-product"},
    {ViolationKind::capacity_exceeded, "capacity-exceeded"},
    {ViolationKind::bad_boundary, "bad-boundary"},
    {ViolationKind::slack_mismatch, "slack-mismatch"},
};

void check_ids(const Route& route, const Instance& instance) {
    for (int node : route) {
        if (node < 0 || node > instance.num_products()) {
            throw InvalidInput("route: unknown node id " + std::to_string(node));
        }
    }
}

double route_load(const Route& route, const Instance& instance) {
    double load = 0.0;
    for (int node : route) load += instance.weight(node);
    return load;
}

void trim_parking(Route& route) {
    while (route.size() > 2 && route[0] == 0 && route[1] == 0) route.erase(route.begin());
    while (route.size() > 2 && route[route.size() - 1] == 0 && route[route.size() - 2] == 0) route.pop_back();
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return entry.name;
    }
    return "unknown";
}

ViolationKind violation_from_string(std::string_view text) {
    for (const auto& entry : kKindNames) {
        if (entry.name == text) return entry.kind;
    }
    throw ParseError("violation kind: unknown value \"" + std::string(text) + "\"");
}

bool is_route_level(ViolationKind kind) {
    return kind != ViolationKind::multi_position && kind != ViolationKind::slack_mismatch;
}

FeasibilityReport FeasibilityReport::route_level() const {
    FeasibilityReport report;
    for (const auto& v : violations) {
        if (is_route_level(v.kind)) report.violations.push_back(v);
    }
    return report;
}

double route_distance(const Route& route, const Instance& instance) {
    check_ids(route, instance);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < route.size(); ++k) total += instance.distance(route[k], route[k + 1]);
    return total;
}

FeasibilityReport validate(const std::vector<Route>& routes, const Instance& instance) {
    FeasibilityReport report;
    const int n = instance.num_products();
    std::vector<int> visits(n + 1, 0);
    for (std::size_t p = 0; p < routes.size(); ++p) {
        const Route& route = routes[p];
        check_ids(route, instance);
        if (route.empty() || route.front() != 0 || route.back() != 0) {
            report.violations.push_back({ViolationKind::bad_boundary, static_cast<int>(p), {}, {}, 1.0});
        }
        for (int node : route) ++visits[node];
    }
    for (int i = 1; i <= n; ++i) {
        if (visits[i] == 0) {
            report.violations.push_back({ViolationKind::missed_product, {}, {}, i, 1.0});
        } else if (visits[i] > 1) {
            report.violations.push_back({ViolationKind::duplicated_product, {}, {}, i, visits[i] - 1.0});
        }
    }
    for (std::size_t p = 0; p < routes.size(); ++p) {
        const double excess = route_load(routes[p], instance) - instance.capacity();
        if (excess > 0.0) {
            report.violations.push_back({ViolationKind::capacity_exceeded, static_cast<int>(p), {}, {}, excess});
        }
    }
    return report;
}

Solution solution_from_routes(std::vector<Route> routes, const Instance& instance) {
    Solution solution;
    solution.feasibility = validate(routes, instance);
    for (const Route& route : routes) {
        solution.loads.push_back(route_load(route, instance));
        solution.total_distance += route_distance(route, instance);
        if (std::any_of(route.begin(), route.end(), [](int node) { return node != 0; })) ++solution.robots_used;
    }
    solution.routes = std::move(routes);
    return solution;
}

Solution decode(std::span<const std::uint8_t> bits, const EncodingLayout& layout, const Instance& instance,
                double energy) {
    if (static_cast<int>(bits.size()) != layout.num_vars()) {
        throw InvalidInput("decode: expected " + std::to_string(layout.num_vars()) + " bits, got " +
                           std::to_string(bits.size()));
    }
    if (layout.items() != instance.num_products() || layout.robots() != instance.fleet_size() ||
        layout.capacity() != instance.capacity()) {
        throw InvalidInput("decode: layout does not match the instance");
    }
    const int n = layout.items();
    std::vector<Violation> bit_level;
    std::vector<Route> routes;
    for (int p = 0; p < layout.robots(); ++p) {
        Route route;
        for (int t = 0; t <= n + 1; ++t) {
            if (!layout.is_free_step(t)) {
                route.push_back(0);
                continue;
            }
            int count = 0;
            int node = 0;
            for (int i = n; i >= 0; --i) {
                if (bits[layout.route_index(t, i, p)]) {
                    ++count;
                    node = i;
                }
            }
            if (count != 1) {
                bit_level.push_back({ViolationKind::multi_position, p, t, {}, std::abs(count - 1.0)});
            }
            route.push_back(node);
        }
        trim_parking(route);
        routes.push_back(std::move(route));
    }

    Solution solution = solution_from_routes(std::move(routes), instance);
    for (int p = 0; p < layout.robots() && !capacity_redundant(instance); ++p) {
        double slack = 0.0;
        for (int b = 0; b < layout.slack_bits_per_robot(); ++b) {
            if (bits[layout.slack_index(p, b)]) slack += layout.slack_coefficients()[b];
        }
        const double load = solution.loads[p];
        const double residual = load + slack - layout.capacity();
        if (load <= layout.capacity() && residual != 0.0) {
            bit_level.push_back({ViolationKind::slack_mismatch, p, {}, {}, std::abs(residual)});
        }
    }
    auto& violations = solution.feasibility.violations;
    violations.insert(violations.end(), bit_level.begin(), bit_level.end());
    solution.energy = energy;
    return solution;
}

Solution decode(std::span<const std::uint8_t> bits, const QuboModel& model, const Instance& instance) {
    if (!model.layout()) throw InvalidInput("decode: model carries no encoding layout");
    return decode(bits, *model.layout(), instance, qubo_energy(model, bits));
}

std::string solution_to_json(const Solution& solution) {
    json doc;
    doc["routes"] = solution.routes;
    doc["loads"] = solution.loads;
    doc["total_distance"] = solution.total_distance;
    doc["energy"] = solution.energy;
    doc["feasible"] = solution.feasibility.ok();
    json violations = json::array();
    for (const auto& v : solution.feasibility.violations) {
        json entry;
        entry["kind"] = std::string(to_string(v.kind));
        if (v.robot) entry["robot"] = *v.robot;
        if (v.time) entry["time"] = *v.time;
        if (v.product) entry["product"] = *v.product;
        entry["magnitude"] = v.magnitude;
        violations.push_back(entry);
    }
    doc["violations"] = violations;
    doc["robots_used"] = solution.robots_used;
    doc["solver"] = solution.solver;
    doc["seed"] = solution.seed;
    return doc.dump(2) + "\n";
}

Solution solution_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("solution: malformed JSON: ") + e.what());
    }
    try {
        Solution solution;
        solution.routes = doc.at("routes").get<std::vector<Route>>();
        solution.loads = doc.at("loads").get<std::vector<double>>();
        solution.total_distance = doc.at("total_distance").get<double>();
        solution.energy = doc.at("energy").get<double>();
        for (const auto& entry : doc.at("violations")) {
            Violation v;
            v.kind = violation_from_string(entry.at("kind").get<std::string>());
            if (entry.contains("robot")) v.robot = entry["robot"].get<int>();
            if (entry.contains("time")) v.time = entry["time"].get<int>();
            if (entry.contains("product")) v.product = entry["product"].get<int>();
            v.magnitude = entry.at("magnitude").get<double>();
            solution.feasibility.violations.push_back(v);
        }
        if (doc.at("feasible").get<bool>() != solution.feasibility.ok()) {
            throw ParseError("solution: 'feasible' disagrees with the violation list");
        }
        solution.robots_used = doc.value("robots_used", 0);
        solution.solver = doc.at("solver").get<std::string>();
        solution.seed = doc.at("seed").get<std::uint64_t>();
        return solution;
    } catch (const json::exception& e) {
        throw ParseError(std::string("solution: ") + e.what());
    }
}

}  // namespace pickqubo
