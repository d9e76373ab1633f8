#include "pickqubo/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "pickqubo/errors.hpp"

namespace pickqubo {

std::string_view to_string(EncodingMode mode) {
    return mode == EncodingMode::full ? "full" : "reduced";
}

EncodingMode mode_from_string(std::string_view text) {
    if (text == "full") return EncodingMode::full;
    if (text == "reduced") return EncodingMode::reduced;
    throw InvalidInput("mode: expected \"full\" or \"reduced\", got \"" + std::string(text) + "\"");
}

int ceil_log2(int value) {
    if (value < 1) throw InvalidInput("ceil_log2: argument must be >= 1");
    int bits = 0;
    while ((std::int64_t{1} << bits) < value) ++bits;
    return bits;
}

EncodingLayout::EncodingLayout(int items, int robots, int capacity, EncodingMode mode)
    : items_(items), robots_(robots), capacity_(capacity), mode_(mode) {
    if (items < 1) throw InvalidInput("layout: item count must be >= 1, got " + std::to_string(items));
    if (robots < 1) throw InvalidInput("layout: robot count must be >= 1, got " + std::to_string(robots));
    if (capacity < 1) throw InvalidInput("layout: capacity must be >= 1, got " + std::to_string(capacity));

    const int first = mode == EncodingMode::full ? 0 : 1;
    const int last = mode == EncodingMode::full ? items + 1 : items;
    for (int t = first; t <= last; ++t) time_steps_.push_back(t);

    slack_bits_ = ceil_log2(capacity);
    for (int b = 0; b + 1 < slack_bits_; ++b) slack_coefficients_.push_back(1 << b);
    if (slack_bits_ > 0) {
        slack_coefficients_.push_back(capacity - ((1 << (slack_bits_ - 1)) - 1));
    }
}

bool EncodingLayout::is_free_step(int t) const {
    return t >= first_step() && t <= last_step();
}

int EncodingLayout::num_route_vars() const {
    return robots_ * static_cast<int>(time_steps_.size()) * (items_ + 1);
}

int EncodingLayout::num_vars() const { return num_route_vars() + robots_ * slack_bits_; }

int EncodingLayout::route_index(int t, int node, int robot) const {
    if (!is_free_step(t) || node < 0 || node > items_ || robot < 0 || robot >= robots_) {
        throw InvalidInput("route_index: (t=" + std::to_string(t) + ", node=" + std::to_string(node) +
                           ", robot=" + std::to_string(robot) + ") is not a variable of this layout");
    }
    const int steps = static_cast<int>(time_steps_.size());
    return (robot * steps + (t - first_step())) * (items_ + 1) + node;
}

int EncodingLayout::slack_index(int robot, int bit) const {
    if (robot < 0 || robot >= robots_ || bit < 0 || bit >= slack_bits_) {
        throw InvalidInput("slack_index: (robot=" + std::to_string(robot) + ", bit=" + std::to_string(bit) +
                           ") is not a variable of this layout");
    }
    return num_route_vars() + robot * slack_bits_ + bit;
}

VarKey EncodingLayout::key(int index) const {
    if (index < 0 || index >= num_vars()) throw InvalidInput("key: index out of range");
    if (index < num_route_vars()) {
        const int node = index % (items_ + 1);
        const int rest = index / (items_ + 1);
        const int steps = static_cast<int>(time_steps_.size());
        return RouteVar{first_step() + rest % steps, node, rest / steps};
    }
    const int offset = index - num_route_vars();
    return SlackVar{offset / slack_bits_, offset % slack_bits_};
}

EncodingLayout make_layout(int items, int robots, int capacity, EncodingMode mode) {
    return EncodingLayout(items, robots, capacity, mode);
}

int qubit_count(int items, int robots, int capacity, EncodingMode mode) {
    return make_layout(items, robots, capacity, mode).num_vars();
}

PenaltyWeights auto_penalty_weights(const Instance& instance) {
    const double lambda = 2.0 * (instance.num_products() + 2) * instance.distances().max_entry() + 1.0;
    return {lambda, lambda};
}

bool capacity_redundant(const Instance& instance) {
    return instance.total_weight() <= instance.capacity();
}

namespace {

void check_match(const Instance& instance, const EncodingLayout& layout) {
    if (instance.num_products() != layout.items() || instance.fleet_size() != layout.robots() ||
        instance.capacity() != layout.capacity()) {
        throw InvalidInput("layout (n=" + std::to_string(layout.items()) + ", K=" +
                           std::to_string(layout.robots()) + ", M=" + std::to_string(layout.capacity()) +
                           ") does not match the instance (n=" + std::to_string(instance.num_products()) +
                           ", K=" + std::to_string(instance.fleet_size()) +
                           ", M=" + std::to_string(instance.capacity()) + ")");
    }
}

}  // namespace

QuboModel build_objective(const Instance& instance, const EncodingLayout& layout) {
    check_match(instance, layout);
    const int n = layout.items();
    QuboBuilder builder(layout.num_vars());
    for (int p = 0; p < layout.robots(); ++p) {
        for (int t = 1; t <= n + 1; ++t) {
            const bool prev_free = layout.is_free_step(t - 1);
            const bool cur_free = layout.is_free_step(t);
            for (int i = 0; i <= n; ++i) {
                // A pinned step has the depot bit fixed to 1 and every other bit to 0.
                if (!prev_free && i != 0) continue;
                for (int j = 0; j <= n; ++j) {
                    if (!cur_free && j != 0) continue;
                    const double d = instance.distance(i, j);
                    if (d == 0.0) continue;
                    if (prev_free && cur_free) {
                        builder.add_quadratic(layout.route_index(t - 1, i, p), layout.route_index(t, j, p), d);
                    } else if (prev_free) {
                        builder.add_linear(layout.route_index(t - 1, i, p), d);
                    } else if (cur_free) {
                        builder.add_linear(layout.route_index(t, j, p), d);
                    } else {
                        builder.add_offset(d);
                    }
                }
            }
        }
    }
    return builder.build();
}

QuboModel build_constraints(const Instance& instance, const EncodingLayout& layout,
                            const PenaltyWeights& weights) {
    check_match(instance, layout);
    if (!(weights.route > 0.0) || !(weights.capacity > 0.0)) {
        throw InvalidInput("penalty weights must be strictly positive");
    }
    if (!instance.has_integer_weights()) {
        throw InvalidInput(
            "capacity encoding needs integer product weights; normalize the weights to integers "
            "(e.g. rescale the kg values) before compiling");
    }
    const int n = layout.items();
    QuboBuilder builder(layout.num_vars());
    std::vector<LinearTerm> terms;

    // One node per robot per time step.
    for (int p = 0; p < layout.robots(); ++p) {
        for (int t : layout.time_steps()) {
            terms.clear();
            for (int i = 0; i <= n; ++i) terms.push_back({layout.route_index(t, i, p), 1.0});
            builder.add_squared(terms, -1.0, weights.route);
        }
    }

    // Every product visited exactly once by the whole fleet.
    for (int i = 1; i <= n; ++i) {
        terms.clear();
        for (int p = 0; p < layout.robots(); ++p) {
            for (int t : layout.time_steps()) terms.push_back({layout.route_index(t, i, p), 1.0});
        }
        builder.add_squared(terms, -1.0, weights.route);
    }

    // Load plus slack equals capacity, per robot.
    const auto& slack = layout.slack_coefficients();
    for (int p = 0; p < layout.robots() && !capacity_redundant(instance); ++p) {
        terms.clear();
        for (int t : layout.time_steps()) {
            for (int i = 1; i <= n; ++i) {
                if (instance.weight(i) != 0.0) terms.push_back({layout.route_index(t, i, p), instance.weight(i)});
            }
        }
        for (int b = 0; b < layout.slack_bits_per_robot(); ++b) {
            terms.push_back({layout.slack_index(p, b), static_cast<double>(slack[b])});
        }
        builder.add_squared(terms, -static_cast<double>(layout.capacity()), weights.capacity);
    }

    // Start and end at the depot; pinned already in reduced mode.
    if (layout.mode() == EncodingMode::full) {
        for (int p = 0; p < layout.robots(); ++p) {
            for (int t : {0, n + 1}) {
                const LinearTerm depot{layout.route_index(t, 0, p), 1.0};
                builder.add_squared(std::span(&depot, 1), -1.0, weights.route);
            }
        }
    }
    return builder.build();
}

QuboModel assemble_qubo(const Instance& instance, EncodingMode mode, std::optional<PenaltyWeights> weights) {
    auto layout = std::make_shared<const EncodingLayout>(
        make_layout(instance.num_products(), instance.fleet_size(), instance.capacity(), mode));
    auto used = std::make_shared<const PenaltyWeights>(weights.value_or(auto_penalty_weights(instance)));
    QuboBuilder builder(layout->num_vars());
    builder.add(build_objective(instance, *layout));
    builder.add(build_constraints(instance, *layout, *used));
    builder.set_layout(layout).set_weights(used);
    return builder.build();
}

BitAssignment encode_routes(const EncodingLayout& layout, const Instance& instance,
                            const std::vector<std::vector<int>>& routes) {
    check_match(instance, layout);
    const int n = layout.items();
    if (static_cast<int>(routes.size()) != layout.robots()) {
        throw InvalidInput("encode_routes: need one route per robot");
    }
    BitAssignment bits(layout.num_vars(), 0);
    for (int p = 0; p < layout.robots(); ++p) {
        const auto& route = routes[p];
        if (static_cast<int>(route.size()) != n + 2 || route.front() != 0 || route.back() != 0) {
            throw InvalidInput("encode_routes: each route must list n+2 nodes starting and ending at 0");
        }
        int load = 0;
        for (int t : layout.time_steps()) {
            const int node = route[t];
            if (node < 0 || node > n) throw InvalidInput("encode_routes: unknown node id");
            bits[layout.route_index(t, node, p)] = 1;
            if (t >= 1 && t <= n) load += static_cast<int>(instance.weight(node));
        }
        const int m = layout.slack_bits_per_robot();
        if (m == 0) continue;
        const int target = layout.capacity() - load;
        const int low_max = (1 << (m - 1)) - 1;
        const int top = layout.slack_coefficients().back();
        int rest = -1;
        if (target >= 0 && target <= low_max) {
            rest = target;
        } else if (target >= top && target - top <= low_max) {
            rest = target - top;
            bits[layout.slack_index(p, m - 1)] = 1;
        }
        if (rest < 0) continue;
        for (int b = 0; b + 1 < m; ++b) {
            if ((rest >> b) & 1) bits[layout.slack_index(p, b)] = 1;
        }
    }
    return bits;
}

}  // namespace pickqubo
