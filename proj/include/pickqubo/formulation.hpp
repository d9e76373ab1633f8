#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "pickqubo/instance.hpp"
#include "pickqubo/qubo.hpp"

namespace pickqubo {

/// full: route bits for every time step 0..n+1.
/// reduced: steps 0 and n+1 are pinned to the depot and carry no bits.
enum class EncodingMode { full, reduced };

std::string_view to_string(EncodingMode mode);
EncodingMode mode_from_string(std::string_view text);

/// ceil(log2(value)) for value >= 1.
int ceil_log2(int value);

/// Route bit x[t][node][robot]: robot `robot` stands at `node` at time step `t`.
struct RouteVar {
    int t;
    int node;
    int robot;  // 0-based
    bool operator==(const RouteVar&) const = default;
};

/// Bit `bit` of the capacity slack register of robot `robot`.
struct SlackVar {
    int robot;  // 0-based
    int bit;
    bool operator==(const SlackVar&) const = default;
};

using VarKey = std::variant<RouteVar, SlackVar>;

/// Bijection between decision variables and flat bit indices.
///
/// Route bits come first, robot-major, then time step, then node. The slack registers
/// follow, one per robot, least significant bit first.
class EncodingLayout {
public:
    EncodingLayout(int items, int robots, int capacity, EncodingMode mode);

    int items() const { return items_; }
    int robots() const { return robots_; }
    int capacity() const { return capacity_; }
    EncodingMode mode() const { return mode_; }

    /// Time steps that carry bits, ascending.
    const std::vector<int>& time_steps() const { return time_steps_; }
    bool is_free_step(int t) const;
    int first_step() const { return time_steps_.front(); }
    int last_step() const { return time_steps_.back(); }

    int slack_bits_per_robot() const { return slack_bits_; }
    /// Capped binary weights: 1, 2, 4, ..., and M - (2^(m-1) - 1) on the top bit.
    const std::vector<int>& slack_coefficients() const { return slack_coefficients_; }

    int num_route_vars() const;
    int num_vars() const;

    int route_index(int t, int node, int robot) const;
    int slack_index(int robot, int bit) const;
    VarKey key(int index) const;

    bool operator==(const EncodingLayout&) const = default;

private:
    int items_;
    int robots_;
    int capacity_;
    EncodingMode mode_;
    std::vector<int> time_steps_;
    int slack_bits_;
    std::vector<int> slack_coefficients_;
};

EncodingLayout make_layout(int items, int robots, int capacity, EncodingMode mode);
int qubit_count(int items, int robots, int capacity, EncodingMode mode);

struct PenaltyWeights {
    double route = 1.0;     // start, end, one position per step, visit once
    double capacity = 1.0;  // load + slack == M

    bool operator==(const PenaltyWeights&) const = default;
};

/// lambda = 2 (n + 2) max d + 1 for both penalty families. A single unit violation of any
/// constraint then costs more than the longest feasible tour set (at most 2n edges of length <= max d).
PenaltyWeights auto_penalty_weights(const Instance& instance);

/// True when the products together fit in one robot (sum of weights <= M). Visiting every
/// product once then bounds every load by M, so the capacity penalty is left out and the
/// slack bits stay free.
bool capacity_redundant(const Instance& instance);

/// Total travel distance over consecutive time steps.
QuboModel build_objective(const Instance& instance, const EncodingLayout& layout);

/// Sum of squared penalty terms for every constraint; zero exactly on valid encodings.
/// The capacity term is omitted when capacity_redundant(instance).
QuboModel build_constraints(const Instance& instance, const EncodingLayout& layout,
                            const PenaltyWeights& weights);

QuboModel assemble_qubo(const Instance& instance, EncodingMode mode = EncodingMode::reduced,
                        std::optional<PenaltyWeights> weights = std::nullopt);

/// Bits encoding one route per robot. Each route must start and end at the depot and list
/// exactly n+2 nodes (pad with depot visits); slack bits are set to M - load when representable.
BitAssignment encode_routes(const EncodingLayout& layout, const Instance& instance,
                            const std::vector<std::vector<int>>& routes);

}  // namespace pickqubo
