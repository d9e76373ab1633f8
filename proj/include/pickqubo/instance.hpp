#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pickqubo {

using Point = std::array<double, 2>;

enum class Metric { explicit_matrix, euclidean, manhattan };

std::string_view to_string(Metric metric);
Metric metric_from_string(std::string_view text);

/// Square, row-major matrix of non-negative distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t size, double fill = 0.0)
        : size_(size), data_(size * size, fill) {}

    std::size_t size() const { return size_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    double max_entry() const;

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<double> data_;
};

struct Node {
    int id = 0;
    std::optional<Point> position;
    double weight = 0.0;  // kg

    bool operator==(const Node&) const = default;
};

/// A warehouse picking problem: node 0 is the depot, nodes 1..n are products.
///
/// Immutable once built; construct through Instance::create (or load_instance), which
/// checks every invariant and throws ValidationError naming the offending field.
class Instance {
public:
    static Instance create(std::string name, std::vector<Node> nodes, DistanceMatrix distances,
                           int fleet_size, int capacity, Metric metric);

    const std::string& name() const { return name_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const DistanceMatrix& distances() const { return distances_; }
    double distance(int from, int to) const { return distances_(from, to); }
    double weight(int node) const { return nodes_[node].weight; }
    int fleet_size() const { return fleet_size_; }
    int capacity() const { return capacity_; }
    Metric metric() const { return metric_; }

    /// Number of products (excludes the depot).
    int num_products() const { return static_cast<int>(nodes_.size()) - 1; }
    bool has_positions() const;
    bool has_integer_weights() const;
    double total_weight() const;

    /// Same problem with a different fleet size.
    Instance with_fleet_size(int fleet_size) const;
    /// Same problem with every distance multiplied by `factor` (metric becomes explicit).
    Instance scaled(double factor) const;

    bool operator==(const Instance&) const = default;

private:
    Instance() = default;

    std::string name_;
    std::vector<Node> nodes_;
    DistanceMatrix distances_;
    int fleet_size_ = 1;
    int capacity_ = 1;
    Metric metric_ = Metric::explicit_matrix;
};

DistanceMatrix build_distance_matrix(std::span<const Point> positions, Metric metric);

/// Parses and validates an instance document (JSON).
Instance load_instance(std::string_view text);
Instance load_instance_file(const std::string& path);
/// Inverse of load_instance; explicit-metric instances carry their matrix, others only positions.
std::string serialize_instance(const Instance& instance);

}  // namespace pickqubo
