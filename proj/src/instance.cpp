#include "pickqubo/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pickqubo/errors.hpp"

namespace pickqubo {

namespace {

using nlohmann::json;

constexpr double kMetricTolerance = 1e-9;

double metric_distance(const Point& a, const Point& b, Metric metric) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    if (metric == Metric::euclidean) return std::hypot(dx, dy);
    return std::abs(dx) + std::abs(dy);
}

std::string cell(std::size_t i, std::size_t j) {
    return "distances[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

template <typename... Parts>
[[noreturn]] void fail_validation(const Parts&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    throw ValidationError(out.str());
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
    for (const auto& [key, _] : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
}

const json& require(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(where + ": missing key '" + key + "'");
    return *it;
}

int require_int(const json& object, const char* key, const std::string& where) {
    const json& value = require(object, key, where);
    if (!value.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    return value.get<int>();
}

double require_number(const json& value, const std::string& where) {
    if (!value.is_number()) throw ParseError(where + ": expected a number");
    return value.get<double>();
}

}  // namespace

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::explicit_matrix: return "explicit";
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
    }
    return "explicit";
}

Metric metric_from_string(std::string_view text) {
    if (text == "explicit") return Metric::explicit_matrix;
    if (text == "euclidean") return Metric::euclidean;
    if (text == "manhattan") return Metric::manhattan;
    throw ParseError("metric: expected \"explicit\", \"euclidean\" or \"manhattan\", got \"" +
                     std::string(text) + "\"");
}

double DistanceMatrix::max_entry() const {
    if (data_.empty()) return 0.0;
    return *std::max_element(data_.begin(), data_.end());
}

DistanceMatrix build_distance_matrix(std::span<const Point> positions, Metric metric) {
    if (positions.empty()) throw InvalidInput("build_distance_matrix: need at least one point");
    if (metric == Metric::explicit_matrix) {
        throw InvalidInput("build_distance_matrix: metric must be euclidean or manhattan");
    }
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (!std::isfinite(positions[k][0]) || !std::isfinite(positions[k][1])) {
            throw InvalidInput("build_distance_matrix: non-finite coordinate at point " +
                               std::to_string(k));
        }
    }
    DistanceMatrix matrix(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            const double d = metric_distance(positions[i], positions[j], metric);
            matrix(i, j) = d;
            matrix(j, i) = d;
        }
    }
    return matrix;
}

Instance Instance::create(std::string name, std::vector<Node> nodes, DistanceMatrix distances,
                          int fleet_size, int capacity, Metric metric) {
    if (nodes.empty()) fail_validation("nodes: at least the depot (id 0) is required");
    if (fleet_size < 1) fail_validation("robots: must be a positive integer, got ", fleet_size);
    if (capacity < 1) fail_validation("capacity: must be a positive integer, got ", capacity);

    std::set<int> seen;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Node& node = nodes[k];
        if (!seen.insert(node.id).second) fail_validation("nodes[", k, "].id: duplicate id ", node.id);
        if (k == 0 && node.id != 0) fail_validation("nodes[0].id: the depot (id 0) must be listed first");
        if (node.id != static_cast<int>(k)) {
            fail_validation("nodes[", k, "].id: expected ", k, " (ids must be 0..n in order), got ",
                            node.id);
        }
        if (!std::isfinite(node.weight) || node.weight < 0.0) {
            fail_validation("nodes[", k, "].weight: must be finite and non-negative");
        }
        if (node.position && (!std::isfinite((*node.position)[0]) || !std::isfinite((*node.position)[1]))) {
            fail_validation("nodes[", k, "].pos: non-finite coordinate");
        }
    }
    if (nodes[0].weight != 0.0) fail_validation("nodes[0].weight: the depot must have weight 0");

    const std::size_t size = nodes.size();
    if (distances.size() != size) {
        fail_validation("distances: expected a ", size, "x", size, " matrix, got ", distances.size(),
                        "x", distances.size());
    }
    for (std::size_t i = 0; i < size; ++i) {
        if (distances(i, i) != 0.0) fail_validation(cell(i, i), ": diagonal must be 0");
        for (std::size_t j = 0; j < size; ++j) {
            const double d = distances(i, j);
            if (!std::isfinite(d) || d < 0.0) fail_validation(cell(i, j), ": must be finite and non-negative");
            if (d != distances(j, i)) {
                fail_validation(cell(i, j), ": matrix is not symmetric (", d, " vs ", distances(j, i), ")");
            }
        }
    }

    if (metric != Metric::explicit_matrix) {
        for (std::size_t k = 0; k < size; ++k) {
            if (!nodes[k].position) {
                fail_validation("nodes[", k, "].pos: required for metric ", to_string(metric));
            }
        }
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                const double expected = metric_distance(*nodes[i].position, *nodes[j].position, metric);
                if (std::abs(expected - distances(i, j)) > kMetricTolerance) {
                    fail_validation(cell(i, j), ": does not match the ", to_string(metric),
                                    " distance of the node positions");
                }
            }
        }
    }

    Instance instance;
    instance.name_ = std::move(name);
    instance.nodes_ = std::move(nodes);
    instance.distances_ = std::move(distances);
    instance.fleet_size_ = fleet_size;
    instance.capacity_ = capacity;
    instance.metric_ = metric;
    return instance;
}

bool Instance::has_positions() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.position.has_value(); });
}

bool Instance::has_integer_weights() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const Node& n) { return n.weight == std::floor(n.weight); });
}

double Instance::total_weight() const {
    double total = 0.0;
    for (const Node& n : nodes_) total += n.weight;
    return total;
}

Instance Instance::with_fleet_size(int fleet_size) const {
    return create(name_, nodes_, distances_, fleet_size, capacity_, metric_);
}

Instance Instance::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) throw InvalidInput("scaled: factor must be positive");
    DistanceMatrix matrix = distances_;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j) matrix(i, j) *= factor;
    }
    return create(name_, nodes_, std::move(matrix), fleet_size_, capacity_, Metric::explicit_matrix);
}

Instance load_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance: top level must be an object");
    reject_unknown_keys(doc, {"name", "capacity", "robots", "metric", "nodes", "distances"}, "instance");

    std::string name;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("instance.name: expected a string");
        name = it->get<std::string>();
    }
    const int capacity = require_int(doc, "capacity", "instance");
    const int robots = require_int(doc, "robots", "instance");
    const json& metric_field = require(doc, "metric", "instance");
    if (!metric_field.is_string()) throw ParseError("instance.metric: expected a string");
    const Metric metric = metric_from_string(metric_field.get<std::string>());

    const json& node_list = require(doc, "nodes", "instance");
    if (!node_list.is_array()) throw ParseError("instance.nodes: expected an array");
    std::vector<Node> nodes;
    for (std::size_t k = 0; k < node_list.size(); ++k) {
        const json& entry = node_list[k];
        const std::string where = "nodes[" + std::to_string(k) + "]";
        if (!entry.is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(entry, {"id", "weight", "pos"}, where);
        Node node;
        node.id = require_int(entry, "id", where);
        node.weight = require_number(require(entry, "weight", where), where + ".weight");
        if (auto it = entry.find("pos"); it != entry.end()) {
            if (!it->is_array() || it->size() != 2) throw ParseError(where + ".pos: expected [x, y]");
            node.position = Point{require_number((*it)[0], where + ".pos[0]"),
                                  require_number((*it)[1], where + ".pos[1]")};
        }
        nodes.push_back(node);
    }

    DistanceMatrix distances;
    auto dist_it = doc.find("distances");
    if (metric == Metric::explicit_matrix) {
        if (dist_it == doc.end()) throw ParseError("instance: missing key 'distances' (required for metric explicit)");
        if (!dist_it->is_array()) throw ParseError("instance.distances: expected an array of rows");
        const std::size_t size = dist_it->size();
        distances = DistanceMatrix(size);
        for (std::size_t i = 0; i < size; ++i) {
            const json& row = (*dist_it)[i];
            if (!row.is_array() || row.size() != size) {
                throw ParseError("distances[" + std::to_string(i) + "]: expected a row of " +
                                 std::to_string(size) + " numbers");
            }
            for (std::size_t j = 0; j < size; ++j) distances(i, j) = require_number(row[j], cell(i, j));
        }
    } else {
        if (dist_it != doc.end()) {
            throw ParseError("instance.distances: only allowed with metric explicit");
        }
        std::vector<Point> positions;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (!nodes[k].position) {
                throw ValidationError("nodes[" + std::to_string(k) + "].pos: required for metric " +
                                      std::string(to_string(metric)));
            }
            positions.push_back(*nodes[k].position);
        }
        if (positions.empty()) throw ValidationError("nodes: at least the depot (id 0) is required");
        try {
            distances = build_distance_matrix(positions, metric);
        } catch (const InvalidInput& e) {
            throw ValidationError(std::string("nodes: ") + e.what());
        }
    }
    return Instance::create(std::move(name), std::move(nodes), std::move(distances), robots, capacity,
                            metric);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["name"] = instance.name();
    doc["capacity"] = instance.capacity();
    doc["robots"] = instance.fleet_size();
    doc["metric"] = std::string(to_string(instance.metric()));
    json nodes = json::array();
    for (const Node& node : instance.nodes()) {
        json entry;
        entry["id"] = node.id;
        if (node.weight == std::floor(node.weight) && std::abs(node.weight) < 1e15) {
            entry["weight"] = static_cast<long long>(node.weight);
        } else {
            entry["weight"] = node.weight;
        }
        if (node.position) entry["pos"] = {(*node.position)[0], (*node.position)[1]};
        nodes.push_back(entry);
    }
    doc["nodes"] = nodes;
    if (instance.metric() == Metric::explicit_matrix) {
        const DistanceMatrix& d = instance.distances();
        json rows = json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d(i, j));
            rows.push_back(row);
        }
        doc["distances"] = rows;
    }
    return doc.dump(2) + "\n";
}

}  // namespace pickqubo
