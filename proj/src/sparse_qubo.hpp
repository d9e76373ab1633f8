#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pickqubo/qubo.hpp"

namespace pickqubo::detail {

/// Adjacency-list view of a QuboModel for single-bit-flip search.
class SparseQubo {
public:
    explicit SparseQubo(const QuboModel& model);

    int num_vars() const { return static_cast<int>(linear_.size()); }
    double energy(std::span<const std::uint8_t> bits) const;

    /// field[i] = a_i + sum_j b_ij x_j, so flipping x_i changes the energy by +-field[i].
    void local_fields(std::span<const std::uint8_t> bits, std::vector<double>& field) const;
    double flip_delta(std::span<const std::uint8_t> bits, std::span<const double> field, int var) const {
        return bits[var] ? -field[var] : field[var];
    }
    /// Flips `var`, keeps `field` in sync and returns the energy change.
    double flip(std::span<std::uint8_t> bits, std::span<double> field, int var) const;

private:
    struct Neighbour {
        int var;
        double coeff;
    };

    double offset_;
    std::vector<double> linear_;
    std::vector<std::size_t> start_;  // CSR row offsets
    std::vector<Neighbour> neighbours_;
};

}  // namespace pickqubo::detail
