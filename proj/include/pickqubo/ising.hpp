#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pickqubo/qubo.hpp"

namespace pickqubo {

using SpinVector = std::vector<std::int8_t>;

struct Field {
    int spin;
    double h;
    bool operator==(const Field&) const = default;
};

struct Coupling {
    int i;  // i < j
    int j;
    double J;
    bool operator==(const Coupling&) const = default;
};

/// offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j over z in {-1,+1}^n.
struct IsingModel {
    int num_spins = 0;
    std::vector<Field> h;           // sorted by spin, no zeros
    std::vector<Coupling> J;        // sorted by (i, j), no zeros
    double offset = 0.0;

    bool operator==(const IsingModel&) const = default;
};

/// Substitutes x = (z + 1) / 2; the constant part is kept in `offset`.
IsingModel to_ising(const QuboModel& model);

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins);

SpinVector spins_from_bits(std::span<const std::uint8_t> bits);
BitAssignment bits_from_spins(std::span<const std::int8_t> spins);

}  // namespace pickqubo
