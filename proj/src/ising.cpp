#include "pickqubo/ising.hpp"

#include <map>
#include <string>

#include "pickqubo/errors.hpp"

namespace pickqubo {

IsingModel to_ising(const QuboModel& model) {
    // a x = a/2 z + a/2
    // b x_i x_j = b/4 z_i z_j + b/4 z_i + b/4 z_j + b/4
    std::map<int, double> fields;
    double offset = model.offset();
    for (const auto& t : model.linear()) {
        fields[t.var] += t.coeff / 2.0;
        offset += t.coeff / 2.0;
    }
    IsingModel ising;
    ising.num_spins = model.num_vars();
    for (const auto& t : model.quadratic()) {
        const double quarter = t.coeff / 4.0;
        ising.J.push_back({t.i, t.j, quarter});
        fields[t.i] += quarter;
        fields[t.j] += quarter;
        offset += quarter;
    }
    for (const auto& [spin, h] : fields) {
        if (h != 0.0) ising.h.push_back({spin, h});
    }
    ising.offset = offset;
    return ising;
}

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins) {
    if (static_cast<int>(spins.size()) != model.num_spins) {
        throw InvalidInput("ising_energy: expected " + std::to_string(model.num_spins) + " spins, got " +
                           std::to_string(spins.size()));
    }
    for (std::size_t k = 0; k < spins.size(); ++k) {
        if (spins[k] != 1 && spins[k] != -1) {
            throw InvalidInput("ising_energy: spin " + std::to_string(k) + " is not +1 or -1");
        }
    }
    double energy = model.offset;
    for (const auto& f : model.h) energy += f.h * spins[f.spin];
    for (const auto& c : model.J) energy += c.J * spins[c.i] * spins[c.j];
    return energy;
}

SpinVector spins_from_bits(std::span<const std::uint8_t> bits) {
    SpinVector spins(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) spins[k] = bits[k] ? 1 : -1;
    return spins;
}

BitAssignment bits_from_spins(std::span<const std::int8_t> spins) {
    BitAssignment bits(spins.size());
    for (std::size_t k = 0; k < spins.size(); ++k) bits[k] = spins[k] > 0 ? 1 : 0;
    return bits;
}

}  // namespace pickqubo
