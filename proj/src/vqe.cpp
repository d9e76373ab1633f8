#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "pickqubo/errors.hpp"
#include "pickqubo/solvers.hpp"

namespace pickqubo {

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxEnumerableVars) {
        throw TooLarge("Statevector: " + std::to_string(num_qubits) + " qubits outside [0, " +
                       std::to_string(kMaxEnumerableVars) + "]");
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, 0.0);
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<std::complex<double>> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits < 0 || num_qubits > kMaxEnumerableVars ||
        amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw InvalidInput("Statevector: need 2^q amplitudes");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-9) throw InvalidInput("Statevector: amplitudes are not normalized");
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) total += std::norm(a);
    return total;
}

void Statevector::apply_hadamard(int qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    const double r = 1.0 / std::numbers::sqrt2;
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        if (k & mask) continue;
        const auto a0 = amplitudes_[k];
        const auto a1 = amplitudes_[k | mask];
        amplitudes_[k] = r * (a0 + a1);
        amplitudes_[k | mask] = r * (a0 - a1);
    }
}

void Statevector::apply_ry(int qubit, double angle) {
    const std::size_t mask = std::size_t{1} << qubit;
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        if (k & mask) continue;
        const auto a0 = amplitudes_[k];
        const auto a1 = amplitudes_[k | mask];
        amplitudes_[k] = c * a0 - s * a1;
        amplitudes_[k | mask] = s * a0 + c * a1;
    }
}

void Statevector::apply_cz(int control, int target) {
    const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        if ((k & mask) == mask) amplitudes_[k] = -amplitudes_[k];
    }
}

Statevector build_ansatz_state(int num_qubits, std::span<const double> params, int layers, int max_qubits) {
    if (num_qubits < 1) throw InvalidInput("build_ansatz_state: need at least one qubit");
    if (layers < 1) throw InvalidInput("build_ansatz_state: need at least one layer");
    if (num_qubits > std::min(max_qubits, kMaxEnumerableVars)) {
        throw TooLarge("build_ansatz_state: " + std::to_string(num_qubits) + " qubits exceed the cap of " +
                       std::to_string(std::min(max_qubits, kMaxEnumerableVars)));
    }
    if (params.size() != static_cast<std::size_t>(layers) * num_qubits) {
        throw InvalidInput("build_ansatz_state: expected " + std::to_string(layers * num_qubits) +
                           " parameters, got " + std::to_string(params.size()));
    }
    Statevector state(num_qubits);
    for (int q = 0; q < num_qubits; ++q) state.apply_hadamard(q);
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < num_qubits; ++q) state.apply_ry(q, params[layer * num_qubits + q]);
        for (int q = 0; q + 1 < num_qubits; ++q) state.apply_cz(q, q + 1);
    }
    return state;
}

namespace {

SpinVector spins_of_basis(std::size_t basis, int num_spins) {
    SpinVector spins(num_spins);
    for (int k = 0; k < num_spins; ++k) spins[k] = ((basis >> k) & 1U) ? 1 : -1;
    return spins;
}

std::vector<double> diagonal_energies(const IsingModel& model) {
    std::vector<double> energies(std::size_t{1} << model.num_spins);
    for (std::size_t z = 0; z < energies.size(); ++z) {
        energies[z] = ising_energy(model, spins_of_basis(z, model.num_spins));
    }
    return energies;
}

double weighted_sum(const Statevector& state, const std::vector<double>& energies) {
    double total = 0.0;
    for (std::size_t z = 0; z < energies.size(); ++z) total += state.probability(z) * energies[z];
    return total;
}

struct Objective {
    int num_qubits;
    int layers;
    const std::vector<double>* energies;
    std::vector<double> scratch;
};

double evaluate(const gsl_vector* x, void* data) {
    auto& objective = *static_cast<Objective*>(data);
    for (std::size_t k = 0; k < objective.scratch.size(); ++k) objective.scratch[k] = gsl_vector_get(x, k);
    const Statevector state = build_ansatz_state(objective.num_qubits, objective.scratch, objective.layers);
    return weighted_sum(state, *objective.energies);
}

}  // namespace

double expectation(const IsingModel& model, const Statevector& state) {
    if (state.num_qubits() != model.num_spins) {
        throw InvalidInput("expectation: state has " + std::to_string(state.num_qubits()) +
                           " qubits, model has " + std::to_string(model.num_spins) + " spins");
    }
    return weighted_sum(state, diagonal_energies(model));
}

SolveReport solve_vqe(const IsingModel& model, const VqeConfig& config) {
    if (config.max_qubits > kMaxEnumerableVars) {
        throw InvalidInput("solve_vqe: max_qubits must be <= " + std::to_string(kMaxEnumerableVars));
    }
    if (model.num_spins > config.max_qubits) {
        throw TooLarge("solve_vqe: " + std::to_string(model.num_spins) + " qubits exceed the cap of " +
                       std::to_string(config.max_qubits));
    }
    if (model.num_spins < 1) throw InvalidInput("solve_vqe: model has no spins");
    if (config.layers < 1 || config.max_iterations < 1 || !(config.tolerance > 0.0)) {
        throw InvalidInput("solve_vqe: layers, max_iterations and tolerance must be positive");
    }

    const int q = model.num_spins;
    const std::vector<double> energies = diagonal_energies(model);
    const std::size_t num_params = static_cast<std::size_t>(config.layers) * q;
    Objective objective{q, config.layers, &energies, std::vector<double>(num_params)};

    std::mt19937_64 rng(config.seed);
    gsl_vector* start = gsl_vector_alloc(num_params);
    gsl_vector* step = gsl_vector_alloc(num_params);
    for (std::size_t k = 0; k < num_params; ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        gsl_vector_set(start, k, (2.0 * u - 1.0) * std::numbers::pi);
    }
    gsl_vector_set_all(step, std::numbers::pi / 4.0);

    gsl_multimin_function fn{&evaluate, num_params, &objective};
    gsl_multimin_fminimizer* minimizer = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, num_params);
    gsl_multimin_fminimizer_set(minimizer, &fn, start, step);

    SolveReport report;
    report.solver = SolverKind::vqe;
    report.seed = config.seed;
    report.converged = false;
    double best_so_far = std::numeric_limits<double>::infinity();
    std::vector<double> best_params(num_params);
    for (int iteration = 0; iteration < config.max_iterations; ++iteration) {
        const int status = gsl_multimin_fminimizer_iterate(minimizer);
        const double value = gsl_multimin_fminimizer_minimum(minimizer);
        if (value < best_so_far) {
            best_so_far = value;
            const gsl_vector* x = gsl_multimin_fminimizer_x(minimizer);
            for (std::size_t k = 0; k < num_params; ++k) best_params[k] = gsl_vector_get(x, k);
        }
        report.trajectory.push_back({iteration, best_so_far});
        if (status != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer), config.tolerance) == GSL_SUCCESS) {
            report.converged = true;
            break;
        }
    }
    gsl_multimin_fminimizer_free(minimizer);
    gsl_vector_free(step);
    gsl_vector_free(start);

    // Read out the most probable basis states and keep the cheapest.
    const Statevector state = build_ansatz_state(q, best_params, config.layers);
    std::vector<std::size_t> order(state.dimension());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t candidates = std::min<std::size_t>(order.size(), static_cast<std::size_t>(q));
    std::partial_sort(order.begin(), order.begin() + candidates, order.end(), [&](std::size_t a, std::size_t b) {
        const double pa = state.probability(a);
        const double pb = state.probability(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::size_t chosen = order[0];
    for (std::size_t k = 1; k < candidates; ++k) {
        const std::size_t z = order[k];
        if (energies[z] < energies[chosen] || (energies[z] == energies[chosen] && z < chosen)) chosen = z;
    }
    report.best = bits_from_spins(spins_of_basis(chosen, q));
    report.energy = energies[chosen];
    return report;
}

}  // namespace pickqubo
