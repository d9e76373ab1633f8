#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pickqubo/ising.hpp"
#include "pickqubo/qubo.hpp"

namespace pickqubo {

enum class SolverKind { exact, anneal, vqe };

std::string_view to_string(SolverKind kind);
SolverKind solver_from_string(std::string_view text);

/// Exhaustive search and the statevector simulator refuse models above this many variables.
inline constexpr int kMaxEnumerableVars = 24;

struct TrajectoryPoint {
    int iteration;
    double best_energy;
    bool operator==(const TrajectoryPoint&) const = default;
};

struct SolveReport {
    BitAssignment best;
    double energy = 0.0;
    std::vector<TrajectoryPoint> trajectory;  // best-so-far, non-increasing
    SolverKind solver = SolverKind::exact;
    std::uint64_t seed = 0;
    bool converged = true;

    bool operator==(const SolveReport&) const = default;
};

/// Global minimizer by enumeration. Ties go to the smallest bitstring read as a
/// little-endian integer (bit 0 least significant). Variables that appear in no term are
/// left at 0 and do not count towards kMaxEnumerableVars.
SolveReport solve_exact(const QuboModel& model);

struct AnnealConfig {
    int sweeps = 2000;
    int restarts = 16;
    /// Geometric schedule; unset means max |coefficient| and 1e-3 * min nonzero |coefficient|.
    std::optional<double> t_initial;
    std::optional<double> t_final;
    std::uint64_t seed = 0;
};

/// Single-bit-flip Metropolis annealing; best over all restarts. Restart r runs on a
/// stream derived from (seed, r), so the result depends only on the model and config.
SolveReport solve_anneal(const QuboModel& model, const AnnealConfig& config = {});

class Statevector {
public:
    /// |0...0> on `num_qubits` qubits.
    explicit Statevector(int num_qubits);
    Statevector(int num_qubits, std::vector<std::complex<double>> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
    double probability(std::size_t basis) const { return std::norm(amplitudes_[basis]); }
    double norm_squared() const;

    void apply_hadamard(int qubit);
    void apply_ry(int qubit, double angle);
    void apply_cz(int control, int target);

private:
    int num_qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

struct VqeConfig {
    int layers = 2;
    int max_iterations = 500;
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    int max_qubits = 16;
};

/// Hadamard on every qubit, then per layer: RY(params[layer * q + k]) on qubit k and a CZ
/// chain over neighbours (k, k+1). Qubit k is bit k of the basis index.
Statevector build_ansatz_state(int num_qubits, std::span<const double> params, int layers,
                               int max_qubits = kMaxEnumerableVars);

/// <psi|H|psi> for the diagonal Ising Hamiltonian: sum_z |a_z|^2 E(z).
double expectation(const IsingModel& model, const Statevector& state);

/// Simplex minimisation of the ansatz expectation, then the lowest-energy basis state among
/// the most probable ones. Reports `converged = false` when max_iterations is exhausted.
SolveReport solve_vqe(const IsingModel& model, const VqeConfig& config = {});

}  // namespace pickqubo
