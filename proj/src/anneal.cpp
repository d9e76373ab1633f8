#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "pickqubo/errors.hpp"
#include "pickqubo/solvers.hpp"
#include "sparse_qubo.hpp"

namespace pickqubo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// [0, 1) from the top 53 bits; independent of the standard library's distribution code.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct RestartResult {
    BitAssignment bits;
    double energy;
};

}  // namespace

SolveReport solve_anneal(const QuboModel& model, const AnnealConfig& config) {
    const int n = model.num_vars();
    if (n < 1) throw InvalidInput("solve_anneal: model has no variables");
    if (config.sweeps < 1) throw InvalidInput("solve_anneal: sweeps must be positive");
    if (config.restarts < 1) throw InvalidInput("solve_anneal: restarts must be positive");

    const double scale_hi = model.max_abs_coeff() > 0.0 ? model.max_abs_coeff() : 1.0;
    const double scale_lo = model.min_abs_coeff() > 0.0 ? model.min_abs_coeff() : 1.0;
    const double t_initial = config.t_initial.value_or(scale_hi);
    const double t_final = config.t_final.value_or(1e-3 * scale_lo);
    if (!(t_final > 0.0) || !(t_initial >= t_final)) {
        throw InvalidInput("solve_anneal: need t_initial >= t_final > 0");
    }
    const double ratio = config.sweeps > 1 ? std::pow(t_final / t_initial, 1.0 / (config.sweeps - 1)) : 1.0;

    const detail::SparseQubo sparse(model);
    SolveReport report;
    report.solver = SolverKind::anneal;
    report.seed = config.seed;
    double global_best = std::numeric_limits<double>::infinity();

    BitAssignment bits(n);
    std::vector<double> field;
    for (int restart = 0; restart < config.restarts; ++restart) {
        std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(restart))));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
        double energy = sparse.energy(bits);
        sparse.local_fields(bits, field);

        RestartResult best{bits, energy};
        double temperature = t_initial;
        for (int sweep = 0; sweep < config.sweeps; ++sweep) {
            bool improved = false;
            for (int v = 0; v < n; ++v) {
                const double delta = sparse.flip_delta(bits, field, v);
                if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / temperature)) {
                    energy += sparse.flip(bits, field, v);
                    if (energy < best.energy - 1e-12 * std::max(1.0, std::abs(best.energy))) {
                        best.bits = bits;
                        best.energy = energy;
                        improved = true;
                    }
                }
            }
            if (improved) {
                // Resynchronise so rounding drift never leaks into reported energies.
                energy = sparse.energy(bits);
                sparse.local_fields(bits, field);
                best.energy = sparse.energy(best.bits);
                if (best.energy < global_best) {
                    global_best = best.energy;
                    report.best = best.bits;
                    report.trajectory.push_back({restart * config.sweeps + sweep, global_best});
                }
            }
            temperature *= ratio;
        }
        best.energy = sparse.energy(best.bits);
        if (report.best.empty() || best.energy < global_best) {
            global_best = best.energy;
            report.best = best.bits;
            report.trajectory.push_back({restart * config.sweeps + config.sweeps - 1, global_best});
        }
    }
    report.energy = qubo_energy(model, report.best);
    return report;
}

}  // namespace pickqubo
