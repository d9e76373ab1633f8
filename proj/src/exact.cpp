#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "pickqubo/errors.hpp"
#include "pickqubo/solvers.hpp"
#include "sparse_qubo.hpp"

namespace pickqubo {

std::string_view to_string(SolverKind kind) {
    switch (kind) {
        case SolverKind::exact: return "exact";
        case SolverKind::anneal: return "anneal";
        case SolverKind::vqe: return "vqe";
    }
    return "exact";
}

SolverKind solver_from_string(std::string_view text) {
    if (text == "exact") return SolverKind::exact;
    if (text == "anneal") return SolverKind::anneal;
    if (text == "vqe") return SolverKind::vqe;
    throw InvalidInput("solver: expected exact, anneal or vqe, got \"" + std::string(text) + "\"");
}

namespace {

// Variables that appear in no term never change the energy; the tie-break pins them to 0,
// so only the support is enumerated. Index order is preserved, hence so is the tie-break.
std::vector<int> support(const QuboModel& model) {
    std::vector<char> used(model.num_vars(), 0);
    for (const auto& t : model.linear()) used[t.var] = 1;
    for (const auto& t : model.quadratic()) used[t.i] = used[t.j] = 1;
    std::vector<int> vars;
    for (int v = 0; v < model.num_vars(); ++v) {
        if (used[v]) vars.push_back(v);
    }
    return vars;
}

QuboModel compact(const QuboModel& model, const std::vector<int>& vars) {
    std::vector<int> index(model.num_vars(), -1);
    for (std::size_t k = 0; k < vars.size(); ++k) index[vars[k]] = static_cast<int>(k);
    QuboBuilder builder(static_cast<int>(vars.size()));
    for (const auto& t : model.linear()) builder.add_linear(index[t.var], t.coeff);
    for (const auto& t : model.quadratic()) builder.add_quadratic(index[t.i], index[t.j], t.coeff);
    builder.add_offset(model.offset());
    return builder.build();
}

}  // namespace

SolveReport solve_exact(const QuboModel& model) {
    const std::vector<int> vars = support(model);
    const int n = static_cast<int>(vars.size());
    if (n > kMaxEnumerableVars) {
        throw TooLarge("solve_exact: " + std::to_string(n) + " active variables exceed the limit of " +
                       std::to_string(kMaxEnumerableVars));
    }
    const QuboModel reduced = compact(model, vars);
    const detail::SparseQubo sparse(reduced);

    // High bits are set explicitly per block and the energy recomputed from scratch; the low
    // bits are walked in Gray-code order with incremental updates. Keeps rounding drift tiny.
    const int low = std::min(n, 12);
    const std::uint64_t blocks = std::uint64_t{1} << (n - low);
    const std::uint64_t inner = std::uint64_t{1} << low;

    double best_energy = std::numeric_limits<double>::infinity();
    std::uint64_t best_value = 0;
    auto consider = [&](double energy, std::uint64_t value) {
        if (!std::isfinite(best_energy)) {
            best_energy = energy;
            best_value = value;
            return;
        }
        const double tol = 1e-9 * std::max(1.0, std::abs(best_energy));
        if (energy < best_energy - tol || (energy <= best_energy + tol && value < best_value)) {
            best_energy = energy;
            best_value = value;
        }
    };

    BitAssignment bits(n, 0);
    std::vector<double> field;
    for (std::uint64_t block = 0; block < blocks; ++block) {
        const std::uint64_t high = block << low;
        for (int k = 0; k < n; ++k) bits[k] = static_cast<std::uint8_t>((high >> k) & 1U);
        double energy = sparse.energy(bits);
        sparse.local_fields(bits, field);
        consider(energy, high);
        std::uint64_t gray = 0;
        for (std::uint64_t g = 1; g < inner; ++g) {
            const int k = std::countr_zero(g);
            energy += sparse.flip(bits, field, k);
            gray ^= std::uint64_t{1} << k;
            consider(energy, high | gray);
        }
    }

    SolveReport report;
    report.best.assign(model.num_vars(), 0);
    for (int k = 0; k < n; ++k) report.best[vars[k]] = static_cast<std::uint8_t>((best_value >> k) & 1U);
    report.energy = qubo_energy(model, report.best);
    report.trajectory.push_back({0, report.energy});
    report.solver = SolverKind::exact;
    return report;
}

}  // namespace pickqubo
