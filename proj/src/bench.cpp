#include "pickqubo/bench.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "pickqubo/decode.hpp"
#include "pickqubo/errors.hpp"
#include "pickqubo/ising.hpp"
#include "pickqubo/oracle.hpp"
#include "pickqubo/scenarios.hpp"

namespace pickqubo {

namespace {

BenchRow count_row(int items, int capacity, EncodingMode mode) {
    BenchRow row;
    row.items = items;
    row.robots = 1;
    row.mode = mode;
    row.qubits = qubit_count(items, 1, capacity, mode);
    return row;
}

BenchRow solve_row(const Instance& instance, const BenchOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const QuboModel model = assemble_qubo(instance, options.mode);
    SolveReport report;
    switch (options.solver) {
        case SolverKind::exact: report = solve_exact(model); break;
        case SolverKind::anneal: {
            AnnealConfig config;
            config.seed = options.seed;
            report = solve_anneal(model, config);
            break;
        }
        case SolverKind::vqe: {
            VqeConfig config;
            config.seed = options.seed;
            report = solve_vqe(to_ising(model), config);
            break;
        }
    }
    const Solution solution = decode(report.best, model, instance);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    const OracleResult oracle = oracle_optimum(instance);

    BenchRow row;
    row.items = instance.num_products();
    row.robots = instance.fleet_size();
    row.mode = options.mode;
    row.qubits = model.num_vars();
    row.solver = options.solver;
    row.energy = report.energy;
    row.distance = solution.total_distance;
    row.oracle_distance = oracle.optimal_distance;
    row.match = solution.feasibility.ok() &&
                std::abs(solution.total_distance - oracle.optimal_distance) <=
                    1e-9 * std::max(1.0, oracle.optimal_distance);
    row.wall_ms = elapsed;
    return row;
}

}  // namespace

Scenario scenario_from_string(std::string_view text) {
    if (text == "tab1") return Scenario::tab1;
    if (text == "tab2") return Scenario::tab2;
    if (text == "fig5") return Scenario::fig5;
    if (text == "fig7") return Scenario::fig7;
    throw InvalidInput("bench: unknown scenario \"" + std::string(text) + "\" (expected tab1, tab2, fig5, fig7)");
}

std::vector<BenchRow> run_bench(Scenario scenario, const BenchOptions& options) {
    std::vector<BenchRow> rows;
    switch (scenario) {
        case Scenario::tab1:
            for (int items = 2; items <= 12; ++items) rows.push_back(count_row(items, 45, EncodingMode::full));
            break;
        case Scenario::tab2:
            for (int items = 2; items <= 12; ++items) {
                rows.push_back(count_row(items, items <= 9 ? 15 : 25, EncodingMode::reduced));
            }
            break;
        case Scenario::fig5: {
            const Instance base = fig5_instance();
            for (int robots = 1; robots <= 3; ++robots) rows.push_back(solve_row(base.with_fleet_size(robots), options));
            break;
        }
        case Scenario::fig7: {
            const Instance base = fig7_instance();
            for (int robots = 1; robots <= 4; ++robots) rows.push_back(solve_row(base.with_fleet_size(robots), options));
            break;
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "items,robots,mode,qubits,solver,energy,distance,oracle_distance,match,wall_ms\n";
    for (const BenchRow& row : rows) {
        out += fmt::format("{},{},{},{},", row.items, row.robots, to_string(row.mode), row.qubits);
        if (!row.solver) {
            out += "none,,,,,\n";
            continue;
        }
        out += fmt::format("{},{},{},{},{},{:.3f}\n", to_string(*row.solver), row.energy, row.distance,
                           row.oracle_distance, row.match ? "true" : "false", row.wall_ms);
    }
    return out;
}

}  // namespace pickqubo
