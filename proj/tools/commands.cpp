#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pickqubo/bench.hpp"
#include "pickqubo/decode.hpp"
#include "pickqubo/errors.hpp"
#include "pickqubo/formulation.hpp"
#include "pickqubo/ising.hpp"
#include "pickqubo/oracle.hpp"
#include "pickqubo/plot.hpp"
#include "pickqubo/solvers.hpp"

namespace pickqubo::cli {

namespace {

struct SolveArgs {
    std::string instance_path;
    std::string solver = "anneal";
    std::string mode = "reduced";
    std::uint64_t seed = 0;
    std::optional<double> lambda_route;
    std::optional<double> lambda_capacity;
    std::optional<int> robots_override;
    std::string output;
    int sweeps = AnnealConfig{}.sweeps;
    int restarts = AnnealConfig{}.restarts;
    int layers = VqeConfig{}.layers;
    int max_iterations = VqeConfig{}.max_iterations;
};

struct QubitsArgs {
    int items = 0;
    int robots = 1;
    int capacity = 1;
    std::string mode = "reduced";
    std::string sweep;
};

struct OracleArgs {
    std::string instance_path;
    std::optional<int> robots_override;
    std::string output;
};

struct BenchArgs {
    std::string scenario;
    std::string solver = "anneal";
    std::string mode = "reduced";
    std::uint64_t seed = 0;
    std::string output;
};

struct PlotArgs {
    std::string solution_path;
    std::string instance_path;
    std::string output;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << content;
    if (!out) throw InvalidInput("failed writing '" + path + "'");
}

// The document goes to `path`, or to stdout when no path was given.
void emit(const std::string& path, const std::string& document, std::ostream& out) {
    if (path.empty()) {
        out << document;
    } else {
        write_file(path, document);
    }
}

Instance load_with_override(const std::string& path, const std::optional<int>& robots) {
    Instance instance = load_instance(read_file(path));
    return robots ? instance.with_fleet_size(*robots) : instance;
}

std::string format_route(const Route& route) {
    std::string text;
    for (std::size_t k = 0; k < route.size(); ++k) text += (k ? " -> " : "") + std::to_string(route[k]);
    return text;
}

void print_summary(const Solution& solution, const Instance& instance, std::ostream& out) {
    for (std::size_t p = 0; p < solution.routes.size(); ++p) {
        out << fmt::format("robot {}: {}  (load {}/{})\n", p + 1, format_route(solution.routes[p]),
                           solution.loads[p], instance.capacity());
    }
    out << fmt::format("robots used: {}/{}\n", solution.robots_used, instance.fleet_size());
    out << fmt::format("total distance: {}\n", solution.total_distance);
    out << fmt::format("energy: {}\n", solution.energy);
    if (solution.feasibility.ok()) {
        out << "feasible: yes\n";
        return;
    }
    out << fmt::format("feasible: no ({} violations)\n", solution.feasibility.violations.size());
    for (const auto& v : solution.feasibility.violations) {
        out << "  " << to_string(v.kind);
        if (v.robot) out << " robot=" << *v.robot + 1;
        if (v.time) out << " t=" << *v.time;
        if (v.product) out << " product=" << *v.product;
        out << " magnitude=" << v.magnitude << "\n";
    }
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    const Instance instance = load_with_override(args.instance_path, args.robots_override);
    const EncodingMode mode = mode_from_string(args.mode);
    const SolverKind solver = solver_from_string(args.solver);

    PenaltyWeights weights = auto_penalty_weights(instance);
    if (args.lambda_route) weights.route = *args.lambda_route;
    if (args.lambda_capacity) weights.capacity = *args.lambda_capacity;
    const QuboModel model = assemble_qubo(instance, mode, weights);

    SolveReport report;
    switch (solver) {
        case SolverKind::exact: report = solve_exact(model); break;
        case SolverKind::anneal: {
            AnnealConfig config;
            config.seed = args.seed;
            config.sweeps = args.sweeps;
            config.restarts = args.restarts;
            report = solve_anneal(model, config);
            break;
        }
        case SolverKind::vqe: {
            VqeConfig config;
            config.seed = args.seed;
            config.layers = args.layers;
            config.max_iterations = args.max_iterations;
            report = solve_vqe(to_ising(model), config);
            if (!report.converged) err << "warning: VQE did not converge within max-iterations\n";
            break;
        }
    }

    Solution solution = decode(report.best, model, instance);
    solution.solver = std::string(to_string(solver));
    solution.seed = args.seed;

    // Keep stdout clean for the document when it is not written to a file.
    std::ostream& summary = args.output.empty() ? err : out;
    print_summary(solution, instance, summary);
    emit(args.output, solution_to_json(solution), out);
    return solution.feasibility.ok() ? kExitOk : kExitInfeasible;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) throw std::invalid_argument(text);
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw InvalidInput("--sweep: expected LO..HI with 1 <= LO <= HI, got \"" + text + "\"");
    }
}

int cmd_qubits(const QubitsArgs& args, std::ostream& out) {
    const EncodingMode mode = mode_from_string(args.mode);
    if (args.sweep.empty()) {
        out << qubit_count(args.items, args.robots, args.capacity, mode) << "\n";
        return kExitOk;
    }
    const auto [lo, hi] = parse_range(args.sweep);
    out << "items,robots,capacity,mode,qubits\n";
    for (int items = lo; items <= hi; ++items) {
        out << fmt::format("{},{},{},{},{}\n", items, args.robots, args.capacity, to_string(mode),
                           qubit_count(items, args.robots, args.capacity, mode));
    }
    return kExitOk;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
    const Instance instance = load_with_override(args.instance_path, args.robots_override);
    const OracleResult result = oracle_optimum(instance);
    Solution solution = solution_from_routes(result.routes, instance);
    solution.energy = solution.total_distance;
    solution.solver = "oracle";

    auto doc = nlohmann::json::parse(solution_to_json(solution));
    doc["assignments_searched"] = result.assignments_searched;
    std::ostream& summary = args.output.empty() ? err : out;
    print_summary(solution, instance, summary);
    emit(args.output, doc.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    BenchOptions options;
    options.solver = solver_from_string(args.solver);
    options.mode = mode_from_string(args.mode);
    options.seed = args.seed;
    emit(args.output, bench_csv(run_bench(scenario_from_string(args.scenario), options)), out);
    return kExitOk;
}

int cmd_plot(const PlotArgs& args, std::ostream& out) {
    const Instance instance = load_instance(read_file(args.instance_path));
    const Solution solution = solution_from_json(read_file(args.solution_path));
    if (solution.routes.size() > static_cast<std::size_t>(instance.fleet_size())) {
        throw InvalidInput("plot: solution has more routes than the instance has robots");
    }
    emit(args.output, render_svg(solution, instance), out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Warehouse picking and batching as QUBO/Ising: compile, solve, certify"};
    app.name(args.empty() ? "pickqubo" : args[0]);
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compile an instance to a QUBO and solve it");
    solve_cmd->add_option("--instance,-i", solve.instance_path, "Instance JSON file")->required();
    solve_cmd->add_option("--solver", solve.solver, "exact | anneal | vqe")->capture_default_str();
    solve_cmd->add_option("--mode", solve.mode, "full | reduced")->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
    solve_cmd->add_option("--lambda-route", solve.lambda_route, "Route penalty weight (default: auto)");
    solve_cmd->add_option("--lambda-capacity", solve.lambda_capacity, "Capacity penalty weight (default: auto)");
    solve_cmd->add_option("--robots-override,-k", solve.robots_override, "Replace the instance's robot count");
    solve_cmd->add_option("--output,-o", solve.output, "Solution JSON path (default: stdout)");
    solve_cmd->add_option("--sweeps", solve.sweeps, "Annealing sweeps per restart")->capture_default_str();
    solve_cmd->add_option("--restarts", solve.restarts, "Annealing restarts")->capture_default_str();
    solve_cmd->add_option("--layers", solve.layers, "VQE ansatz layers")->capture_default_str();
    solve_cmd->add_option("--max-iterations", solve.max_iterations, "VQE optimizer iterations")
        ->capture_default_str();

    QubitsArgs qubits;
    auto* qubits_cmd = app.add_subcommand("qubits", "Print the variable (qubit) count of an encoding");
    qubits_cmd->add_option("-n,--items", qubits.items, "Number of products");
    qubits_cmd->add_option("-k,--robots", qubits.robots, "Number of robots")->capture_default_str();
    qubits_cmd->add_option("-m,--capacity", qubits.capacity, "Robot capacity")->capture_default_str();
    qubits_cmd->add_option("--mode", qubits.mode, "full | reduced")->capture_default_str();
    qubits_cmd->add_option("--sweep", qubits.sweep, "Item range LO..HI; prints CSV");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
    oracle_cmd->add_option("--instance,-i", oracle.instance_path, "Instance JSON file")->required();
    oracle_cmd->add_option("--robots-override,-k", oracle.robots_override, "Replace the instance's robot count");
    oracle_cmd->add_option("--output,-o", oracle.output, "Result JSON path (default: stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Reproduce a benchmark scenario as CSV");
    bench_cmd->add_option("scenario", bench.scenario, "tab1 | tab2 | fig5 | fig7")->required();
    bench_cmd->add_option("--solver", bench.solver, "exact | anneal | vqe")->capture_default_str();
    bench_cmd->add_option("--mode", bench.mode, "full | reduced")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--output,-o", bench.output, "CSV path (default: stdout)");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render a solution as SVG");
    plot_cmd->add_option("--solution,-s", plot.solution_path, "Solution JSON file")->required();
    plot_cmd->add_option("--instance,-i", plot.instance_path, "Instance JSON file with positions")->required();
    plot_cmd->add_option("--output,-o", plot.output, "SVG path (default: stdout)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve, out, err);
        if (*qubits_cmd) {
            if (qubits.sweep.empty() && qubits_cmd->count("--items") == 0) {
                throw InvalidInput("qubits: give -n/--items or --sweep");
            }
            return cmd_qubits(qubits, out);
        }
        if (*oracle_cmd) return cmd_oracle(oracle, out, err);
        if (*bench_cmd) return cmd_bench(bench, out);
        if (*plot_cmd) return cmd_plot(plot, out);
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace pickqubo::cli
