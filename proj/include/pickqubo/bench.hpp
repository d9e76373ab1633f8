#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pickqubo/formulation.hpp"
#include "pickqubo/solvers.hpp"

namespace pickqubo {

enum class Scenario { tab1, tab2, fig5, fig7 };

Scenario scenario_from_string(std::string_view text);

/// One CSV row. Counting-only rows (tab1, tab2) leave the solve columns empty.
struct BenchRow {
    int items = 0;
    int robots = 0;
    EncodingMode mode = EncodingMode::reduced;
    int qubits = 0;
    std::optional<SolverKind> solver;
    double energy = 0.0;
    double distance = 0.0;
    double oracle_distance = 0.0;
    bool match = false;
    double wall_ms = 0.0;  // informational, never compared
};

struct BenchOptions {
    SolverKind solver = SolverKind::anneal;
    EncodingMode mode = EncodingMode::reduced;
    std::uint64_t seed = 0;
};

std::vector<BenchRow> run_bench(Scenario scenario, const BenchOptions& options = {});

/// items,robots,mode,qubits,solver,energy,distance,oracle_distance,match,wall_ms
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace pickqubo
