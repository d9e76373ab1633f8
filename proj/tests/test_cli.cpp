#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using pickqubo::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "pickqubo");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "pickqubo_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("qubits") {
    CHECK(invoke({"qubits", "-n", "3", "-k", "1", "-m", "45", "--mode", "full"}).out == "26\n");
    CHECK(invoke({"qubits", "-n", "11", "-k", "1", "-m", "25", "--mode", "reduced"}).out == "137\n");
    CHECK(invoke({"qubits", "-n", "1", "-k", "1", "-m", "1", "--mode", "reduced"}).out == "2\n");

    const Result sweep = invoke({"qubits", "-k", "1", "-m", "45", "--mode", "full", "--sweep", "2..12"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.rfind("items,robots,capacity,mode,qubits\n2,1,45,full,18\n", 0) == 0);
    CHECK(sweep.out.find("12,1,45,full,188\n") != std::string::npos);

    CHECK(invoke({"qubits", "-n", "0"}).code == 1);
    CHECK(invoke({"qubits", "-k", "1", "--sweep", "5..2"}).code == 1);
}

TEST_CASE("solve") {
    const fs::path dir = scratch_dir();
    SUBCASE("exact on fig5 with one robot reaches the oracle") {
        const Result solved = invoke({"solve", "--instance", "data/fig5.json", "--solver", "exact", "--robots-override", "1"});
        REQUIRE(solved.code == 0);
        const auto doc = nlohmann::json::parse(solved.out);
        CHECK(doc["feasible"] == true);
        CHECK(doc["routes"].size() == 1);
        CHECK(doc["routes"][0].size() == 6);

        const Result oracle = invoke({"oracle", "-i", "data/fig5.json", "-k", "1"});
        REQUIRE(oracle.code == 0);
        const auto best = nlohmann::json::parse(oracle.out);
        CHECK(doc["total_distance"].get<double>() == doctest::Approx(best["total_distance"].get<double>()).epsilon(1e-9));
        CHECK(solved.err.find("total distance") != std::string::npos);
    }
    SUBCASE("annealing is byte-identical across runs") {
        const fs::path a = dir / "a.json";
        const fs::path b = dir / "b.json";
        REQUIRE(invoke({"solve", "-i", "data/fig5.json", "--solver", "anneal", "--seed", "7", "-o", a.string()}).code == 0);
        REQUIRE(invoke({"solve", "-i", "data/fig5.json", "--solver", "anneal", "--seed", "7", "-o", b.string()}).code == 0);
        CHECK(read_file(a) == read_file(b));
        CHECK_FALSE(read_file(a).empty());
    }
    SUBCASE("overweight instance exits 2 and lists violations") {
        const fs::path heavy = dir / "heavy.json";
        write_file(heavy, R"({"name":"heavy","capacity":5,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":3},{"id":2,"weight":3}],
            "distances":[[0,1,2],[1,0,3],[2,3,0]]})");
        const Result r = invoke({"solve", "-i", heavy.string(), "--solver", "exact"});
        CHECK(r.code == 2);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["feasible"] == false);
        CHECK_FALSE(doc["violations"].empty());
        CHECK(r.err.find("feasible: no") != std::string::npos);
    }
    SUBCASE("vqe on a two-qubit instance") {
        const fs::path tiny = dir / "tiny.json";
        write_file(tiny, R"({"name":"tiny","capacity":1,"robots":1,"metric":"explicit",
            "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,4],[4,0]]})");
        const Result r = invoke({"solve", "-i", tiny.string(), "--solver", "vqe", "--seed", "1"});
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["total_distance"] == 8.0);
    }
    SUBCASE("errors exit 1") {
        CHECK(invoke({"solve", "-i", "missing.json"}).code == 1);
        CHECK(invoke({"solve", "-i", "data/fig5.json", "--solver", "magic"}).code == 1);
        CHECK(invoke({"solve", "-i", "data/fig5.json", "--mode", "half"}).code == 1);
        CHECK(invoke({"solve", "-i", "data/fig5.json", "--solver", "exact"}).code == 1);  // too many variables
        CHECK(invoke({"solve", "-i", "data/fig5.json", "--lambda-route", "-1"}).code == 1);
        CHECK(invoke({"frobnicate"}).code == 1);
        CHECK(invoke({}).code == 1);
    }
}

TEST_CASE("oracle") {
    const Result r = invoke({"oracle", "-i", "data/fig5.json", "-k", "1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["feasible"] == true);
    CHECK(doc["loads"][0] == 22.0);
    CHECK(doc["assignments_searched"].get<int>() >= 1);

    const fs::path big = scratch_dir() / "big.json";
    std::string nodes = R"({"id":0,"weight":0,"pos":[0,0]})";
    for (int i = 1; i <= 9; ++i) nodes += R"(,{"id":)" + std::to_string(i) + R"(,"weight":1,"pos":[)" + std::to_string(i) + ",0]}";
    write_file(big, R"({"name":"big","capacity":45,"robots":1,"metric":"manhattan","nodes":[)" + nodes + "]}");
    const Result too_large = invoke({"oracle", "-i", big.string()});
    CHECK(too_large.code == 1);
    CHECK_FALSE(too_large.err.empty());
}

TEST_CASE("bench") {
    const Result tab1 = invoke({"bench", "tab1"});
    REQUIRE(tab1.code == 0);
    CHECK(tab1.out.find("2,1,full,18,none") != std::string::npos);
    CHECK(tab1.out.find("12,1,full,188,none") != std::string::npos);

    const Result tab2 = invoke({"bench", "tab2"});
    CHECK(tab2.out.find("12,1,reduced,161,none") != std::string::npos);

    const Result fig5 = invoke({"bench", "fig5", "--solver", "anneal", "--seed", "3"});
    REQUIRE(fig5.code == 0);
    std::istringstream rows(fig5.out);
    std::string line;
    std::getline(rows, line);
    int count = 0;
    while (std::getline(rows, line)) {
        ++count;
        CHECK(line.find(",true,") != std::string::npos);
    }
    CHECK(count == 3);
    CHECK(invoke({"bench", "tab9"}).code == 1);
}

TEST_CASE("plot") {
    const fs::path dir = scratch_dir();
    const fs::path solution = dir / "fig5_solution.json";
    REQUIRE(invoke({"solve", "-i", "data/fig5.json", "-k", "1", "--seed", "2", "-o", solution.string()}).code == 0);
    const fs::path first = dir / "first.svg";
    const fs::path second = dir / "second.svg";
    REQUIRE(invoke({"plot", "-s", solution.string(), "-i", "data/fig5.json", "-o", first.string()}).code == 0);
    REQUIRE(invoke({"plot", "-s", solution.string(), "-i", "data/fig5.json", "-o", second.string()}).code == 0);
    const std::string svg = read_file(first);
    CHECK(svg == read_file(second));
    CHECK(svg.find("<polyline") != std::string::npos);

    const fs::path flat = dir / "flat.json";
    write_file(flat, R"({"name":"flat","capacity":1,"robots":1,"metric":"explicit",
        "nodes":[{"id":0,"weight":0},{"id":1,"weight":1}],"distances":[[0,4],[4,0]]})");
    const fs::path flat_solution = dir / "flat_solution.json";
    REQUIRE(invoke({"solve", "-i", flat.string(), "--solver", "exact", "-o", flat_solution.string()}).code == 0);
    CHECK(invoke({"plot", "-s", flat_solution.string(), "-i", flat.string()}).code == 1);
}
