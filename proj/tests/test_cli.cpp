#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "signedcolor/embedding.hpp"
#include "signedcolor/instance.hpp"

using namespace signedcolor;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "signedcolor_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path capture = scratch_dir() / "stdout.txt";
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + capture.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("gen, color and verify compose with exit code zero") {
    fs::path inst = scratch_dir() / "inst.json";
    fs::path col = scratch_dir() / "col.json";
    RunResult gen = run_cli("gen --kind stacked --n 30 --seed 5 --neg-prob 0.5 --lists uniform:5 --output " +
                            inst.string());
    CHECK(gen.exit_code == 0);
    RunResult color = run_cli("color --input " + inst.string() + " --mode five --output " + col.string());
    CHECK(color.exit_code == 0);
    RunResult verify = run_cli("verify --input " + inst.string() + " --coloring " + col.string());
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("proper") != std::string::npos);
}

TEST_CASE("every solver mode round-trips through verify on a fitting instance") {
    fs::path col = scratch_dir() / "mode.json";

    fs::path stacked = scratch_dir() / "stacked4.json";
    run_cli("gen --kind stacked --n 24 --seed 11 --lists uniform:4 --output " + stacked.string());
    CHECK(run_cli("color --input " + stacked.string() + " --mode defective --output " + col.string())
              .exit_code == 0);

    fs::path outer = scratch_dir() / "outer.json";
    run_cli("gen --kind outerplanar --n 20 --seed 12 --lists uniform:3 --output " + outer.string());
    CHECK(run_cli("color --input " + outer.string() + " --mode outerplanar --output " + col.string())
              .exit_code == 0);
    CHECK(run_cli("verify --input " + outer.string() + " --coloring " + col.string()).exit_code == 0);

    CHECK(run_cli("color --input " + fixture("wheel_w5.json") + " --mode symmetric --output " +
                  col.string())
              .exit_code == 0);
    CHECK(run_cli("verify --input " + fixture("wheel_w5.json") + " --coloring " + col.string())
              .exit_code == 0);

    fs::path deg = scratch_dir() / "deg.json";
    run_cli("gen --kind outerplanar --n 15 --seed 13 --lists uniform:3 --output " + deg.string());
    CHECK(run_cli("color --input " + deg.string() + " --mode degeneracy --output " + col.string())
              .exit_code == 0);
}

TEST_CASE("oracle answers match the shipped instances") {
    RunResult unsat = run_cli("oracle --input " + fixture("k4_all_positive.json"));
    CHECK(unsat.exit_code == 1);
    CHECK(unsat.out == "UNSAT\n");

    RunResult sat = run_cli("oracle --input " + fixture("path_mixed_signs.json"));
    CHECK(sat.exit_code == 0);
    CHECK(sat.out == "SAT\n");

    RunResult tight = run_cli("oracle --input " + fixture("wheel_w5_tight_lists.json"));
    CHECK(tight.exit_code == 1);
    CHECK(tight.out == "UNSAT\n");

    RunResult negpath = run_cli("oracle --input " + fixture("path_all_negative.json"));
    CHECK(negpath.exit_code == 0);

    // A SAT run can write its witness, which verify then accepts.
    fs::path witness = scratch_dir() / "witness.json";
    RunResult with_witness = run_cli("oracle --input " + fixture("path_mixed_signs.json") +
                                     " --output " + witness.string());
    CHECK(with_witness.exit_code == 0);
    CHECK(run_cli("verify --input " + fixture("path_mixed_signs.json") + " --coloring " +
                  witness.string())
              .exit_code == 0);

    RunResult positive = run_cli("oracle --input " + fixture("k4_all_positive.json") + " --mode positive");
    CHECK(positive.exit_code == 1);  // all edges positive, same constraints

    RunResult budget = run_cli("oracle --input " + fixture("k4_all_positive.json") + " --budget 2");
    CHECK(budget.exit_code == 4);
    CHECK(budget.out == "BUDGET\n");
}

TEST_CASE("balance reports witnesses on the shipped instances") {
    RunResult unbalanced = run_cli("balance --input " + fixture("k4_negative_matching.json"));
    CHECK(unbalanced.exit_code == 0);
    CHECK(unbalanced.out.find("UNBALANCED negative_cycle:") == 0);

    RunResult balanced = run_cli("balance --input " + fixture("c4_all_negative.json"));
    CHECK(balanced.exit_code == 0);
    CHECK(balanced.out.find("BALANCED switch_set:") == 0);
}

TEST_CASE("switch writes a transported instance") {
    fs::path out = scratch_dir() / "switched.json";
    RunResult sw = run_cli("switch --input " + fixture("c4_all_negative.json") + " --set 0,2 --output " +
                           out.string());
    CHECK(sw.exit_code == 0);
    InstanceFile inst = parse_instance(slurp(out));
    for (const auto& e : inst.edges) CHECK(e.sign == +1);

    // Lists are negated on the switched vertices.
    fs::path out2 = scratch_dir() / "switched_path.json";
    run_cli("switch --input " + fixture("path_mixed_signs.json") + " --set 2 --output " + out2.string());
    InstanceFile path = parse_instance(slurp(out2));
    REQUIRE(path.lists.has_value());
    CHECK(path.lists->at(2) == std::vector<int>{1, 2});
    CHECK(path.lists->at(0) == std::vector<int>{1, 2});
}

TEST_CASE("triangulate emits a valid near-triangulation instance") {
    fs::path out = scratch_dir() / "triangulated.json";
    RunResult tri = run_cli("triangulate --input " + fixture("wheel_w5.json") +
                            " --sign-policy always_negative --output " + out.string());
    CHECK(tri.exit_code == 0);
    InstanceFile inst = parse_instance(slurp(out));
    PlaneGraph pg = inst.plane_graph();
    CHECK(is_near_triangulation(pg));
    CHECK(pg.outer().boundary.size() == 3);
    CHECK(inst.edges.size() == 3u * 6 - 6);

    // Lists ride along untouched.
    fs::path out2 = scratch_dir() / "triangulated_path.json";
    run_cli("triangulate --input " + fixture("path_mixed_signs.json") + " --output " + out2.string());
    InstanceFile path = parse_instance(slurp(out2));
    CHECK(path.edges.size() == 3);
    REQUIRE(path.lists.has_value());
    CHECK(path.lists->at(2) == std::vector<int>{-2, -1});
    CHECK(is_near_triangulation(path.plane_graph()));
}

TEST_CASE("exit codes distinguish failure classes") {
    fs::path col = scratch_dir() / "bad.json";
    // Lists of size 2 cannot feed the 5-list solver.
    RunResult precondition = run_cli("color --input " + fixture("wheel_w5_tight_lists.json") +
                                     " --mode five --output " + col.string());
    CHECK(precondition.exit_code == 2);

    // No lists at all: same class.
    RunResult missing = run_cli("color --input " + fixture("wheel_w5.json") + " --mode five --output " +
                                col.string());
    CHECK(missing.exit_code == 2);

    fs::path garbage = scratch_dir() / "garbage.json";
    std::ofstream(garbage) << "{ not json";
    CHECK(run_cli("color --input " + garbage.string() + " --mode five --output " + col.string())
              .exit_code == 3);

    CHECK(run_cli("color --input " + fixture("wheel_w5.json") + " --mode bogus --output " +
                  col.string())
              .exit_code == 5);

    // An improper coloring file fails verification with exit 1.
    fs::path wrong = scratch_dir() / "wrong.json";
    std::ofstream(wrong) << R"({"format_version":1,"coloring":{"0":1,"1":1,"2":1,"3":1,"4":1,"5":1}})";
    RunResult verify = run_cli("verify --input " + fixture("wheel_w5.json") + " --coloring " +
                               wrong.string());
    CHECK(verify.exit_code == 1);
    CHECK(verify.out.find("violated edge") != std::string::npos);
}

TEST_CASE("generated output is byte-identical under a fixed seed") {
    fs::path a = scratch_dir() / "same_a.json";
    fs::path b = scratch_dir() / "same_b.json";
    run_cli("gen --kind outerplanar --n 18 --seed 99 --output " + a.string());
    run_cli("gen --kind outerplanar --n 18 --seed 99 --output " + b.string());
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("the environment seed is honored and overridden by --seed") {
    fs::path by_env = scratch_dir() / "env.json";
    fs::path by_flag = scratch_dir() / "flag.json";
    fs::path capture = scratch_dir() / "env_out.txt";
    std::string cmd = "SIGNEDCOLOR_SEED=417 " + std::string(CLI_PATH) +
                      " gen --kind stacked --n 9 --output " + by_env.string() + " > " +
                      capture.string() + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    run_cli("gen --kind stacked --n 9 --seed 417 --output " + by_flag.string());
    CHECK(slurp(by_env) == slurp(by_flag));

    fs::path overridden = scratch_dir() / "override.json";
    cmd = "SIGNEDCOLOR_SEED=1 " + std::string(CLI_PATH) +
          " gen --kind stacked --n 9 --seed 417 --output " + overridden.string() + " > " +
          capture.string() + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(overridden) == slurp(by_flag));
}

TEST_CASE("disconnected instances are split into components before solving") {
    fs::path inst = scratch_dir() / "disconnected.json";
    std::ofstream(inst) << R"({
      "format_version": 1,
      "vertices": 6,
      "edges": [[0, 1, 1], [0, 2, -1], [1, 2, 1], [3, 4, -1], [3, 5, 1], [4, 5, 1]],
      "rotation": [[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]],
      "lists": [[1, 2, 3, 4, 5], [1, 2, 3, 4, 5], [1, 2, 3, 4, 5],
                [1, 2, 3, 4, 5], [1, 2, 3, 4, 5], [1, 2, 3, 4, 5]]
    })";
    fs::path col = scratch_dir() / "disconnected_col.json";
    RunResult color = run_cli("color --input " + inst.string() + " --mode five --output " + col.string());
    CHECK(color.exit_code == 0);
    CHECK(run_cli("verify --input " + inst.string() + " --coloring " + col.string()).exit_code == 0);
}

TEST_CASE("bench enforces its trial floor and writes a report") {
    fs::path report = scratch_dir() / "report.json";
    CHECK(run_cli("bench --sizes 20,40 --trials 1 --report " + report.string()).exit_code == 2);
    RunResult ok = run_cli("bench --sizes 20,40 --trials 3 --seed 3 --report " + report.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("fitted exponent") != std::string::npos);
    CHECK(slurp(report).find("\"rows\"") != std::string::npos);
}
