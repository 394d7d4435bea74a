#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "curvlab/cli.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/graph.hpp"

using namespace curvlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "curvlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "curvlab_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string graph_file(const std::string& name, const Graph& g) { return write_temp(name, serialize_edge_list(g)); }

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("girth command") {
    const std::string petersen = graph_file("petersen.txt", gen::petersen());
    CHECK(run_cli({"girth", petersen}).out == "5\n");
    CHECK(run_cli({"girth", graph_file("tree.txt", gen::random_tree(9, 1))}).out == "inf\n");

    const Outcome per = run_cli({"girth", petersen, "--per-vertex", "--format", "json"});
    REQUIRE(per.code == 0);
    const auto doc = parse(per.out);
    CHECK(doc["girth"] == 5);
    CHECK(doc["records"].size() == 10);

    const Outcome tree = run_cli({"girth", graph_file("star.txt", gen::star(3)), "--format", "json"});
    CHECK(parse(tree.out)["girth"] == "inf");
}

TEST_CASE("curvature-cd command") {
    const Outcome star = run_cli({"curvature-cd", graph_file("star3.txt", gen::star(3)), "--vertex", "0"});
    REQUIRE(star.code == 0);
    const auto doc = parse(star.out);
    REQUIRE(doc["records"].size() == 1);
    CHECK(doc["records"][0]["cd_computed"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(doc["dim"] == 2.0);

    const auto c6 = parse(run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6))}).out);
    for (const auto& r : c6["records"]) CHECK(std::abs(r["cd_computed"].get<double>()) <= 1e-8);

    const auto inf = parse(run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6)), "--dim", "inf"}).out);
    CHECK(inf["dim"] == "inf");

    CHECK(run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6)), "--dim", "0"}).code == cli::kExitUsage);
    CHECK(run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6)), "--dim", "-1"}).code == cli::kExitUsage);
    CHECK(run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6)), "--vertex", "6"}).code ==
          cli::kExitUsage);

    const Outcome csv = run_cli({"curvature-cd", graph_file("c6.txt", gen::cycle(6)), "--format", "csv"});
    std::istringstream lines(csv.out);
    std::string first;
    std::getline(lines, first);
    CHECK(first == "vertex,girth,cd_bound,cd_computed,cd_margin,cde_bound,cde_sampled_min,cde_margin,verdict,seed,dim");
}

TEST_CASE("curvature-cde command is reproducible") {
    const std::string p = graph_file("petersen.txt", gen::petersen());
    const Outcome a = run_cli({"curvature-cde", p, "--samples", "200", "--seed", "5"});
    const Outcome b = run_cli({"curvature-cde", p, "--samples", "200", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = parse(a.out);
    for (const auto& r : doc["records"]) {
        CHECK(r["samples_used"] == 200);
        CHECK(r["seed"] == 5);
        CHECK(r["cde_sampled_min"].get<double>() >= -2.5);
        CHECK(r["argmin"].size() == 10);
    }
    CHECK(run_cli({"curvature-cde", p, "--samples", "0"}).code == cli::kExitUsage);
}

TEST_CASE("verify command exit codes") {
    const std::string p = graph_file("petersen.txt", gen::petersen());
    const Outcome a = run_cli({"verify", p, "--samples", "300", "--seed", "1"});
    const Outcome b = run_cli({"verify", p, "--samples", "300", "--seed", "1"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    const auto doc = parse(a.out);
    CHECK(doc["summary"]["pass"] == 10);
    CHECK(doc["summary"]["fail"] == 0);
    for (const auto& r : doc["records"]) {
        CHECK(r["verdict"] == "pass");
        CHECK(r.contains("cd_margin"));
        CHECK_FALSE(r.contains("witness"));
    }

    const Outcome tri = run_cli({"verify", graph_file("k3.txt", gen::complete(3)), "--samples", "10"});
    CHECK(tri.code == cli::kExitPreconditionUnmet);
    CHECK(parse(tri.out)["summary"]["precondition_not_met"] == 3);

    // C5 has girth exactly 5: admitted by default, excluded under --strict-girth.
    const std::string c5 = graph_file("c5.txt", gen::cycle(5));
    CHECK(run_cli({"verify", c5, "--theorem", "cd"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", c5, "--theorem", "cd", "--strict-girth"}).code == cli::kExitPreconditionUnmet);

    // Tight vertices are noted on stderr.
    const Outcome c6 = run_cli({"verify", graph_file("c6.txt", gen::cycle(6)), "--theorem", "cd"});
    CHECK(c6.code == cli::kExitOk);
}

TEST_CASE("input errors") {
    CHECK(run_cli({"girth", "/nonexistent/graph.txt"}).code == cli::kExitInputError);
    CHECK(run_cli({"girth", write_temp("loop.txt", "0 0\n")}).code == cli::kExitInputError);
    CHECK(run_cli({"girth", write_temp("split.txt", "0 1\n2 3\n")}).code == cli::kExitInputError);
    CHECK(run_cli({"girth", write_temp("garbage.txt", "0 x\n")}).code == cli::kExitInputError);
    const std::string sparse = write_temp("sparse.txt", "0 1\n1 5\n");
    CHECK(run_cli({"girth", sparse}).code == cli::kExitInputError);
    const Outcome compact = run_cli({"girth", sparse, "--compact-ids"});
    CHECK(compact.code == cli::kExitOk);
    CHECK(compact.err.find("warning") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"gen", "hypercube", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"gen", "cycle"}).code == cli::kExitUsage);
    CHECK(run_cli({"gen", "cycle", "2"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("gen command round trip") {
    const Outcome cycle = run_cli({"gen", "cycle", "6"});
    CHECK(cycle.code == 0);
    CHECK(std::count(cycle.out.begin(), cycle.out.end(), '\n') == 6);
    CHECK(parse_edge_list(cycle.out) == gen::cycle(6));

    const Outcome petersen = run_cli({"gen", "petersen"});
    CHECK(std::count(petersen.out.begin(), petersen.out.end(), '\n') == 15);
    CHECK(parse_edge_list(petersen.out) == gen::petersen());

    const Outcome r1 = run_cli({"gen", "random-girth", "30", "36", "--seed", "4"});
    const Outcome r2 = run_cli({"gen", "random-girth", "30", "36", "--seed", "4"});
    CHECK(r1.out == r2.out);
    CHECK(parse_edge_list(r1.out) == gen::random_with_girth(30, 36, 5, 4).graph);

    const Outcome tree = run_cli({"gen", "tree", "12", "--seed", "3"});
    CHECK(parse_edge_list(tree.out) == gen::random_tree(12, 3));

    const std::string path = (fs::temp_directory_path() / "curvlab_cli_test" / "gen_out.txt").string();
    CHECK(run_cli({"gen", "star", "4", "-o", path}).code == 0);
    std::ifstream in(path);
    const std::string written((std::istreambuf_iterator<char>(in)), {});
    CHECK(parse_edge_list(written) == gen::star(4));
}

TEST_CASE("executable exit status") {
    const std::string p = graph_file("petersen.txt", gen::petersen());
    const std::string tool = CURVLAB_TOOL_PATH;
    const int status = std::system((tool + " girth " + p + " > /dev/null").c_str());
    CHECK(status == 0);
    const int bad = std::system((tool + " girth /nonexistent 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(bad) == cli::kExitInputError);
}
