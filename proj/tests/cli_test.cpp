#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"
#include "rainbow/edge_list.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;
using namespace rainbow::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("rainbow_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return path / name;
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run capture(F&& fn) {
    std::ostringstream out, err;
    const int code = fn(out, err);
    return {code, out.str(), err.str()};
}

std::string graph_text(const ColoredGraph& g) {
    std::ostringstream s;
    write_edge_list(s, g.edges());
    return s.str();
}

int run_binary(const std::string& args) {
    const int status = std::system((std::string(RAINBOW_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("find on a single edge") {
    TempDir dir;
    const auto input = dir.write("one.txt", "0 1 5\n");
    const Run r = capture([&](auto& o, auto& e) { return cmd_find(input, {}, o, e); });
    CHECK(r.code == kOk);
    CHECK(r.out == "0 1 5\n");
}

TEST_CASE("find json report on K_{4,36}") {
    TempDir dir;
    const auto input = dir.write("k436.txt", graph_text(complete_bipartite_colored(4, 36)));
    FindOptions opts;
    opts.json = true;
    const Run r = capture([&](auto& o, auto& e) { return cmd_find(input, opts, o, e); });
    REQUIRE(r.code == kOk);
    const auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"n", "m", "delta", "Delta", "triangle_free", "threshold",
                            "guarantee_met", "matching", "reduction_steps", "trace_summary",
                            "elapsed_ns"}) {
        CHECK_MESSAGE(doc.contains(key), key);
    }
    CHECK(doc["n"] == 40);
    CHECK(doc["delta"] == 4);
    CHECK(doc["Delta"] == 36);
    CHECK(doc["guarantee_met"] == true);
    CHECK(doc["matching"].size() == 4);
    CHECK(doc["trace_summary"]["violations"].empty());
    CHECK(doc["threshold"].get<double>() == doctest::Approx(505.0 / 32.0));
}

TEST_CASE("find rejects bad input with exit 1") {
    TempDir dir;
    const auto loop = dir.write("loop.txt", "0 0 1\n");
    Run r = capture([&](auto& o, auto& e) { return cmd_find(loop, {}, o, e); });
    CHECK(r.code == kInputError);
    CHECK(r.err.find("SelfLoop") != std::string::npos);

    const auto improper = dir.write("improper.txt", "0 1 3\n1 2 3\n");
    r = capture([&](auto& o, auto& e) { return cmd_find(improper, {}, o, e); });
    CHECK(r.code == kInputError);
    CHECK(r.err.find("ImproperColoring") != std::string::npos);
    CHECK(r.err.find("vertex 1") != std::string::npos);

    const auto garbage = dir.write("garbage.txt", "0 1 2\n\nfoo\n");
    r = capture([&](auto& o, auto& e) { return cmd_find(garbage, {}, o, e); });
    CHECK(r.code == kInputError);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("verify diagnostics") {
    TempDir dir;
    const auto graph = dir.write("g.txt", "0 1 0\n2 3 1\n4 5 0\n");
    const auto good = dir.write("good.txt", "0 1 0\n2 3 1\n");
    const auto clash = dir.write("clash.txt", "0 1 0\n4 5 0\n");
    const auto unknown = dir.write("unknown.txt", "0 2 0\n");
    CHECK(capture([&](auto& o, auto& e) { return cmd_verify(graph, good, o, e); }).code == kOk);
    Run r = capture([&](auto& o, auto& e) { return cmd_verify(graph, clash, o, e); });
    CHECK(r.code != kOk);
    CHECK(r.err.find("duplicate color") != std::string::npos);
    r = capture([&](auto& o, auto& e) { return cmd_verify(graph, unknown, o, e); });
    CHECK(r.code != kOk);
    CHECK(r.err.find("unknown edge") != std::string::npos);
}

TEST_CASE("find output verifies") {
    TempDir dir;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto graph = dir.write("g.txt", graph_text(random_properly_colored(30, 3, seed)));
        const Run found = capture([&](auto& o, auto& e) { return cmd_find(graph, {}, o, e); });
        REQUIRE(found.code == kOk);
        const auto matching = dir.write("m.txt", found.out);
        REQUIRE(capture([&](auto& o, auto& e) { return cmd_verify(graph, matching, o, e); }).code ==
                kOk);
    }
}

TEST_CASE("oracle command") {
    TempDir dir;
    const auto k4 = dir.write("k4.txt", "0 1 0\n2 3 0\n0 2 1\n1 3 1\n0 3 2\n1 2 2\n");
    Run r = capture([&](auto& o, auto& e) { return cmd_oracle(k4, std::nullopt, 40, o, e); });
    CHECK(r.code == kOk);
    CHECK(r.out.rfind("max 1\n", 0) == 0);

    const auto c4 = dir.write("c4.txt", graph_text(latin_to_bipartite(cyclic_latin(4))));
    r = capture([&](auto& o, auto& e) { return cmd_oracle(c4, std::nullopt, 40, o, e); });
    CHECK(r.out.rfind("max 3\n", 0) == 0);

    const auto c3 = dir.write("c3.txt", graph_text(latin_to_bipartite(cyclic_latin(3))));
    r = capture([&](auto& o, auto& e) { return cmd_oracle(c3, 3, 40, o, e); });
    CHECK(r.out == "yes\n");

    r = capture([&](auto& o, auto& e) { return cmd_oracle(c4, std::nullopt, 10, o, e); });
    CHECK(r.code == kInputError);
    CHECK(r.err.find("16 edges") != std::string::npos);
}

TEST_CASE("gen command") {
    GenOptions latin;
    latin.kind = "latin-cyclic";
    latin.params = {3};
    latin.square = true;
    Run r = capture([&](auto& o, auto& e) { return cmd_gen(latin, o, e); });
    CHECK(r.code == kOk);
    CHECK(r.out == "3\n0 1 2\n1 2 0\n2 0 1\n");

    GenOptions kab;
    kab.kind = "kab";
    kab.params = {2, 3};
    r = capture([&](auto& o, auto& e) { return cmd_gen(kab, o, e); });
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

    GenOptions random;
    random.kind = "random";
    random.params = {27, 4};
    random.seed = 7;
    const Run a = capture([&](auto& o, auto& e) { return cmd_gen(random, o, e); });
    const Run b = capture([&](auto& o, auto& e) { return cmd_gen(random, o, e); });
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    GenOptions bad = random;
    bad.params = {4, 4};
    r = capture([&](auto& o, auto& e) { return cmd_gen(bad, o, e); });
    CHECK(r.code == kInputError);
    CHECK(r.err.find("InfeasibleDegree") != std::string::npos);

    bad.kind = "latin-cyclic";
    bad.params = {0};
    r = capture([&](auto& o, auto& e) { return cmd_gen(bad, o, e); });
    CHECK(r.err.find("ZeroOrder") != std::string::npos);
}

TEST_CASE("bench command") {
    TempDir dir;
    BenchOptions opts;
    opts.deltas = {6};
    opts.sizes = {100, 200};
    opts.reps = 3;
    opts.csv_out = dir.path / "bench.csv";
    const Run r = capture([&](auto& o, auto& e) { return cmd_bench(opts, o, e); });
    CHECK(r.code == kOk);
    std::ifstream in(*opts.csv_out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "delta,n,m,reps,median_ns,matching_size");
    CHECK(lines[1].rfind("6,100,", 0) == 0);
    CHECK(lines[1].substr(lines[1].rfind(',')) == ",6");

    BenchOptions empty;
    CHECK(capture([&](auto& o, auto& e) { return cmd_bench(empty, o, e); }).code == kInputError);
}

TEST_CASE("trace command") {
    TempDir dir;
    const auto graph = dir.write("g.txt", graph_text(random_properly_colored(12, 3, 4)));
    const Run r = capture([&](auto& o, auto& e) { return cmd_trace(graph, false, o, e); });
    CHECK(r.code == kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["violations"].empty());
    CHECK(doc["steps"].size() == doc["k"].get<std::size_t>());
}

TEST_CASE("binary exit codes") {
    TempDir dir;
    const auto one = dir.write("one.txt", "0 1 5\n");
    const auto loop = dir.write("loop.txt", "0 0 1\n");
    CHECK(run_binary("find " + one.string()) == 0);
    CHECK(run_binary("find " + loop.string()) == 1);
    CHECK(run_binary("find --json --triangle-free " + one.string()) == 0);
    CHECK(run_binary("gen kab 2 3") == 0);
    CHECK(run_binary("bench --reps 3") == 1);
    CHECK(run_binary("nonsense") == 1);
    CHECK(run_binary("--help") == 0);
}
