#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rainbow/oracle.hpp"

int main(int argc, char** argv) {
    using namespace rainbow::cli;

    CLI::App app{"Rainbow matchings of size delta(G) in properly edge-colored graphs"};
    app.require_subcommand(1);

    std::filesystem::path input;
    std::filesystem::path matching_path;

    FindOptions find_opts;
    auto* find = app.add_subcommand("find", "Find a rainbow matching of size delta(G)");
    find->add_option("input", input, "Edge-list file")->required();
    find->add_flag("--json", find_opts.json, "Print the full JSON report");
    find->add_flag("--triangle-free", find_opts.triangle_free,
                   "Use the triangle-free degree rule when the graph has no triangle");
    bool no_trace_check = false;
    find->add_flag("--no-trace-check", no_trace_check, "Skip greedy trace assertions");

    auto* verify = app.add_subcommand("verify", "Check a matching file against a graph");
    verify->add_option("graph", input, "Edge-list file")->required();
    verify->add_option("matching", matching_path, "Matching in edge-list format")->required();

    std::optional<std::size_t> oracle_k;
    std::size_t oracle_cap = rainbow::kDefaultEdgeCap;
    auto* oracle = app.add_subcommand("oracle", "Exact maximum rainbow matching (small graphs)");
    oracle->add_option("input", input, "Edge-list file")->required();
    oracle->add_option("--k", oracle_k, "Only decide whether a matching of this size exists");
    oracle->add_option("--cap", oracle_cap, "Maximum edge count accepted")->capture_default_str();

    GenOptions gen_opts;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->add_option("kind", gen_opts.kind, "latin-cyclic | latin-shuffled | random | bipartite | kab")
        ->required();
    gen->add_option("params", gen_opts.params, "Generator parameters");
    gen->add_option("--seed", gen_opts.seed, "PRNG seed")->capture_default_str();
    gen->add_flag("--square", gen_opts.square, "Write the Latin square instead of its graph");
    gen->add_option("--out", out_path, "Output file (default: stdout)");

    BenchOptions bench_opts;
    std::string csv_path;
    auto* bench = app.add_subcommand("bench", "Time the pipeline over a (delta, n) grid");
    bench->add_option("--deltas", bench_opts.deltas, "Comma-separated minimum degrees")
        ->delimiter(',');
    bench->add_option("--sizes", bench_opts.sizes, "Comma-separated vertex counts")->delimiter(',');
    bench->add_option("--reps", bench_opts.reps, "Repetitions per cell")->capture_default_str();
    bench->add_option("--seed", bench_opts.seed, "PRNG seed")->capture_default_str();
    bench->add_option("--csv-out", csv_path, "CSV output file (default: stdout)");

    bool trace_tf = false;
    auto* trace = app.add_subcommand("trace", "Print the greedy trace and its checks as JSON");
    trace->add_option("input", input, "Edge-list file")->required();
    trace->add_flag("--triangle-free", trace_tf, "Use the triangle-free degree rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    if (*find) {
        find_opts.trace_check = !no_trace_check;
        return cmd_find(input, find_opts, std::cout, std::cerr);
    }
    if (*verify) {
        return cmd_verify(input, matching_path, std::cout, std::cerr);
    }
    if (*oracle) {
        return cmd_oracle(input, oracle_k, oracle_cap, std::cout, std::cerr);
    }
    if (*gen) {
        if (!out_path.empty()) gen_opts.out = out_path;
        return cmd_gen(gen_opts, std::cout, std::cerr);
    }
    if (*bench) {
        if (!csv_path.empty()) bench_opts.csv_out = csv_path;
        return cmd_bench(bench_opts, std::cout, std::cerr);
    }
    return cmd_trace(input, trace_tf, std::cout, std::cerr);
}
