#include "cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/algorithms.hpp"
#include "cli/bench.hpp"
#include "cli/config.hpp"
#include "cli/gadget_manifest.hpp"
#include "fewapsp/apsp/solvers.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/core/io.hpp"
#include "fewapsp/core/random.hpp"
#include "fewapsp/minplus/bool_matrix.hpp"
#include "fewapsp/minplus/products.hpp"
#include "fewapsp/reductions/apsp_from_minplus.hpp"
#include "fewapsp/reductions/gadgets.hpp"
#include "fewapsp/reductions/instances.hpp"
#include "fewapsp/reductions/minplus_from_aete.hpp"
#include "fewapsp/reductions/row_weight.hpp"
#include "fewapsp/reductions/scaling.hpp"
#include "fewapsp/triangle/generate.hpp"

namespace fewapsp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct GenArgs {
    std::string kind;
    std::size_t n = 10;
    std::size_t d = 2;
    std::size_t inner = 0;
    std::uint64_t seed = 1;
    std::string out;
    double edge_prob = 0.2;
    std::int64_t w_min = 0;
    std::int64_t w_max = 10;
    std::size_t neg_cycles = 0;
    double hole = 0.0;
    double eps = 0.25;
    bool plant = false;
    bool undirected = false;
};

struct VerifyArgs {
    std::string problem;
    std::string result;
    std::string graph, a, b, c;
};

struct ReduceArgs {
    std::string name;
    std::string graph, a, b, manifest, dist, out;
    std::size_t d = 0;
    std::size_t delta = 2;
    double eps = 0.25;
    double delta_exp = 1.0;
    std::string solver = "brute";
    std::uint64_t seed = 1;
    bool undirected = false;
};

void write_json(const fs::path& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path.string());
    f << j.dump(2) << "\n";
}

fs::path prepare_dir(const std::string& dir) {
    if (dir.empty()) throw ParameterError("missing --out");
    fs::create_directories(dir);
    return fs::path(dir);
}

int cmd_gen(const GenArgs& g, std::ostream& out) {
    const fs::path dir = prepare_dir(g.out);
    Rng rng(g.seed);
    GraphGenOptions gopt;
    gopt.edge_prob = g.edge_prob;
    gopt.w_min = g.w_min;
    gopt.w_max = g.w_max;
    gopt.negative_cycles = g.neg_cycles;
    const PairGenOptions popt{.lo = g.w_min, .hi = g.w_max, .hole_prob = g.hole};
    const std::size_t inner = g.inner > 0 ? g.inner : std::max<std::size_t>(1, g.n / std::max<std::size_t>(g.d, 1));

    json m = {{"kind", g.kind}, {"n", g.n}, {"d", g.d}, {"seed", g.seed}};
    json files = json::object();
    if (g.kind == "nw-graph") {
        save_graph((dir / "graph.txt").string(), random_nw_graph(g.n, gopt, rng));
        files["graph"] = "graph.txt";
    } else if (g.kind == "dweights-graph") {
        save_graph((dir / "graph.txt").string(), random_dweights_graph(g.n, g.d, gopt, rng));
        files["graph"] = "graph.txt";
    } else if (g.kind == "minplus") {
        const auto p = random_row_weight_pair(g.n, g.inner > 0 ? g.inner : g.n, g.n, g.d, popt, rng);
        save_matrix((dir / "a.txt").string(), p.a);
        save_matrix((dir / "b.txt").string(), p.b);
        files = {{"a", "a.txt"}, {"b", "b.txt"}};
    } else if (g.kind == "exact-tri") {
        TriangleInstance t = random_dweights_instance(g.n, g.d, PromiseSide::a_rows,
                                                      {.lo = g.w_min, .hi = g.w_max, .hole_prob = g.hole}, rng);
        if (g.plant) {
            if (g.n == 0) throw ParameterError("cannot plant into an empty instance");
            const auto pick = [&] { return static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(g.n) - 1)); };
            const std::size_t i = pick(), k = pick(), j = pick();
            // Reuse a value already in row i so the row keeps at most d distinct entries.
            if (!t.a(i, k).is_finite()) {
                for (std::size_t x = 0; x < g.n && !t.a(i, k).is_finite(); ++x)
                    if (t.a(i, x).is_finite()) t.a(i, k) = t.a(i, x);
            }
            plant_triangle(t, i, k, j, g.w_min);
            m["planted"] = {i, k, j};
        }
        const auto to_inf = [](const WeightMatrix& x) {
            WeightMatrix y(x.rows(), x.cols());
            for (std::size_t r = 0; r < x.rows(); ++r)
                for (std::size_t c = 0; c < x.cols(); ++c)
                    if (x(r, c).is_finite()) y(r, c) = x(r, c);
            return y;
        };
        save_matrix((dir / "a.txt").string(), to_inf(t.a));
        save_matrix((dir / "b.txt").string(), to_inf(t.b));
        save_matrix((dir / "c.txt").string(), to_inf(t.c));
        files = {{"a", "a.txt"}, {"b", "b.txt"}, {"c", "c.txt"}};
        m["side"] = "a-rows";
    } else if (g.kind == "gadget-bounded") {
        const auto p = random_bounded_pair(g.n, g.eps, popt, rng);
        save_matrix((dir / "a.txt").string(), p.a);
        save_matrix((dir / "b.txt").string(), p.b);
        m["gadget"] = save_gadget(dir.string(), gen_bounded_minplus_gadget(p.a, p.b, g.eps, g.undirected));
        m["eps"] = g.eps;
        files = {{"a", "a.txt"}, {"b", "b.txt"}, {"graph", "graph.txt"}};
    } else if (g.kind == "gadget-column") {
        const auto p = random_column_weight_pair(g.n, inner, g.n, g.d, popt, rng);
        save_matrix((dir / "a.txt").string(), p.a);
        save_matrix((dir / "b.txt").string(), p.b);
        m["gadget"] = save_gadget(dir.string(), gen_column_weight_gadget(p.a, p.b, g.undirected));
        m["inner"] = inner;
        files = {{"a", "a.txt"}, {"b", "b.txt"}, {"graph", "graph.txt"}};
    } else {
        throw ParameterError("unknown kind '" + g.kind + "'");
    }
    m["files"] = files;
    write_json(dir / "manifest.json", m);
    out << "wrote " << g.kind << " to " << dir.string() << "\n";
    return kOk;
}

int cmd_run(RunConfig cfg, const std::string& save_config, std::ostream& out) {
    if (cfg.algo.empty()) throw ParameterError("missing --algo");
    const Problem p = problem_of(cfg.algo);
    const Inputs in = load_inputs(cfg);
    if (!save_config.empty()) save_run_config(save_config, cfg);

    kernel_stats().ops = 0;
    const auto t0 = std::chrono::steady_clock::now();
    const WeightMatrix result = run_algorithm(cfg, in);
    const auto t1 = std::chrono::steady_clock::now();
    const json record = {{"algo", cfg.algo},
                         {"n", instance_size(p, in)},
                         {"d", effective_d(cfg, p, in)},
                         {"seed", cfg.seed},
                         {"wall_ns", std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()},
                         {"ops", kernel_stats().ops}};
    out << record.dump() << "\n";
    if (!cfg.timing.empty()) {
        std::ofstream f(cfg.timing, std::ios::app);
        if (!f) throw ParseError("cannot write " + cfg.timing);
        f << record.dump() << "\n";
    }
    if (!cfg.out.empty()) save_matrix(cfg.out, result);
    if (cfg.verify) {
        if (result != reference_result(p, in)) {
            out << "verify: MISMATCH against " << to_string(p) << " oracle\n";
            return kMismatch;
        }
        out << "verify: ok\n";
    }
    return kOk;
}

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
    Problem p;
    if (v.problem == "apsp") p = Problem::apsp;
    else if (v.problem == "minplus") p = Problem::minplus;
    else if (v.problem == "triangle") p = Problem::triangle;
    else throw ParameterError("unknown problem '" + v.problem + "'");
    RunConfig cfg;
    cfg.algo = p == Problem::apsp ? "oracle" : p == Problem::minplus ? "minplus-naive" : "tri-brute";
    cfg.graph = v.graph;
    cfg.a = v.a;
    cfg.b = v.b;
    cfg.c = v.c;
    const Inputs in = load_inputs(cfg);
    if (v.result.empty()) throw ParameterError("missing --result");
    const WeightMatrix result = load_matrix(v.result, Weight::kFiniteLimit);
    if (result != reference_result(p, in)) {
        out << "verify: MISMATCH\n";
        return kMismatch;
    }
    out << "verify: ok\n";
    return kOk;
}

int cmd_reduce(const ReduceArgs& r, std::ostream& out) {
    Rng rng(r.seed);
    auto need = [](const std::string& path, const char* flag) {
        if (path.empty()) throw ParameterError(std::string("missing ") + flag);
        return load_matrix(path);
    };
    auto save_result = [&](const WeightMatrix& m) {
        if (r.out.empty()) throw ParameterError("missing --out");
        save_matrix(r.out, m);
        out << "wrote " << r.name << " result to " << r.out << "\n";
        return kOk;
    };
    auto aete = [&]() -> AeteSolver {
        if (r.solver == "brute") return brute_aete_solver();
        if (r.solver == "few-weights") return few_weights_aete_solver(r.delta_exp, rng);
        throw ParameterError("unknown solver '" + r.solver + "'");
    };
    if (r.name == "gadget-bounded" || r.name == "gadget-column") {
        const WeightMatrix a = need(r.a, "--a"), b = need(r.b, "--b");
        const fs::path dir = prepare_dir(r.out);
        json m = {{"kind", r.name}, {"files", {{"graph", "graph.txt"}}}};
        m["gadget"] = r.name == "gadget-bounded"
                          ? save_gadget(dir.string(), gen_bounded_minplus_gadget(a, b, r.eps, r.undirected))
                          : save_gadget(dir.string(), gen_column_weight_gadget(a, b, r.undirected));
        write_json(dir / "manifest.json", m);
        out << "wrote " << r.name << " to " << dir.string() << "\n";
        return kOk;
    }
    if (r.name == "gadget-decode") {
        if (r.manifest.empty()) throw ParameterError("missing --manifest");
        if (r.dist.empty()) throw ParameterError("missing --dist");
        return save_result(decode_saved_gadget(r.manifest, load_matrix(r.dist, Weight::kFiniteLimit)));
    }
    if (r.name == "minplus-from-aete") {
        const WeightMatrix a = need(r.a, "--a"), b = need(r.b, "--b");
        const std::size_t d = r.d > 0 ? r.d : std::max<std::size_t>(1, max_column_distinct(a.transposed()));
        return save_result(minplus_from_aete(a, b, d, aete()));
    }
    if (r.name == "apsp-from-minplus") {
        if (r.graph.empty()) throw ParameterError("missing --graph");
        const AnyGraph any = load_graph(r.graph);
        const EdgeWeightedGraph g = std::holds_alternative<EdgeWeightedGraph>(any)
                                        ? std::get<EdgeWeightedGraph>(any)
                                        : to_edge_weighted(std::get<NodeWeightedGraph>(any));
        const auto audit = audit_distinct_weights(g);
        const std::size_t d = r.d > 0 ? r.d : std::max<std::size_t>(1, std::min(audit.max_in, audit.max_out));
        const MinPlusFn product = r.solver == "naive" ? MinPlusFn(min_plus_naive) : aete_min_plus(aete());
        return save_result(apsp_from_minplus(g, d, product, r.eps));
    }
    if (r.name == "scaling-promise") return save_result(make_scaling_promise(need(r.a, "--a"), need(r.b, "--b")));
    if (r.name == "row-weight") {
        const NodeApspSolver solver = [](const NodeWeightedGraph& g) { return nw_apsp_deterministic(g); };
        RowWeightOptions opt;
        opt.undirected = r.undirected;
        return save_result(row_weight_minplus(need(r.a, "--a"), need(r.b, "--b"), r.delta, solver, rng, opt));
    }
    throw ParameterError("unknown reduction '" + r.name + "'");
}

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--algo", cfg.algo, "Algorithm id");
    cmd->add_option("--graph", cfg.graph, "Graph file (APSP algorithms)");
    cmd->add_option("--a", cfg.a, "Matrix A");
    cmd->add_option("--b", cfg.b, "Matrix B");
    cmd->add_option("--c", cfg.c, "Matrix C (exact triangle)");
    cmd->add_option("--out", cfg.out, "Result matrix path");
    cmd->add_option("--timing", cfg.timing, "Append the JSON timing record here");
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--h", cfg.params.h, "Hop parameter (0: default)");
    cmd->add_option("--delta", cfg.params.delta, "Bucket / decomposition parameter (0: default)");
    cmd->add_option("--k,--K", cfg.params.k, "Cover parameter K");
    cmd->add_option("--d", cfg.params.d, "Distinct-weight promise (0: measured)");
    cmd->add_option("--eps", cfg.params.eps, "Reduction epsilon");
    cmd->add_option("--delta-exp", cfg.params.delta_exp, "Few-weights exponent delta");
    cmd->add_option("--omega", cfg.params.omega, "Matrix multiplication exponent estimate");
    cmd->add_option("--sampling", cfg.params.sampling, "Pivot sampling constant");
    cmd->add_option("--side", cfg.params.side, "Promise side: a-rows, a-cols, b-rows, b-cols, c-rows, c-cols");
    cmd->add_flag("--verify", cfg.verify, "Check the result against the oracle");
}

// Options given on the command line override a loaded config file.
RunConfig merge_config(const CLI::App* cmd, const RunConfig& flags, const std::string& path) {
    if (path.empty()) return flags;
    RunConfig cfg = load_run_config(path);
    auto given = [&](const char* name) { return cmd->count(name) > 0; };
    if (given("--algo")) cfg.algo = flags.algo;
    if (given("--graph")) cfg.graph = flags.graph;
    if (given("--a")) cfg.a = flags.a;
    if (given("--b")) cfg.b = flags.b;
    if (given("--c")) cfg.c = flags.c;
    if (given("--out")) cfg.out = flags.out;
    if (given("--timing")) cfg.timing = flags.timing;
    if (given("--seed")) cfg.seed = flags.seed;
    if (given("--h")) cfg.params.h = flags.params.h;
    if (given("--delta")) cfg.params.delta = flags.params.delta;
    if (given("--k")) cfg.params.k = flags.params.k;
    if (given("--d")) cfg.params.d = flags.params.d;
    if (given("--eps")) cfg.params.eps = flags.params.eps;
    if (given("--delta-exp")) cfg.params.delta_exp = flags.params.delta_exp;
    if (given("--omega")) cfg.params.omega = flags.params.omega;
    if (given("--sampling")) cfg.params.sampling = flags.params.sampling;
    if (given("--side")) cfg.params.side = flags.params.side;
    if (given("--verify")) cfg.verify = flags.verify;
    return cfg;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Few-weights shortest paths and exact triangle toolkit", "fewapsp"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance directory with manifest.json");
    gen_cmd->add_option("--kind", gen.kind, "nw-graph, dweights-graph, minplus, exact-tri, gadget-bounded, gadget-column")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Instance size");
    gen_cmd->add_option("--d", gen.d, "Distinct weights per node / row / column");
    gen_cmd->add_option("--inner", gen.inner, "Inner dimension for matrix kinds");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();
    gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability");
    gen_cmd->add_option("--w-min", gen.w_min, "Smallest weight");
    gen_cmd->add_option("--w-max", gen.w_max, "Largest weight");
    gen_cmd->add_option("--neg-cycles", gen.neg_cycles, "Planted negative cycles");
    gen_cmd->add_option("--hole", gen.hole, "Probability of an absent matrix entry");
    gen_cmd->add_option("--eps", gen.eps, "Bounded gadget epsilon");
    gen_cmd->add_flag("--plant", gen.plant, "Plant one exact triangle");
    gen_cmd->add_flag("--undirected", gen.undirected, "Undirected gadget graph");

    RunConfig run_flags;
    std::string config_path, save_config;
    auto* run_cmd = app.add_subcommand("run", "Run one algorithm and print a JSON timing record");
    run_cmd->set_help_flag("--help", "Print this help message and exit");
    add_run_options(run_cmd, run_flags);
    run_cmd->add_option("--config", config_path, "Load a saved run config (flags override it)");
    run_cmd->add_option("--save-config", save_config, "Write the effective run config here");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Compare a result file with the oracle");
    verify_cmd->add_option("--problem", ver.problem, "apsp, minplus or triangle")->required();
    verify_cmd->add_option("--result", ver.result, "Result matrix")->required();
    verify_cmd->add_option("--graph", ver.graph, "Graph file");
    verify_cmd->add_option("--a", ver.a, "Matrix A");
    verify_cmd->add_option("--b", ver.b, "Matrix B");
    verify_cmd->add_option("--c", ver.c, "Matrix C");

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a named reduction");
    reduce_cmd
        ->add_option("--name", red.name,
                     "gadget-bounded, gadget-column, gadget-decode, minplus-from-aete, apsp-from-minplus, "
                     "scaling-promise, row-weight")
        ->required();
    reduce_cmd->add_option("--graph", red.graph, "Graph file");
    reduce_cmd->add_option("--a", red.a, "Matrix A");
    reduce_cmd->add_option("--b", red.b, "Matrix B");
    reduce_cmd->add_option("--manifest", red.manifest, "Gadget manifest (gadget-decode)");
    reduce_cmd->add_option("--dist", red.dist, "Gadget distance matrix (gadget-decode)");
    reduce_cmd->add_option("--out", red.out, "Output file or directory");
    reduce_cmd->add_option("--d", red.d, "Distinct-weight promise (0: measured)");
    reduce_cmd->add_option("--delta", red.delta, "Decomposition parameter");
    reduce_cmd->add_option("--eps", red.eps, "Epsilon");
    reduce_cmd->add_option("--delta-exp", red.delta_exp, "Few-weights exponent delta");
    reduce_cmd->add_option("--solver", red.solver, "brute, few-weights or naive");
    reduce_cmd->add_option("--seed", red.seed, "Random seed");
    reduce_cmd->add_flag("--undirected", red.undirected, "Undirected gadgets");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Median timings over seeds");
    bench_cmd->add_option("--suite", bench.suite, "kernels, products, apsp or triangle")->required();
    bench_cmd->add_option("--sizes", bench.sizes, "Instance sizes")->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds, "Seeds")->delimiter(',');
    bench_cmd->add_option("--d", bench.d, "Distinct weights for weighted suites");
    bench_cmd->add_option("--out", bench.out, "JSON-lines table");
    bench_cmd->add_option("--records", bench.records, "JSON-lines per-run records");
    bench_cmd->add_option("--jobs", bench.jobs, "Instances run in parallel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParameterError;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*run_cmd) return cmd_run(merge_config(run_cmd, run_flags, config_path), save_config, out);
        if (*verify_cmd) return cmd_verify(ver, out);
        if (*reduce_cmd) return cmd_reduce(red, out);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const fs::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"fewapsp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fewapsp::cli
