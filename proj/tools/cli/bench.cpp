#include "cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>

#include <json.hpp>

#include "cli/config.hpp"
#include "fewapsp/apsp/oracle.hpp"
#include "fewapsp/apsp/solvers.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/core/random.hpp"
#include "fewapsp/minplus/bool_matrix.hpp"
#include "fewapsp/minplus/products.hpp"
#include "fewapsp/triangle/brute.hpp"
#include "fewapsp/triangle/few_weights.hpp"
#include "fewapsp/triangle/generate.hpp"
#include "fewapsp/triangle/small_doubling.hpp"
#include "fewapsp/triangle/uniform_regular.hpp"

namespace fewapsp::cli {

namespace {

using nlohmann::json;

// One generated instance: every algorithm stores its output, check() compares
// it with the reference afterwards.
struct Trial {
    std::vector<std::function<void()>> run;
    std::function<bool(std::size_t)> check;
    std::size_t d = 0;
};

BoolMatrix random_bool(std::size_t rows, std::size_t cols, double p, Rng& rng) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (uniform01(rng) < p) m.set(i, j);
    return m;
}

WeightMatrix zero_inf(const BoolMatrix& b) {
    WeightMatrix m(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) m(i, j) = Weight(0);
    return m;
}

std::size_t sqrt_ceil(std::size_t n) { return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(n)))); }

Trial kernels_trial(std::size_t n, Rng& rng) {
    struct State {
        BoolMatrix p, q, packed, naive;
    };
    auto s = std::make_shared<State>();
    s->p = random_bool(n, n, 0.5, rng);
    s->q = random_bool(n, n, 0.5, rng);
    Trial t;
    t.run = {[s] { s->packed = boolean_matrix_multiply(s->p, s->q); },
             [s] { s->naive = boolean_matrix_multiply_naive(s->p, s->q); }};
    t.check = [s](std::size_t) { return s->packed == s->naive; };
    return t;
}

Trial products_trial(std::size_t n, Rng& rng) {
    struct State {
        WeightMatrix a, b01, reference;
        std::vector<WeightMatrix> out{3};
    };
    auto s = std::make_shared<State>();
    const std::size_t rows = std::max<std::size_t>(1, n / 8);
    s->a = random_matrix(rows, n, -1000, 1000, rng);
    const BoolMatrix b = random_bool(n, n, 0.2, rng);
    s->b01 = zero_inf(b);
    const std::size_t delta = sqrt_ceil(n);
    Trial t;
    t.d = 1;
    t.run = {[s] { s->out[0] = min_plus_naive(s->a, s->b01); },
             [s, b, delta] { s->out[1] = boolean_min_plus(s->a, b, delta).value; },
             [s, delta] { s->out[2] = d_weights_min_plus(s->a, s->b01, 1, delta).value; }};
    t.check = [s](std::size_t k) {
        if (s->reference.rows() == 0) s->reference = min_plus_naive(s->a, s->b01);
        return s->out[k] == s->reference;
    };
    return t;
}

Trial apsp_trial(std::size_t n, Rng& rng) {
    struct State {
        NodeWeightedGraph g;
        Rng rng{0};
        WeightMatrix reference;
        std::vector<WeightMatrix> out{4};
    };
    auto s = std::make_shared<State>();
    GraphGenOptions opt;
    opt.edge_prob = std::min(1.0, 4.0 / static_cast<double>(std::max<std::size_t>(n, 1)));
    opt.w_min = -5;
    opt.w_max = 20;
    s->g = random_nw_graph(n, opt, rng);
    s->rng.seed(rng());
    Trial t;
    t.d = 1;
    t.run = {[s] { s->out[0] = apsp_oracle(s->g); },
             [s] { s->out[1] = nw_apsp_deterministic(s->g); },
             [s] { s->out[2] = nw_apsp_randomized(s->g, {}, s->rng); },
             [s] { s->out[3] = dweights_apsp(to_edge_weighted(s->g), 1); }};
    t.check = [s](std::size_t k) {
        if (s->reference.rows() == 0) s->reference = apsp_oracle(s->g);
        return s->out[k] == s->reference;
    };
    return t;
}

Trial triangle_trial(std::size_t n, std::size_t d, Rng& rng) {
    struct State {
        TriangleInstance inst;
        std::size_t d = 0;
        Rng rng{0};
        TriangleReport reference;
        std::vector<TriangleReport> out{4};
    };
    auto s = std::make_shared<State>();
    s->d = d;
    s->inst = random_uniform_regular_instance(n, d, {}, rng);
    s->rng.seed(rng());
    Trial t;
    t.d = d;
    t.run = {[s] { s->out[0] = aete_brute(s->inst); },
             [s] { s->out[1] = aete_small_doubling(s->inst); },
             [s] { s->out[2] = aete_uniform_regular(s->inst, s->d, 1, s->rng); },
             [s] { s->out[3] = aete_few_weights(s->inst, s->d, 1.0, PromiseSide::a_rows, s->rng); }};
    t.check = [s](std::size_t k) {
        if (s->reference.n == 0 && s->inst.n() > 0) s->reference = aete_brute(s->inst);
        return s->out[k].same_answers(s->reference);
    };
    return t;
}

Trial make_trial(const std::string& suite, std::size_t n, std::size_t d, Rng& rng) {
    if (suite == "kernels") return kernels_trial(n, rng);
    if (suite == "products") return products_trial(n, rng);
    if (suite == "apsp") return apsp_trial(n, rng);
    if (suite == "triangle") return triangle_trial(n, d, rng);
    throw ParameterError("unknown bench suite '" + suite + "'");
}

std::vector<BenchRecord> run_instance(const BenchArgs& args, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Trial trial = make_trial(args.suite, n, args.d, rng);
    const auto& names = bench_algorithms(args.suite);
    std::vector<BenchRecord> recs;
    std::vector<bool> failed(names.size(), false);
    for (std::size_t k = 0; k < names.size(); ++k) {
        BenchRecord r{names[k], n, trial.d, seed, 0, 0, false};
        kernel_stats().ops = 0;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            trial.run[k]();
        } catch (const std::exception&) {
            failed[k] = true;
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        r.ops = kernel_stats().ops;
        recs.push_back(r);
    }
    for (std::size_t k = 0; k < names.size(); ++k) recs[k].ok = !failed[k] && trial.check(k);
    return recs;
}

template <class T>
T median(std::vector<T> v) {
    if (v.empty()) return T{};
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

const std::vector<std::string>& bench_algorithms(const std::string& suite) {
    static const std::map<std::string, std::vector<std::string>> algos = {
        {"kernels", {"bool-packed", "bool-naive"}},
        {"products", {"minplus-naive", "boolean-min-plus", "d-weights-min-plus"}},
        {"apsp", {"oracle", "nw-det", "nw-rand", "dweights"}},
        {"triangle", {"tri-brute", "tri-small-doubling", "tri-uniform-regular", "tri-few-weights"}},
    };
    const auto it = algos.find(suite);
    if (it == algos.end()) throw ParameterError("unknown bench suite '" + suite + "'");
    return it->second;
}

std::vector<BenchRow> run_bench(const BenchArgs& args, std::vector<BenchRecord>* records) {
    const auto& names = bench_algorithms(args.suite);
    if (args.sizes.empty() || args.seeds.empty()) throw ParameterError("bench needs at least one size and one seed");
    if (args.jobs == 0) throw ParameterError("jobs must be positive");
    if (args.suite == "triangle" && args.d == 0) throw ParameterError("d must be positive");

    std::vector<BenchRow> rows;
    for (const std::size_t n : args.sizes) {
        std::vector<std::vector<BenchRecord>> per_seed(args.seeds.size());
        for (std::size_t start = 0; start < args.seeds.size(); start += args.jobs) {
            const std::size_t stop = std::min(args.seeds.size(), start + args.jobs);
            std::vector<std::future<std::vector<BenchRecord>>> jobs;
            for (std::size_t s = start; s < stop; ++s)
                jobs.push_back(std::async(args.jobs > 1 ? std::launch::async : std::launch::deferred, run_instance,
                                          std::cref(args), n, args.seeds[s]));
            for (std::size_t s = start; s < stop; ++s) per_seed[s] = jobs[s - start].get();
        }
        for (std::size_t k = 0; k < names.size(); ++k) {
            BenchRow row{names[k], n, per_seed[0][k].d, 0, 0, per_seed.size(), true};
            std::vector<std::int64_t> ns;
            std::vector<std::uint64_t> ops;
            for (const auto& recs : per_seed) {
                ns.push_back(recs[k].wall_ns);
                ops.push_back(recs[k].ops);
                row.ok = row.ok && recs[k].ok;
                if (records) records->push_back(recs[k]);
            }
            row.median_ns = median(ns);
            row.median_ops = median(ops);
            rows.push_back(row);
        }
    }
    return rows;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    std::vector<BenchRecord> records;
    const auto rows = run_bench(args, &records);
    out << std::left << std::setw(22) << "algo" << std::right << std::setw(8) << "n" << std::setw(6) << "d"
        << std::setw(16) << "median_ms" << std::setw(14) << "median_ops" << std::setw(6) << "runs" << std::setw(5)
        << "ok" << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(22) << r.algo << std::right << std::setw(8) << r.n << std::setw(6) << r.d
            << std::setw(16) << std::fixed << std::setprecision(3) << static_cast<double>(r.median_ns) / 1e6
            << std::setw(14) << r.median_ops << std::setw(6) << r.runs << std::setw(5) << (r.ok ? "yes" : "NO")
            << "\n";
    }
    if (!args.out.empty()) {
        std::ofstream f(args.out);
        if (!f) throw ParseError("cannot write " + args.out);
        for (const auto& r : rows) {
            f << json{{"suite", args.suite}, {"algo", r.algo},       {"n", r.n},       {"d", r.d},
                      {"median_ns", r.median_ns}, {"median_ops", r.median_ops}, {"runs", r.runs}, {"ok", r.ok}}
                     .dump()
              << "\n";
        }
    }
    if (!args.records.empty()) {
        std::ofstream f(args.records);
        if (!f) throw ParseError("cannot write " + args.records);
        for (const auto& r : records) {
            f << json{{"algo", r.algo}, {"n", r.n}, {"d", r.d}, {"seed", r.seed}, {"wall_ns", r.wall_ns}, {"ops", r.ops}}
                     .dump()
              << "\n";
        }
    }
    const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.ok; });
    return all_ok ? kOk : kMismatch;
}

}  // namespace fewapsp::cli
