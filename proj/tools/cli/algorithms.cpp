#include "cli/algorithms.hpp"

#include <algorithm>

#include "fewapsp/apsp/oracle.hpp"
#include "fewapsp/apsp/solvers.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/products.hpp"
#include "fewapsp/reductions/apsp_from_minplus.hpp"
#include "fewapsp/reductions/minplus_from_aete.hpp"
#include "fewapsp/reductions/row_weight.hpp"
#include "fewapsp/triangle/brute.hpp"
#include "fewapsp/triangle/few_weights.hpp"
#include "fewapsp/triangle/small_doubling.hpp"
#include "fewapsp/triangle/uniform_regular.hpp"

namespace fewapsp::cli {

namespace {

struct AlgoInfo {
    const char* name;
    Problem problem;
};

constexpr AlgoInfo kAlgos[] = {
    {"oracle", Problem::apsp},
    {"nw-det", Problem::apsp},
    {"nw-rand", Problem::apsp},
    {"dweights", Problem::apsp},
    {"apsp-minplus", Problem::apsp},
    {"apsp-aete", Problem::apsp},
    {"minplus-naive", Problem::minplus},
    {"minplus-dweights", Problem::minplus},
    {"minplus-aete", Problem::minplus},
    {"minplus-row-weight", Problem::minplus},
    {"tri-brute", Problem::triangle},
    {"tri-small-doubling", Problem::triangle},
    {"tri-uniform-regular", Problem::triangle},
    {"tri-few-weights", Problem::triangle},
};

std::size_t max_row_distinct(const WeightMatrix& m) { return max_column_distinct(m.transposed()); }

ApspOptions apsp_options(const RunParams& p) {
    ApspOptions o;
    o.h = p.h;
    o.delta = p.delta;
    o.omega = p.omega;
    o.sampling_constant = p.sampling;
    return o;
}

const NodeWeightedGraph& node_graph(const Inputs& in, const std::string& algo) {
    if (const auto* g = std::get_if<NodeWeightedGraph>(&*in.graph)) return *g;
    throw ParameterError(algo + " needs a node-weighted graph");
}

EdgeWeightedGraph edge_graph(const Inputs& in) {
    if (const auto* g = std::get_if<EdgeWeightedGraph>(&*in.graph)) return *g;
    return to_edge_weighted(std::get<NodeWeightedGraph>(*in.graph));
}

WeightMatrix report_matrix(const TriangleReport& r) {
    WeightMatrix m(r.n, r.n, Weight(0));
    for (std::size_t i = 0; i < r.n; ++i)
        for (std::size_t j = 0; j < r.n; ++j)
            if (r.at(i, j)) m(i, j) = Weight(1);
    return m;
}

// Triangle files store +inf for absent entries; instances use bot.
WeightMatrix as_bot(const WeightMatrix& m) {
    WeightMatrix out(m.rows(), m.cols(), Weight::bot());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite()) out(i, j) = m(i, j);
    return out;
}

TriangleInstance triangle_instance(const Inputs& in) { return make_instance(as_bot(in.a), as_bot(in.b), as_bot(in.c)); }

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& a : kAlgos) v.emplace_back(a.name);
        return v;
    }();
    return names;
}

Problem problem_of(const std::string& algo) {
    for (const auto& a : kAlgos)
        if (algo == a.name) return a.problem;
    throw ParameterError("unknown algorithm '" + algo + "'");
}

std::string to_string(Problem p) {
    switch (p) {
        case Problem::apsp: return "apsp";
        case Problem::minplus: return "minplus";
        case Problem::triangle: return "triangle";
    }
    return "?";
}

Inputs load_inputs(const RunConfig& cfg) {
    Inputs in;
    auto need = [](const std::string& path, const char* flag) {
        if (path.empty()) throw ParameterError(std::string("missing ") + flag);
        return load_matrix(path);
    };
    switch (problem_of(cfg.algo)) {
        case Problem::apsp:
            if (cfg.graph.empty()) throw ParameterError("missing --graph");
            in.graph = load_graph(cfg.graph);
            break;
        case Problem::triangle:
            in.c = need(cfg.c, "--c");
            [[fallthrough]];
        case Problem::minplus:
            in.a = need(cfg.a, "--a");
            in.b = need(cfg.b, "--b");
            if (in.a.cols() != in.b.rows()) throw ShapeError("A and B do not chain");
            break;
    }
    return in;
}

std::size_t instance_size(Problem p, const Inputs& in) {
    if (p == Problem::apsp) return std::visit([](const auto& g) { return g.n(); }, *in.graph);
    return in.a.rows();
}

std::size_t effective_d(const RunConfig& cfg, Problem p, const Inputs& in) {
    if (cfg.params.d > 0) return cfg.params.d;
    switch (p) {
        case Problem::apsp: {
            if (std::holds_alternative<NodeWeightedGraph>(*in.graph)) return 1;
            const auto audit = audit_distinct_weights(std::get<EdgeWeightedGraph>(*in.graph));
            return std::max<std::size_t>(1, std::min(audit.max_in, audit.max_out));
        }
        case Problem::minplus:
            return std::max<std::size_t>(1, std::min(max_row_distinct(in.a), max_column_distinct(in.b)));
        case Problem::triangle:
            return std::max<std::size_t>(1, promise_distinct(triangle_instance(in), parse_promise_side(cfg.params.side)));
    }
    return 1;
}

WeightMatrix run_algorithm(const RunConfig& cfg, const Inputs& in) {
    const Problem p = problem_of(cfg.algo);
    const RunParams& prm = cfg.params;
    const std::string& algo = cfg.algo;
    Rng rng(cfg.seed);
    const std::size_t d = effective_d(cfg, p, in);
    if (algo == "oracle") return std::visit([](const auto& g) { return apsp_oracle(g); }, *in.graph);
    if (algo == "nw-det") return nw_apsp_deterministic(node_graph(in, algo), apsp_options(prm));
    if (algo == "nw-rand") return nw_apsp_randomized(node_graph(in, algo), apsp_options(prm), rng);
    if (algo == "dweights") return dweights_apsp(edge_graph(in), d, apsp_options(prm));
    if (algo == "apsp-minplus") return apsp_from_minplus(edge_graph(in), d, min_plus_naive, prm.eps);
    if (algo == "apsp-aete") {
        return apsp_from_minplus(edge_graph(in), d, aete_min_plus(few_weights_aete_solver(prm.delta_exp, rng)),
                                 prm.eps);
    }
    if (algo == "minplus-naive") return min_plus_naive(in.a, in.b);
    if (algo == "minplus-dweights") return d_weights_min_plus(in.a, in.b, d, prm.delta == 0 ? 1 : prm.delta).value;
    if (algo == "minplus-aete") return minplus_from_aete(in.a, in.b, d, few_weights_aete_solver(prm.delta_exp, rng));
    if (algo == "minplus-row-weight") {
        const NodeApspSolver solver = [](const NodeWeightedGraph& g) { return nw_apsp_deterministic(g); };
        return row_weight_minplus(in.a, in.b, prm.delta == 0 ? 2 : prm.delta, solver, rng);
    }
    const TriangleInstance inst = triangle_instance(in);
    if (algo == "tri-brute") return report_matrix(aete_brute(inst));
    if (algo == "tri-small-doubling") return report_matrix(aete_small_doubling(inst));
    if (algo == "tri-uniform-regular") return report_matrix(aete_uniform_regular(inst, d, prm.k, rng));
    if (algo == "tri-few-weights") {
        FewWeightsConfig fw;
        fw.omega = prm.omega;
        fw.delta = prm.delta;
        return report_matrix(aete_few_weights(inst, d, prm.delta_exp, parse_promise_side(prm.side), rng, fw));
    }
    throw ParameterError("unknown algorithm '" + algo + "'");
}

WeightMatrix reference_result(Problem p, const Inputs& in) {
    switch (p) {
        case Problem::apsp: return std::visit([](const auto& g) { return apsp_oracle(g); }, *in.graph);
        case Problem::minplus: return min_plus_naive(in.a, in.b);
        case Problem::triangle: return report_matrix(aete_brute(triangle_instance(in)));
    }
    return {};
}

}  // namespace fewapsp::cli
