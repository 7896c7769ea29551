#include "fewapsp/apsp/solvers.hpp"

#include <cmath>
#include <string>

#include "fewapsp/apsp/frameworks.hpp"
#include "fewapsp/apsp/hop_engine.hpp"
#include "fewapsp/apsp/negative_cycles.hpp"
#include "fewapsp/apsp/pivots.hpp"
#include "fewapsp/core/error.hpp"

namespace fewapsp {

std::size_t default_hop_parameter(std::size_t n, double omega) {
    if (n <= 1) return 1;
    const double h = std::ceil(std::pow(static_cast<double>(n), (3.0 - omega) / 2.0) - 1e-9);
    return std::max<std::size_t>(1, static_cast<std::size_t>(h));
}

namespace {

struct Plan {
    std::size_t h;
    std::size_t delta;
};

Plan plan(std::size_t n, const ApspOptions& opt) {
    const std::size_t h = opt.h ? opt.h : default_hop_parameter(n, opt.omega);
    return {h, opt.delta ? opt.delta : h};
}

}  // namespace

WeightMatrix nw_apsp_randomized(const NodeWeightedGraph& g, const ApspOptions& opt, Rng& rng) {
    const auto cf = eliminate_negative_cycles(g);
    const Plan p = plan(cf.graph.n(), opt);
    const NodeWeightedEngine eng(cf.graph, p.delta);
    const PivotHierarchy piv = sample_pivots(cf.graph.n(), p.h, rng, opt.sampling_constant);
    return cf.remap.decode(randomized_framework(eng, piv));
}

WeightMatrix nw_apsp_deterministic(const NodeWeightedGraph& g, const ApspOptions& opt) {
    const auto cf = eliminate_negative_cycles(g);
    const Plan p = plan(cf.graph.n(), opt);
    const NodeWeightedEngine eng(cf.graph, p.delta);
    return cf.remap.decode(deterministic_framework(eng, p.h, opt.base_hop_factor));
}

WeightMatrix dweights_apsp(const EdgeWeightedGraph& g, std::size_t d, const ApspOptions& opt) {
    if (d == 0) throw ParameterError("d must be positive");
    const auto audit = audit_distinct_weights(g);
    auto solve = [&](const EdgeWeightedGraph& h) {
        const auto cf = eliminate_negative_cycles(h);
        const Plan p = plan(cf.graph.n(), opt);
        const EdgeWeightedEngine eng(cf.graph, d, p.delta);
        return cf.remap.decode(deterministic_framework(eng, p.h, opt.base_hop_factor));
    };
    if (audit.max_in <= d) return solve(g);
    if (audit.max_out <= d) return solve(reverse_graph(g)).transposed();
    throw AuditError("d-weights promise fails: max incoming distinct " + std::to_string(audit.max_in) +
                     ", max outgoing distinct " + std::to_string(audit.max_out) + ", d = " + std::to_string(d));
}

}  // namespace fewapsp
