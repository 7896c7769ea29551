#include "fewapsp/reductions/apsp_from_minplus.hpp"

#include <cmath>
#include <string>

#include "fewapsp/apsp/frameworks.hpp"
#include "fewapsp/apsp/negative_cycles.hpp"
#include "fewapsp/core/error.hpp"

namespace fewapsp {

std::size_t reduction_hop_parameter(std::size_t n, double epsilon) {
    if (!(epsilon >= 0)) throw ParameterError("epsilon must be nonnegative");
    const double h = std::ceil(std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), epsilon / 4.0) - 1e-9);
    return std::max<std::size_t>(1, static_cast<std::size_t>(h));
}

WeightMatrix apsp_from_minplus(const EdgeWeightedGraph& g, std::size_t d, const MinPlusFn& product, double epsilon,
                               std::size_t base_hop_factor) {
    if (d == 0) throw ParameterError("d must be positive");
    if (!product) throw ParameterError("no min-plus solver given");
    const auto audit = audit_distinct_weights(g);
    auto solve = [&](const EdgeWeightedGraph& h) {
        const auto cf = eliminate_negative_cycles(h);
        const CustomProductEngine eng(cf.graph, product);
        const std::size_t hops = reduction_hop_parameter(cf.graph.n(), epsilon);
        return cf.remap.decode(deterministic_framework(eng, hops, base_hop_factor));
    };
    if (audit.max_in <= d) return solve(g);
    if (audit.max_out <= d) return solve(reverse_graph(g)).transposed();
    throw AuditError("d-weights promise fails: max incoming distinct " + std::to_string(audit.max_in) +
                     ", max outgoing distinct " + std::to_string(audit.max_out) + ", d = " + std::to_string(d));
}

}  // namespace fewapsp
