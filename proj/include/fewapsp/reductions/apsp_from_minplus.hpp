#pragma once

#include <cstddef>

#include "fewapsp/apsp/hop_engine.hpp"
#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// max(1, ceil(n^{epsilon/4})).
std::size_t reduction_hop_parameter(std::size_t n, double epsilon);

// Deterministic d-weights APSP in which every hop-bounded product is handed
// to `product`. Requires at most d distinct incoming (or outgoing) weights
// per node; throws AuditError otherwise. Negative cycles decode to -inf.
WeightMatrix apsp_from_minplus(const EdgeWeightedGraph& g, std::size_t d, const MinPlusFn& product, double epsilon,
                               std::size_t base_hop_factor = 6);

}  // namespace fewapsp
