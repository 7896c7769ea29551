#pragma once

#include <cstddef>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"
#include "fewapsp/core/random.hpp"

namespace fewapsp {

struct ApspOptions {
    // Hop parameter; 0 selects ceil(n^{(3 - omega)/2}).
    std::size_t h = 0;
    // Bucket count for the Boolean / d-weights kernels; 0 selects h.
    std::size_t delta = 0;
    double omega = 3.0;
    // Pivot sampling constant c in min(c ln n 2^-l, 1).
    double sampling_constant = 10.0;
    // The deterministic base level uses hop bound base_hop_factor * 2^L.
    std::size_t base_hop_factor = 6;
};

std::size_t default_hop_parameter(std::size_t n, double omega);

// All solvers contract negative-cycle components first and decode -inf
// entries afterwards, so any integer-weighted input is accepted.
WeightMatrix nw_apsp_randomized(const NodeWeightedGraph& g, const ApspOptions& opt, Rng& rng);
WeightMatrix nw_apsp_deterministic(const NodeWeightedGraph& g, const ApspOptions& opt = {});

// Requires at most d distinct incoming weights per node, or at most d
// distinct outgoing weights (solved on the reverse graph). Throws AuditError
// when neither holds.
WeightMatrix dweights_apsp(const EdgeWeightedGraph& g, std::size_t d, const ApspOptions& opt = {});

}  // namespace fewapsp
