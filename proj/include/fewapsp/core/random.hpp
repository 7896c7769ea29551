#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);
// Uniform integer in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

struct GraphGenOptions {
    double edge_prob = 0.2;
    std::int64_t w_min = 0;
    std::int64_t w_max = 10;
    bool allow_self_loops = false;
    // Number of short cycles forced to have negative total weight.
    std::size_t negative_cycles = 0;
};

NodeWeightedGraph random_nw_graph(std::size_t n, const GraphGenOptions& opt, Rng& rng);

// w(u,v) = c[(alpha(u) + beta(v)) mod d]: at most d distinct weights on both
// the outgoing and the incoming edges of every node.
EdgeWeightedGraph random_dweights_graph(std::size_t n, std::size_t d, const GraphGenOptions& opt, Rng& rng);

// Every node draws its incoming weights from its own palette of d values;
// outgoing weights are unconstrained.
EdgeWeightedGraph random_in_dweights_graph(std::size_t n, std::size_t d, const GraphGenOptions& opt, Rng& rng);

// Entries uniform in [lo, hi]; each entry is replaced by `hole` with
// probability hole_prob.
WeightMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi, Rng& rng,
                           double hole_prob = 0.0, Weight hole = Weight::pos_inf());

}  // namespace fewapsp
