#pragma once

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// Exact distances by per-source search: Dijkstra when every weight is
// nonnegative, Bellman-Ford otherwise. Pairs whose walks can reach a
// negative cycle get -inf.
WeightMatrix apsp_oracle(const NodeWeightedGraph& g);
WeightMatrix apsp_oracle(const EdgeWeightedGraph& g);

}  // namespace fewapsp
