#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// Maps distances of the contracted graph back to the original graph.
struct CycleRemap {
    // node_map[v]: id of v's node in the contracted graph.
    std::vector<std::size_t> node_map;
    // negative[c]: contracted node c replaced an SCC with a negative cycle.
    std::vector<bool> negative;
    // Contracted distances below this value decode to -inf.
    std::int64_t threshold = 0;

    bool identity() const;
    // D_g from D_{g'}. A pair decodes to -inf when D' < -Wn or when the
    // source sits in a negative component and the target is reachable.
    WeightMatrix decode(const WeightMatrix& contracted) const;
};

template <class G>
struct CycleFreeGraph {
    G graph;
    CycleRemap remap;
};

// Contract every strongly connected component that contains a negative cycle
// into one node. Node-weighted: the new node weighs -2Wn. Edge-weighted:
// edges entering it weigh -2Wn and edges leaving it keep the lightest
// original weight per target. W is the largest absolute weight of g.
CycleFreeGraph<NodeWeightedGraph> eliminate_negative_cycles(const NodeWeightedGraph& g);
CycleFreeGraph<EdgeWeightedGraph> eliminate_negative_cycles(const EdgeWeightedGraph& g);

// Tarjan components; comp[v] in [0, count), numbered in reverse topological order.
std::vector<std::size_t> strongly_connected_components(std::size_t n,
                                                       const std::vector<std::vector<std::size_t>>& out,
                                                       std::size_t& count);

}  // namespace fewapsp
