#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// A graph whose source-to-sink distances encode a min-plus product:
// product[i,j] = dist(sources[i], sinks[j]) + w(sources[i]) - offset, where
// w(source) is the source's node weight (0 for edge-weighted graphs).
template <class Graph>
struct GadgetGraph {
    Graph graph;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> sinks;
    std::int64_t offset = 0;
    // Decoded values above this bound can only come from detours through the
    // undirected graph and mean +inf.
    std::int64_t max_genuine = 0;
    bool undirected = false;
    std::vector<std::size_t> layer_sizes;
};

using EdgeGadget = GadgetGraph<EdgeWeightedGraph>;
using NodeGadget = GadgetGraph<NodeWeightedGraph>;

// `dist` is the full distance matrix of gadget.graph.
WeightMatrix decode_gadget(const EdgeGadget& gadget, const WeightMatrix& dist);
WeightMatrix decode_gadget(const NodeGadget& gadget, const WeightMatrix& dist);

struct BoundedGadgetParams {
    std::int64_t range = 0;  // U = ceil(n^{1/2+eps}); entries lie in [0, U)
    std::int64_t q = 0;      // ceil(n^{1/2-eps})
    std::int64_t m = 0;      // 2U, added to edges at R and C when undirected
};

// ceil(base^exponent), robust against pow() landing just above an integer.
std::int64_t ceil_power(double base, double exponent);

BoundedGadgetParams bounded_gadget_params(std::size_t n, double epsilon);
// ceil(n^{2 eps}) + 1.
std::size_t bounded_gadget_weight_bound(std::size_t n, double epsilon);

// A: n x s, B: s x m with finite entries in [0, ceil(n^{1/2+eps})) (+inf for
// absent), n = A.rows(). Nodes: r_i, then c_j, then one path of 2q-1 unit
// edges per inner index k.
EdgeGadget gen_bounded_minplus_gadget(const WeightMatrix& a, const WeightMatrix& b, double epsilon, bool undirected);

// Four layers I, K1 = {(k, z) : z in column k of A}, K2 = {(k, y) : y in row
// k of B}, J. Undirected gadgets need nonnegative entries and add 3M to every
// node, M = max(largest finite entry, 1).
NodeGadget gen_column_weight_gadget(const WeightMatrix& a, const WeightMatrix& b, bool undirected);

std::size_t distinct_edge_weights(const EdgeWeightedGraph& g);

}  // namespace fewapsp
