#pragma once

#include <cstddef>
#include <functional>

#include "fewapsp/additive/sumset.hpp"
#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"
#include "fewapsp/core/random.hpp"
#include "fewapsp/reductions/gadgets.hpp"

namespace fewapsp {

// Full APSP distance matrix of a node-weighted graph.
using NodeApspSolver = std::function<WeightMatrix(const NodeWeightedGraph&)>;

struct RowWeightOptions {
    // Build the gadget graphs undirected (+10M per node).
    bool undirected = false;
    PopularSumsConfig popular;
};

struct RowWeightStats {
    std::size_t class_pairs = 0;
    std::size_t brute_class_pairs = 0;
    std::size_t decomposed_class_pairs = 0;
    std::size_t heavy_pairs = 0;
    std::size_t unpopular_pairs = 0;
    std::size_t gadget_graphs = 0;
    std::size_t max_gadget_nodes = 0;
};

// Node-weighted gadget for one pair of decomposition parts (l, l'): layers
// I (weights sigma_i), K1 = (k, x in X), K2 = (k, y in Y), J (weights tau_j).
// i -> (k, A[i,k] - sigma_i) when that difference lies in X, and
// (k, B[k,j] - tau_j) -> j when that difference lies in Y. Undirected gadgets
// add 10M per node, M the largest absolute node weight (at least 1).
NodeGadget gen_row_weight_gadget(const WeightMatrix& a, const WeightMatrix& b, const std::vector<std::int64_t>& sigma,
                                 const std::vector<std::int64_t>& tau, const IntSet& x, const IntSet& y,
                                 bool undirected);

// A * B given a promise matrix C with A * B in {C, C+1, C+2} entrywise
// (+inf where the product is +inf). Entries of A and B are split into dyadic
// occurrence classes per row of A / column of B; each class pair is solved by
// windowed brute force when its distinct counts are unbalanced and otherwise
// by popular-sum decomposition with parameter delta, unpopular-pair
// enumeration and node-weighted gadget graphs handed to `solver`. Throws
// AuditError when the result leaves the promised window.
WeightMatrix row_weight_minplus_via_nw_apsp(const WeightMatrix& a, const WeightMatrix& b,
                                           const WeightMatrix& c_promise, std::size_t delta,
                                           const NodeApspSolver& solver, Rng& rng, const RowWeightOptions& opt = {},
                                           RowWeightStats* stats = nullptr);

// Halving recursion: each level's promise is twice the product one level
// down, solved with row_weight_minplus_via_nw_apsp. Needs nonnegative entries.
WeightMatrix row_weight_minplus(const WeightMatrix& a, const WeightMatrix& b, std::size_t delta,
                                const NodeApspSolver& solver, Rng& rng, const RowWeightOptions& opt = {},
                                RowWeightStats* stats = nullptr);

}  // namespace fewapsp
