#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

struct HopOptions {
    std::size_t delta = 1;
    bool witnesses = false;
};

// Value of A * D^{<=h} (or D^{<=h} * A for the left variants) plus, when
// requested, per-step predecessor tables for path reconstruction.
struct HopResult {
    WeightMatrix value;
    bool has_witnesses = false;
    // Left products store their tables in transposed (reverse graph) form.
    bool left = false;
    // pred[t][i * V + v]: predecessor of v in round t+1, or -1 if the entry
    // did not improve in that round. Indexed in the frame the rounds ran in.
    std::vector<std::vector<std::int32_t>> pred;
    std::size_t frame_cols = 0;

    // Vertex sequence v_0, ..., v_l of a minimizing walk for entry (i, j).
    // Right products: v_0 is the column of A where the walk starts and v_l = j.
    // Left products: v_0 = i and v_l is the row of A where the walk ends.
    // Empty when the entry is not finite. Requires witnesses.
    std::vector<std::size_t> path(std::size_t i, std::size_t j) const;
};

// A * D^{<=h} for a node-weighted graph: h rounds of
// A <- min(A, (A (/) Adj) + W) with the Boolean min-plus kernel.
HopResult hop_bounded_product(const WeightMatrix& a, const NodeWeightedGraph& g, std::size_t h,
                              const HopOptions& opt = {});

// D^{<=h} * A, computed on the reverse graph with B[u,s] = w(u) + A[u,s] and
// w(v) subtracted at the end.
HopResult hop_bounded_product_left(const NodeWeightedGraph& g, const WeightMatrix& a, std::size_t h,
                                   const HopOptions& opt = {});

// A * D^{<=h} for an edge-weighted graph whose nodes have at most d distinct
// incoming weights; each round is one d-weights product. Throws AuditError if
// the promise fails.
HopResult hop_bounded_product_edge(const WeightMatrix& a, const EdgeWeightedGraph& g, std::size_t d, std::size_t h,
                                   const HopOptions& opt = {});

// D^{<=h} * A via the reverse graph. The reverse graph's incoming budget is
// whatever g's outgoing weights need; it is measured, not promised.
HopResult hop_bounded_product_edge_left(const EdgeWeightedGraph& g, const WeightMatrix& a, std::size_t h,
                                        const HopOptions& opt = {});

}  // namespace fewapsp
