#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fewapsp/apsp/hop_engine.hpp"
#include "fewapsp/core/matrix.hpp"
#include "fewapsp/core/random.hpp"
#include "fewapsp/triangle/few_weights.hpp"
#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Answers All-Edges Exact Triangle on instances whose rows of A carry at most
// d distinct entries.
using AeteSolver = std::function<TriangleReport(const TriangleInstance&, std::size_t d)>;

// One level of the halving recursion: approx = floor(A/2) * floor(B/2), so
// C - 4 <= 2 * approx <= C for C = A * B.
struct ScalingFrame {
    std::size_t level = 0;
    WeightMatrix a;
    WeightMatrix b;
    WeightMatrix approx;
};

struct MinPlusFromAeteStats {
    std::size_t solver_calls = 0;
    // Ordered from the input level downwards.
    std::vector<ScalingFrame> frames;
};

// A * B from 5 exact-triangle probes per halving level. Requires rows of A
// or columns of B with at most d distinct finite entries (AuditError
// otherwise); negative entries are shifted away and restored. Rectangular
// shapes are padded with absent entries.
WeightMatrix minplus_from_aete(const WeightMatrix& a, const WeightMatrix& b, std::size_t d, const AeteSolver& solver,
                               MinPlusFromAeteStats* stats = nullptr);

AeteSolver brute_aete_solver();
// Few-weights solver with the promise on rows of A. rng must outlive the solver.
AeteSolver few_weights_aete_solver(double delta_exponent, Rng& rng, FewWeightsConfig cfg = {});

// Min-plus product for arbitrary operands: d is measured as the smaller of
// max row-distinct(A) and max column-distinct(B).
MinPlusFn aete_min_plus(AeteSolver solver);

}  // namespace fewapsp
