#pragma once

#include <cstddef>
#include <vector>

#include "fewapsp/apsp/hop_engine.hpp"
#include "fewapsp/apsp/pivots.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// D[S_l, S_l] for every level, kept for inspection by tests.
struct LevelTrace {
    std::vector<WeightMatrix> level_distances;
};

// Bottom-up level evaluation over given pivot sets: the base level squares
// D^{<=2^L}[S_L, S_L], every lower level combines one direct sweep with a
// right/right/left bridge through S_{l+1}. Requires no negative cycles.
WeightMatrix randomized_framework(const HopEngine& engine, const PivotHierarchy& pivots, LevelTrace* trace = nullptr);

// Deterministic pivot sets and the replacement paths Q_uv used to certify
// the base level.
struct BridgingState {
    std::size_t n = 0;
    std::size_t L = 0;
    std::vector<std::vector<std::size_t>> levels;
    // Paths of hop-length exactly 2^l that S_{l+1} was chosen to hit.
    std::vector<std::vector<std::vector<std::size_t>>> hit_paths;
    // Q_uv as vertex sequences, row-major n x n; empty if v is unreachable
    // from u within 2^L hops.
    std::vector<std::vector<std::size_t>> q_paths;
    std::vector<std::int64_t> q_weights;
    std::vector<std::size_t> s_star;

    const std::vector<std::size_t>& q(std::size_t u, std::size_t v) const { return q_paths[u * n + v]; }
};

BridgingState build_bridging_state(const HopEngine& engine, std::size_t h);

// Full deterministic solver. The base level squares
// D^{<=base_hop_factor * 2^L}[S*, S*].
WeightMatrix deterministic_framework(const HopEngine& engine, std::size_t h, std::size_t base_hop_factor,
                                     BridgingState* state = nullptr, LevelTrace* trace = nullptr);

// M^{*n} by squaring until a fixpoint or ceil(log2 n) rounds. Requires a
// nonpositive diagonal.
WeightMatrix repeated_squaring(WeightMatrix m, std::size_t n);

}  // namespace fewapsp
