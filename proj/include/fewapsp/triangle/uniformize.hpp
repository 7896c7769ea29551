#pragma once

#include <cstddef>
#include <vector>

#include "fewapsp/additive/sumset.hpp"
#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Splits each matrix's entry set into delta groups of at most d values
// (lowest values first) and returns all delta^3 combinations.
std::vector<TriangleInstance> uniformize_naive(const TriangleInstance& inst, std::size_t d, std::size_t delta);

// Same split with ceil(|entries| / d) groups per matrix; combinations with an
// all-bot matrix are dropped.
std::vector<TriangleInstance> split_uniform(const TriangleInstance& inst, std::size_t d);

// Beyond this value every threshold in the uniformization saturates.
std::size_t saturating_delta(std::size_t n, std::size_t d);

struct UniformizeStats {
    std::size_t classes = 0;         // nonempty (row class, column class) pairs
    std::size_t brute_classes = 0;   // classes listed outright
    std::size_t shifted_pairs = 0;   // (g, h) instances built
    std::size_t exceptional = 0;     // triples listed from remainders
    std::size_t unpopular = 0;       // ordinary triples listed as unpopular
    std::size_t decomposition_iterations = 0;
};

struct UniformizeResult {
    std::vector<TriangleInstance> instances;  // d-uniform, same coordinates as the input
    std::vector<Triple> triples;              // sorted, in the input's coordinates
    UniformizeStats stats;
};

// Input rows of A must carry at most d distinct entries (AuditError otherwise).
UniformizeResult uniformize(const TriangleInstance& inst, std::size_t d, std::size_t delta, Rng& rng,
                            const PopularSumsConfig& cfg = {});

}  // namespace fewapsp
