#pragma once

#include <cstddef>
#include <cstdint>

#include "fewapsp/core/matrix.hpp"
#include "fewapsp/core/random.hpp"

namespace fewapsp {

struct MatrixPair {
    WeightMatrix a;
    WeightMatrix b;
};

struct PairGenOptions {
    std::int64_t lo = 0;
    std::int64_t hi = 20;
    double hole_prob = 0.0;  // absent entries are +inf
};

// A: rows x inner with at most d distinct entries per row; B: inner x cols
// with at most d distinct entries per column.
MatrixPair random_row_weight_pair(std::size_t rows, std::size_t inner, std::size_t cols, std::size_t d,
                                  const PairGenOptions& opt, Rng& rng);

// A with at most d distinct entries per column, B with at most d per row.
MatrixPair random_column_weight_pair(std::size_t rows, std::size_t inner, std::size_t cols, std::size_t d,
                                     const PairGenOptions& opt, Rng& rng);

// n x s and s x n with entries in [0, U), U = ceil(n^{1/2+eps}) = s.
MatrixPair random_bounded_pair(std::size_t n, double epsilon, const PairGenOptions& opt, Rng& rng);

}  // namespace fewapsp
