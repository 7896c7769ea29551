#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/core/matrix.hpp"
#include "fewapsp/minplus/bool_matrix.hpp"

namespace fewapsp {

// Per-entry index k realizing a product value; -1 where the value is +inf.
class WitnessMatrix {
public:
    WitnessMatrix() = default;
    WitnessMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), k_(rows * cols, -1) {}
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return k_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return k_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> k_;
};

struct ProductResult {
    WeightMatrix value;
    WitnessMatrix witness;
};

// C[i,j] = min_k A[i,k] + B[k,j]. Absent (bot) and +inf terms are skipped.
WeightMatrix min_plus_naive(const WeightMatrix& a, const WeightMatrix& b);
// Same, with the smallest minimizing k as witness.
ProductResult min_plus_naive_witness(const WeightMatrix& a, const WeightMatrix& b);

// result[i,j] = min{A[i,k] : B[k,j] = 1}. Rows of A are sorted by the key
// n*A[i,k]+k and split into buckets of ceil(n/delta) entries; delta is
// clamped to [1, n].
ProductResult boolean_min_plus(const WeightMatrix& a, const BoolMatrix& b, std::size_t delta);

// A * B when every column of B has at most d distinct finite entries.
// Throws AuditError otherwise.
ProductResult d_weights_min_plus(const WeightMatrix& a, const WeightMatrix& b, std::size_t d, std::size_t delta);

// Largest number of distinct finite entries in any column.
std::size_t max_column_distinct(const WeightMatrix& b);

}  // namespace fewapsp
