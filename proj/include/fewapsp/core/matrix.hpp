#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fewapsp/core/weight.hpp"

namespace fewapsp {

// Dense row-major matrix of weights.
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(std::size_t rows, std::size_t cols, Weight fill = Weight::pos_inf());
    WeightMatrix(std::size_t rows, std::size_t cols, std::vector<Weight> entries);

    // Convenience for tests and small fixtures; every row must have equal length.
    static WeightMatrix from_rows(const std::vector<std::vector<Weight>>& rows);
    // 0 on the diagonal, +inf elsewhere.
    static WeightMatrix min_plus_identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Weight& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Weight operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Weight at(std::size_t i, std::size_t j) const;

    std::span<const Weight> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Weight> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Weight>& entries() const { return data_; }

    // A[S, T]; indices may repeat and appear in any order.
    WeightMatrix restrict(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    WeightMatrix transposed() const;
    // Entrywise negation; bot stays bot, infinities swap.
    WeightMatrix negated() const;

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Weight> data_;
};

// Entrywise min; shapes must agree.
WeightMatrix entrywise_min(const WeightMatrix& a, const WeightMatrix& b);

}  // namespace fewapsp
