#include "fewapsp/core/matrix.hpp"

#include <string>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, Weight fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, std::vector<Weight> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<Weight>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Weight> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return WeightMatrix(r, c, std::move(data));
}

WeightMatrix WeightMatrix::min_plus_identity(std::size_t n) {
    WeightMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Weight(0);
    return m;
}

Weight WeightMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
    return (*this)(i, j);
}

WeightMatrix WeightMatrix::restrict(std::span<const std::size_t> row_idx,
                                    std::span<const std::size_t> col_idx) const {
    WeightMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a) {
        if (row_idx[a] >= rows_) throw ShapeError("row index out of range");
        const auto src = row(row_idx[a]);
        for (std::size_t b = 0; b < col_idx.size(); ++b) {
            if (col_idx[b] >= cols_) throw ShapeError("column index out of range");
            out(a, b) = src[col_idx[b]];
        }
    }
    return out;
}

WeightMatrix WeightMatrix::transposed() const {
    WeightMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

WeightMatrix WeightMatrix::negated() const {
    WeightMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

WeightMatrix entrywise_min(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("entrywise_min shape mismatch");
    WeightMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = weight_min(a(i, j), b(i, j));
    return out;
}

}  // namespace fewapsp
