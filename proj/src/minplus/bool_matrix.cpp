#include "fewapsp/minplus/bool_matrix.hpp"

#include "fewapsp/core/error.hpp"

namespace fewapsp {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

KernelStats& kernel_stats() {
    thread_local KernelStats stats;
    return stats;
}

BoolMatrix boolean_matrix_multiply(const BoolMatrix& p, const BoolMatrix& q) {
    if (p.cols() != q.rows()) throw ShapeError("boolean product shape mismatch");
    BoolMatrix r(p.rows(), q.cols());
    const std::size_t wq = q.words_per_row();
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        std::uint64_t* out = r.row_words(i);
        const std::uint64_t* prow = p.row_words(i);
        for (std::size_t kw = 0; kw < p.words_per_row(); ++kw) {
            std::uint64_t bits = prow[kw];
            while (bits) {
                const std::size_t k = kw * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                const std::uint64_t* qrow = q.row_words(k);
                for (std::size_t w = 0; w < wq; ++w) out[w] |= qrow[w];
                ops += wq;
            }
        }
    }
    kernel_stats().ops += ops;
    return r;
}

BoolMatrix boolean_matrix_multiply_naive(const BoolMatrix& p, const BoolMatrix& q) {
    if (p.cols() != q.rows()) throw ShapeError("boolean product shape mismatch");
    BoolMatrix r(p.rows(), q.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            bool acc = false;
            for (std::size_t k = 0; k < p.cols(); ++k) acc |= p.get(i, k) && q.get(k, j);
            if (acc) r.set(i, j);
        }
    kernel_stats().ops += static_cast<std::uint64_t>(p.rows()) * q.cols() * p.cols();
    return r;
}

}  // namespace fewapsp
