#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fewapsp {

// Boolean matrix with each row packed into 64-bit words.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols);

    static BoolMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t i, std::size_t j) const { return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j, bool value = true) {
        auto& w = bits_[i * wpr_ + j / 64];
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        w = value ? (w | mask) : (w & ~mask);
    }

    const std::uint64_t* row_words(std::size_t i) const { return bits_.data() + i * wpr_; }
    std::uint64_t* row_words(std::size_t i) { return bits_.data() + i * wpr_; }

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// OR-AND product. For every set bit P[i,k], row k of Q is OR-ed into row i of
// the result one word at a time.
BoolMatrix boolean_matrix_multiply(const BoolMatrix& p, const BoolMatrix& q);

// Definitional triple loop; baseline for tests and benchmarks.
BoolMatrix boolean_matrix_multiply_naive(const BoolMatrix& p, const BoolMatrix& q);

// Per-thread counter of elementary kernel operations, reported by the CLI.
struct KernelStats {
    std::uint64_t ops = 0;
};
KernelStats& kernel_stats();

}  // namespace fewapsp
