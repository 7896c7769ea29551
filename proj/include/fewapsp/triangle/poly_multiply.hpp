#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fewapsp {

// Entries are exponents in [0, p) or -1 for bot.
struct ExponentMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> e;

    ExponentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, -1) {}
    std::int64_t& operator()(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

// Transform parameters: length T (power of two >= 2p - 1) and prime q = cT + 1
// with q > max(n, T), so coefficient counts <= n never vanish mod q.
struct NttPlan {
    std::uint64_t length = 0;
    std::uint64_t modulus = 0;
    std::uint64_t root = 0;  // primitive length-th root of unity mod q
};

NttPlan make_ntt_plan(std::uint64_t p, std::uint64_t n);

// Coefficients of sum_k x^{A[i,k] + B[k,j]}, exponents in [0, 2p - 1).
struct PolyProduct {
    std::size_t rows = 0, cols = 0;
    std::size_t span = 0;  // 2p - 1
    std::vector<std::uint32_t> coeff;

    std::uint32_t at(std::size_t i, std::size_t j, std::size_t e) const { return coeff[(i * cols + j) * span + e]; }
    bool present(std::size_t i, std::size_t j, std::size_t e) const { return at(i, j, e) != 0; }
    // Presence after reducing exponents mod p.
    bool present_mod(std::size_t i, std::size_t j, std::size_t r, std::size_t p) const;
};

// Evaluates every entry monomial at the T-th roots of unity, multiplies one
// numeric matrix pair per point, and interpolates back.
PolyProduct poly_matrix_multiply(const ExponentMatrix& a, const ExponentMatrix& b, std::uint64_t p);

}  // namespace fewapsp
