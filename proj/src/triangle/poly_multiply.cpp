#include "fewapsp/triangle/poly_multiply.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/bool_matrix.hpp"

namespace fewapsp {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 q) { return a * b % q; }

u64 pow_mod(u64 b, u64 e, u64 q) {
    u64 r = 1;
    b %= q;
    while (e) {
        if (e & 1) r = mul_mod(r, b, q);
        b = mul_mod(b, b, q);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

u64 primitive_root(u64 q) {
    std::vector<u64> factors;
    u64 m = q - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (auto f : factors) ok = ok && pow_mod(g, (q - 1) / f, q) != 1;
        if (ok) return g;
    }
    throw SolverError("no primitive root found");
}

void ntt(std::vector<u64>& v, const NttPlan& plan, bool invert) {
    const std::size_t len = v.size();
    for (std::size_t i = 1, j = 0; i < len; ++i) {
        std::size_t bit = len >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    const u64 q = plan.modulus;
    for (std::size_t half = 1; half < len; half <<= 1) {
        u64 w = pow_mod(plan.root, plan.length / (2 * half), q);
        if (invert) w = pow_mod(w, q - 2, q);
        for (std::size_t s = 0; s < len; s += 2 * half) {
            u64 cur = 1;
            for (std::size_t t = 0; t < half; ++t) {
                const u64 x = v[s + t], y = mul_mod(v[s + t + half], cur, q);
                v[s + t] = (x + y) % q;
                v[s + t + half] = (x + q - y) % q;
                cur = mul_mod(cur, w, q);
            }
        }
    }
    if (invert) {
        const u64 inv = pow_mod(len, q - 2, q);
        for (auto& x : v) x = mul_mod(x, inv, q);
    }
}

}  // namespace

NttPlan make_ntt_plan(u64 p, u64 n) {
    if (p == 0) throw ParameterError("modulus p must be at least 1");
    NttPlan plan;
    plan.length = std::bit_ceil(std::max<u64>(2 * p - 1, 1));
    const u64 floor = std::max(n, plan.length);
    for (u64 c = 1;; ++c) {
        const u64 q = c * plan.length + 1;
        if (q >= (u64{1} << 31)) throw SolverError("no transform prime below 2^31 for this length");
        if (q > floor && is_prime(q)) {
            plan.modulus = q;
            break;
        }
    }
    const u64 g = primitive_root(plan.modulus);
    plan.root = pow_mod(g, (plan.modulus - 1) / plan.length, plan.modulus);
    return plan;
}

bool PolyProduct::present_mod(std::size_t i, std::size_t j, std::size_t r, std::size_t p) const {
    for (std::size_t e = r; e < span; e += p)
        if (present(i, j, e)) return true;
    return false;
}

PolyProduct poly_matrix_multiply(const ExponentMatrix& a, const ExponentMatrix& b, u64 p) {
    if (a.cols != b.rows) throw ShapeError("exponent matrix shapes do not chain");
    for (const auto* m : {&a, &b})
        for (auto e : m->e)
            if (e < -1 || e >= static_cast<std::int64_t>(p)) throw ParameterError("exponent outside [0, p)");
    const std::size_t n = a.rows, inner = a.cols, m = b.cols;
    const NttPlan plan = make_ntt_plan(p, std::max({n, inner, m, std::size_t{1}}));
    const u64 q = plan.modulus;
    const std::size_t len = plan.length;

    // powers[x] = root^x for x in [0, len).
    std::vector<u64> powers(len);
    powers[0] = 1;
    for (std::size_t x = 1; x < len; ++x) powers[x] = mul_mod(powers[x - 1], plan.root, q);
    // Reduce the accumulator before it can overflow.
    const u64 batch = std::max<u64>(1, (std::numeric_limits<u64>::max() - q) / ((q - 1) * (q - 1)));

    // values[(i*m + j) * len + s] = C_s[i,j]
    std::vector<u64> values(n * m * len, 0);
    std::vector<u64> as(n * inner), bs(inner * m);
    for (std::size_t s = 0; s < len; ++s) {
        for (std::size_t x = 0; x < a.e.size(); ++x)
            as[x] = a.e[x] < 0 ? 0 : powers[(static_cast<u64>(a.e[x]) * s) % len];
        for (std::size_t x = 0; x < b.e.size(); ++x)
            bs[x] = b.e[x] < 0 ? 0 : powers[(static_cast<u64>(b.e[x]) * s) % len];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                u64 acc = 0, pending = 0;
                for (std::size_t k = 0; k < inner; ++k) {
                    acc += as[i * inner + k] * bs[k * m + j];
                    if (++pending == batch) {
                        acc %= q;
                        pending = 0;
                    }
                }
                values[(i * m + j) * len + s] = acc % q;
            }
        kernel_stats().ops += n * m * inner;
    }

    PolyProduct out;
    out.rows = n;
    out.cols = m;
    out.span = 2 * p - 1;
    out.coeff.assign(n * m * out.span, 0);
    std::vector<u64> v(len);
    for (std::size_t x = 0; x < n * m; ++x) {
        std::copy(values.begin() + static_cast<std::ptrdiff_t>(x * len),
                  values.begin() + static_cast<std::ptrdiff_t>((x + 1) * len), v.begin());
        ntt(v, plan, true);
        for (std::size_t e = 0; e < out.span; ++e) out.coeff[x * out.span + e] = static_cast<std::uint32_t>(v[e]);
    }
    return out;
}

}  // namespace fewapsp
