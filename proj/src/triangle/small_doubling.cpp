#include "fewapsp/triangle/small_doubling.hpp"

#include <algorithm>
#include <cstdlib>

#include "fewapsp/additive/isolating_primes.hpp"
#include "fewapsp/triangle/brute.hpp"
#include "fewapsp/triangle/poly_multiply.hpp"

namespace fewapsp {

namespace {

ExponentMatrix exponents(const WeightMatrix& m, std::int64_t p) {
    ExponentMatrix e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite()) e(i, j) = ((m(i, j).value() % p) + p) % p;
    return e;
}

}  // namespace

TriangleReport aete_small_doubling(const TriangleInstance& inst, SmallDoublingStats* stats) {
    inst.validate();
    const std::size_t n = inst.n();
    SmallDoublingStats local;
    SmallDoublingStats& st = stats ? *stats : local;
    st = {};
    TriangleReport report(n);

    const IntSet x = distinct_entries(inst.a), y = distinct_entries(inst.b);
    const IntSet z = sumset(x, y);
    st.sumset_size = z.size();
    if (z.size() > n) {
        st.brute_fallback = true;
        report = aete_brute(inst);
        std::fill(report.witness.begin(), report.witness.end(), -1);
        return report;
    }
    // Pairs whose C-entry is not in X + Y are trivially no.
    std::vector<std::size_t> target(n * n, z.size());
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Weight c = inst.c(i, j);
            if (!c.is_finite()) continue;
            auto it = std::lower_bound(z.begin(), z.end(), c.value());
            if (it != z.end() && *it == c.value()) {
                target[i * n + j] = static_cast<std::size_t>(it - z.begin());
                any = true;
            }
        }
    if (!any) return report;

    std::int64_t bound = 1;
    for (auto v : z) bound = std::max(bound, std::abs(v));
    const IsolatingPrimes ip = isolating_primes(z, bound);
    st.primes = ip.primes.size();
    for (std::size_t pi = 0; pi < ip.primes.size(); ++pi) {
        const std::int64_t p = ip.primes[pi];
        bool needed = false;
        for (auto t : target) needed = needed || (t < z.size() && ip.isolator[t] == pi);
        if (!needed) continue;
        const PolyProduct prod = poly_matrix_multiply(exponents(inst.a, p), exponents(inst.b, p), static_cast<std::uint64_t>(p));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t t = target[i * n + j];
                if (t >= z.size() || ip.isolator[t] != pi) continue;
                const auto r = static_cast<std::size_t>(((z[t] % p) + p) % p);
                if (prod.present_mod(i, j, r, static_cast<std::size_t>(p))) report.mark(i, j);
            }
    }
    return report;
}

}  // namespace fewapsp
