#include "fewapsp/apsp/pivots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

std::size_t ceil_log2(std::size_t x) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < x) ++l;
    return l;
}

PivotHierarchy sample_pivots(std::size_t n, std::size_t h, Rng& rng, double sampling_constant) {
    if (h == 0) throw ParameterError("h must be at least 1");
    const std::size_t L = ceil_log2(h);
    PivotHierarchy p;
    const double log_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
    for (std::size_t l = 0; l <= L; ++l) {
        const double rate = l == 0 ? 1.0 : std::min(sampling_constant * log_n * std::ldexp(1.0, -static_cast<int>(l)), 1.0);
        std::vector<std::size_t> s;
        if (rate >= 1.0) {
            s.resize(n);
            std::iota(s.begin(), s.end(), 0);
        } else {
            for (std::size_t v = 0; v < n; ++v)
                if (uniform01(rng) < rate) s.push_back(v);
        }
        p.levels.push_back(std::move(s));
        p.rates.push_back(rate);
    }
    return p;
}

}  // namespace fewapsp
