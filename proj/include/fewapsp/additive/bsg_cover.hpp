#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fewapsp/additive/sumset.hpp"

namespace fewapsp {

struct CoverConfig {
    double c2 = 1.0;  // |X_k + Y_k| <= c2 K^5 d
    double c3 = 1.0;  // |R| <= c3 d^2 / K
    std::size_t retry_budget = 8;
};

struct CoverPart {
    IntSet x;
    IntSet y;
};

struct CoverAudit {
    std::vector<std::size_t> sumset_sizes;
    std::size_t max_sumset = 0;
    std::size_t remainder = 0;
    std::size_t d = 0;
    std::size_t k = 0;

    bool sumset_bound_holds(double c2) const;
    bool remainder_bound_holds(double c3) const;
};

struct CoverOutput {
    std::vector<CoverPart> parts;
    std::vector<std::pair<std::int64_t, std::int64_t>> remainder;
    CoverAudit audit;
};

// Every (x, y) in X x Y with x + y in Z lands in some X_k x Y_k or in R.
CoverOutput bsg_cover(const IntSet& x, const IntSet& y, const IntSet& z, std::size_t k, Rng& rng,
                      const CoverConfig& cfg = {});

}  // namespace fewapsp
