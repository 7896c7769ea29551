#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fewapsp/core/random.hpp"

namespace fewapsp {

// Sorted, duplicate-free integer set.
using IntSet = std::vector<std::int64_t>;

IntSet make_set(std::vector<std::int64_t> values);
bool set_contains(const IntSet& s, std::int64_t v);
IntSet negate_set(const IntSet& s);

struct SumsetProfile {
    IntSet x;
    IntSet y;
    // r_{X+Y}(z) for every z in X + Y.
    std::map<std::int64_t, std::int64_t> multiplicity;

    IntSet support() const;
};

SumsetProfile sumset_with_multiplicities(const IntSet& x, const IntSet& y);
IntSet sumset(const IntSet& x, const IntSet& y);

// P_t(X, Y) = {z : r_{X+Y}(z) >= t}. t may be fractional.
IntSet popular_sums_exact(const IntSet& x, const IntSet& y, double t);

struct PopularSumsConfig {
    double rate_constant = 4.0;
    // Below this many pairs the exact computation is used directly.
    std::uint64_t exact_pair_limit = std::uint64_t{1} << 16;
};

// Returns P with P_{2t} ⊆ P ⊆ P_t with high probability: subsample both
// sides at rate p = c * ln(d) / sqrt(t) and keep sums seen >= 1.5 p^2 t times.
IntSet popular_sums_approx(const IntSet& x, const IntSet& y, double t, Rng& rng,
                           const PopularSumsConfig& cfg = {});

}  // namespace fewapsp
