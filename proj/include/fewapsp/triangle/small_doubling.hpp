#pragma once

#include <cstddef>

#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

struct SmallDoublingStats {
    std::size_t sumset_size = 0;
    std::size_t primes = 0;
    bool brute_fallback = false;
};

// Hashes entries modulo isolating primes of X + Y and decides each pair from
// one polynomial matrix product per prime. Falls back to the triple loop when
// |X + Y| > n. Yes-pairs carry no witness.
TriangleReport aete_small_doubling(const TriangleInstance& inst, SmallDoublingStats* stats = nullptr);

}  // namespace fewapsp
