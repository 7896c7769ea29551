#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fewapsp/additive/sumset.hpp"

namespace fewapsp {

struct IsolatingPrimes {
    std::int64_t m = 0;
    std::vector<std::int64_t> primes;
    // isolator[k] indexes into primes: a prime that isolates the k-th element of Z.
    std::vector<std::size_t> isolator;
};

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// True if no other element of z is congruent to z[k] modulo p.
bool isolated_modulo(const IntSet& z, std::size_t k, std::int64_t p);

// Greedy choice of primes in [m, 2m], m = max(4 t ceil(log2 N), 16), each
// isolating at least half of the still unisolated elements.
IsolatingPrimes isolating_primes(const IntSet& z, std::int64_t bound);

}  // namespace fewapsp
