#include "fewapsp/additive/isolating_primes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

namespace {

std::int64_t residue(std::int64_t z, std::int64_t p) {
    const std::int64_t r = z % p;
    return r < 0 ? r + p : r;
}

// Flags, per element of z, whether its residue mod p is unique in z.
std::vector<bool> isolation_flags(const IntSet& z, std::int64_t p) {
    std::vector<std::pair<std::int64_t, std::size_t>> rs(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) rs[k] = {residue(z[k], p), k};
    std::sort(rs.begin(), rs.end());
    std::vector<bool> iso(z.size(), false);
    for (std::size_t a = 0; a < rs.size();) {
        std::size_t b = a;
        while (b < rs.size() && rs[b].first == rs[a].first) ++b;
        if (b - a == 1) iso[rs[a].second] = true;
        a = b;
    }
    return iso;
}

}  // namespace

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    for (std::int64_t i = 2; i * i <= hi; ++i)
        if (!composite[static_cast<std::size_t>(i)])
            for (std::int64_t j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
    for (std::int64_t i = std::max<std::int64_t>(lo, 2); i <= hi; ++i)
        if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

bool isolated_modulo(const IntSet& z, std::size_t k, std::int64_t p) {
    const std::int64_t r = residue(z[k], p);
    for (std::size_t o = 0; o < z.size(); ++o)
        if (o != k && residue(z[o], p) == r) return false;
    return true;
}

IsolatingPrimes isolating_primes(const IntSet& z, std::int64_t bound) {
    if (z.empty()) throw ParameterError("isolating primes need a nonempty set");
    if (bound < 1) bound = 1;
    for (auto v : z)
        if (v < -bound || v > bound) throw ParameterError("element " + std::to_string(v) + " outside [-N, N]");
    const auto t = static_cast<std::int64_t>(z.size());
    const auto log_n = static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(bound - 1)));
    IsolatingPrimes out;
    out.m = std::max<std::int64_t>(4 * t * log_n, 16);
    out.isolator.assign(z.size(), 0);
    const auto candidates = primes_in_range(out.m, 2 * out.m);

    std::vector<bool> open(z.size(), true);
    std::size_t remaining = z.size();
    while (remaining > 0) {
        std::size_t best_count = 0;
        std::int64_t best = -1;
        std::vector<bool> best_flags;
        for (auto p : candidates) {
            auto flags = isolation_flags(z, p);
            std::size_t count = 0;
            for (std::size_t k = 0; k < z.size(); ++k) count += open[k] && flags[k];
            if (count > best_count) {
                best_count = count;
                best = p;
                best_flags = std::move(flags);
                if (count == remaining) break;
            }
        }
        if (2 * best_count < remaining) {
            throw SolverError("no prime in [" + std::to_string(out.m) + ", " + std::to_string(2 * out.m) +
                              "] isolates half of the remaining elements");
        }
        const std::size_t idx = out.primes.size();
        out.primes.push_back(best);
        for (std::size_t k = 0; k < z.size(); ++k)
            if (open[k] && best_flags[k]) {
                open[k] = false;
                out.isolator[k] = idx;
                --remaining;
            }
    }
    return out;
}

}  // namespace fewapsp
