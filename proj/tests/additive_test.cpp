#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "fewapsp/additive/bsg_cover.hpp"
#include "fewapsp/additive/decomposition.hpp"
#include "fewapsp/additive/isolating_primes.hpp"
#include "fewapsp/additive/sumset.hpp"
#include "fewapsp/core/error.hpp"

using namespace fewapsp;

namespace {

IntSet range_set(std::int64_t lo, std::int64_t hi, std::int64_t step = 1) {
    IntSet s;
    for (std::int64_t v = lo; v <= hi; v += step) s.push_back(v);
    return s;
}

IntSet random_set(std::size_t size, std::int64_t lo, std::int64_t hi, Rng& rng) {
    std::set<std::int64_t> s;
    while (s.size() < size) s.insert(uniform_int(rng, lo, hi));
    return IntSet(s.begin(), s.end());
}

// r_{X+Y}(z) by direct counting.
std::int64_t reps(const IntSet& x, const IntSet& y, std::int64_t z) {
    std::int64_t c = 0;
    for (auto a : x)
        for (auto b : y) c += a + b == z;
    return c;
}

std::set<std::int64_t> popular_oracle(const IntSet& x, const IntSet& y, double t) {
    std::set<std::int64_t> out;
    for (auto a : x)
        for (auto b : y)
            if (static_cast<double>(reps(x, y, a + b)) >= t) out.insert(a + b);
    return out;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool isolates(const IntSet& z, std::int64_t v, std::int64_t p) {
    for (auto o : z)
        if (o != v && ((o - v) % p) == 0) return false;
    return true;
}

void check_isolation(const IntSet& z, std::int64_t bound, const IsolatingPrimes& ip) {
    const auto t = static_cast<double>(z.size());
    EXPECT_LE(static_cast<double>(ip.primes.size()), std::ceil(std::log2(t)) + 1);
    for (auto p : ip.primes) {
        EXPECT_TRUE(is_prime(p));
        EXPECT_GE(p, ip.m);
        EXPECT_LE(p, 2 * ip.m);
    }
    EXPECT_EQ(ip.m, std::max<std::int64_t>(16, 4 * static_cast<std::int64_t>(z.size()) *
                                                   static_cast<std::int64_t>(std::ceil(std::log2(static_cast<double>(bound))))));
    for (std::size_t k = 0; k < z.size(); ++k) EXPECT_TRUE(isolates(z, z[k], ip.primes[ip.isolator[k]])) << z[k];
}

void check_cover(const IntSet& x, const IntSet& y, const IntSet& z, const CoverOutput& c) {
    std::set<std::pair<std::int64_t, std::int64_t>> rem(c.remainder.begin(), c.remainder.end());
    for (std::size_t k = 0; k < c.parts.size(); ++k) {
        const auto& p = c.parts[k];
        EXPECT_TRUE(std::includes(x.begin(), x.end(), p.x.begin(), p.x.end()));
        EXPECT_TRUE(std::includes(y.begin(), y.end(), p.y.begin(), p.y.end()));
        std::set<std::int64_t> sums;
        for (auto a : p.x)
            for (auto b : p.y) sums.insert(a + b);
        EXPECT_EQ(c.audit.sumset_sizes[k], sums.size());
    }
    EXPECT_EQ(c.audit.remainder, c.remainder.size());
    for (auto a : x)
        for (auto b : y) {
            if (std::find(z.begin(), z.end(), a + b) == z.end()) continue;
            bool covered = rem.count({a, b}) > 0;
            for (const auto& p : c.parts) covered |= set_contains(p.x, a) && set_contains(p.y, b);
            EXPECT_TRUE(covered) << a << "+" << b;
        }
}

// Partition, translate containment and the low-degree property, all exact.
void check_side(const std::vector<IntSet>& sets, const std::vector<IntSet>& others, std::size_t d, std::size_t delta,
                const SideDecomposition& s) {
    const std::size_t n = sets.size();
    EXPECT_LE(s.iterations, delta * delta);
    EXPECT_FALSE(s.exhausted);
    ASSERT_EQ(s.cores.size(), s.iterations);
    for (const auto& core : s.cores) EXPECT_LE(core.size(), d);
    for (std::size_t i = 0; i < n; ++i) {
        ASSERT_EQ(s.parts[i].size(), s.iterations);
        std::multiset<std::int64_t> all(s.remainder[i].begin(), s.remainder[i].end());
        for (std::size_t l = 0; l < s.iterations; ++l) {
            for (auto v : s.parts[i][l]) {
                all.insert(v);
                EXPECT_TRUE(set_contains(s.cores[l], v - s.shifts[i][l]));
            }
        }
        EXPECT_EQ(all, std::multiset<std::int64_t>(sets[i].begin(), sets[i].end())) << "i=" << i;
    }
    const double t2 = 2.0 * static_cast<double>(d) / static_cast<double>(delta);
    std::size_t popular_pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& o : others) popular_pairs += !popular_oracle(s.remainder[i], o, t2).empty();
    EXPECT_LE(static_cast<double>(popular_pairs), static_cast<double>(n * n) / static_cast<double>(delta));
}

}  // namespace

TEST(Sumset, SingletonZero) {
    auto p = sumset_with_multiplicities({0}, {0});
    EXPECT_EQ(p.multiplicity, (std::map<std::int64_t, std::int64_t>{{0, 1}}));
}

TEST(Sumset, SmallInterval) {
    auto p = sumset_with_multiplicities({0, 1, 2}, {0, 1, 2});
    EXPECT_EQ(p.multiplicity, (std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 2}, {2, 3}, {3, 2}, {4, 1}}));
}

TEST(Sumset, TranslateBySingleton) {
    Rng rng(301);
    auto x = random_set(20, -100, 100, rng);
    EXPECT_EQ(sumset(x, {7}).size(), x.size());
}

TEST(Sumset, MultiplicitiesSumToProductAndMatchCounts) {
    Rng rng(303);
    for (int rep = 0; rep < 30; ++rep) {
        auto x = random_set(static_cast<std::size_t>(uniform_int(rng, 1, 20)), -30, 30, rng);
        auto y = random_set(static_cast<std::size_t>(uniform_int(rng, 1, 20)), -30, 30, rng);
        auto p = sumset_with_multiplicities(x, y);
        std::int64_t total = 0;
        for (const auto& [z, r] : p.multiplicity) {
            total += r;
            EXPECT_EQ(r, reps(x, y, z));
        }
        EXPECT_EQ(total, static_cast<std::int64_t>(x.size() * y.size()));
        EXPECT_EQ(p.support(), sumset(x, y));
    }
}

TEST(PopularSums, ThresholdOneIsSumset) {
    IntSet x{1, 4, 9}, y{-2, 0, 5};
    EXPECT_EQ(popular_sums_exact(x, y, 1), sumset(x, y));
}

TEST(PopularSums, SmallIntervalAtTwo) {
    EXPECT_EQ(popular_sums_exact({0, 1, 2}, {0, 1, 2}, 2), (IntSet{1, 2, 3}));
}

TEST(PopularSums, ThresholdAboveAllPairs) {
    EXPECT_TRUE(popular_sums_exact({0, 1, 2}, {0, 1}, 7).empty());
}

TEST(PopularSums, ExactMatchesCounting) {
    Rng rng(307);
    for (int rep = 0; rep < 20; ++rep) {
        auto x = random_set(15, 0, 25, rng);
        auto y = random_set(15, 0, 25, rng);
        for (double t : {1.0, 2.5, 4.0, 7.0}) {
            auto p = popular_sums_exact(x, y, t);
            EXPECT_EQ(std::set<std::int64_t>(p.begin(), p.end()), popular_oracle(x, y, t));
        }
    }
}

TEST(PopularSums, ApproxFallsBackAtThresholdOne) {
    Rng rng(309);
    IntSet x = range_set(0, 40), y = range_set(100, 160, 3);
    EXPECT_EQ(popular_sums_approx(x, y, 1, rng, {.rate_constant = 4.0, .exact_pair_limit = 0}), sumset(x, y));
}

TEST(PopularSums, ApproxSandwichOnIntervals) {
    const IntSet x = range_set(0, 255);
    const PopularSumsConfig cfg{.rate_constant = 1.0, .exact_pair_limit = 0};
    ASSERT_LT(cfg.rate_constant * std::log(256.0) / std::sqrt(64.0), 1.0);
    const auto hi = popular_sums_exact(x, x, 128);
    const auto lo = popular_sums_exact(x, x, 64);
    int good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        auto p = popular_sums_approx(x, x, 64, rng, cfg);
        good += std::includes(p.begin(), p.end(), hi.begin(), hi.end()) &&
                std::includes(lo.begin(), lo.end(), p.begin(), p.end());
    }
    EXPECT_GE(good, 95);
}

TEST(PopularSums, ApproxNeverReturnsUnpopularSums) {
    const IntSet x = range_set(0, 63), y = range_set(0, 63 * 1000, 1000);
    const PopularSumsConfig cfg{.rate_constant = 1.0, .exact_pair_limit = 0};
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        EXPECT_TRUE(popular_sums_approx(x, y, 32, rng, cfg).empty());
    }
}

TEST(IsolatingPrimes, Singleton) {
    auto ip = isolating_primes({5}, 1000);
    EXPECT_EQ(ip.primes.size(), 1u);
    check_isolation({5}, 1000, ip);
}

TEST(IsolatingPrimes, ArithmeticTriple) {
    const IntSet z{0, 5, 10};
    auto ip = isolating_primes(z, 10);
    for (auto p : ip.primes) {
        EXPECT_GT(p, 10);
        for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(isolated_modulo(z, k, p));
    }
    check_isolation(z, 10, ip);
}

TEST(IsolatingPrimes, RandomSetsIsolateEveryElement) {
    Rng rng(311);
    auto z = random_set(64, -(1 << 20), 1 << 20, rng);
    auto ip = isolating_primes(z, 1 << 20);
    EXPECT_LE(ip.primes.size(), 7u);
    check_isolation(z, 1 << 20, ip);
    for (int rep = 0; rep < 30; ++rep) {
        const auto t = static_cast<std::size_t>(uniform_int(rng, 1, 120));
        const std::int64_t n = uniform_int(rng, static_cast<std::int64_t>(t), std::int64_t{1} << 40);
        auto zs = random_set(t, -n, n, rng);
        check_isolation(zs, n, isolating_primes(zs, n));
    }
}

TEST(IsolatingPrimes, DenseIntervalNeedsSeveralPrimes) {
    const IntSet z = range_set(-200, 200);
    check_isolation(z, 200, isolating_primes(z, 200));
}

TEST(IsolatingPrimes, RejectsOutOfRange) {
    EXPECT_THROW(isolating_primes({-11, 3}, 10), ParameterError);
    EXPECT_THROW(isolating_primes({}, 10), ParameterError);
}

TEST(BsgCover, EmptyTarget) {
    Rng rng(313);
    auto c = bsg_cover({1, 2}, {3, 4}, {}, 3, rng);
    ASSERT_EQ(c.parts.size(), 3u);
    for (const auto& p : c.parts) EXPECT_TRUE(p.x.empty() && p.y.empty());
    EXPECT_TRUE(c.remainder.empty());
}

TEST(BsgCover, SingleZeroPair) {
    Rng rng(317);
    auto c = bsg_cover({0}, {0}, {0}, 1, rng);
    check_cover({0}, {0}, {0}, c);
    const bool in_part = c.parts[0].x == IntSet{0} && c.parts[0].y == IntSet{0};
    const bool in_rem = c.remainder.size() == 1;
    EXPECT_TRUE(in_part != in_rem);
}

TEST(BsgCover, IntervalsCoveredWithAudit) {
    Rng rng(319);
    const IntSet x = range_set(0, 63), z = range_set(0, 126);
    const CoverConfig cfg;
    auto c = bsg_cover(x, x, z, 4, rng, cfg);
    check_cover(x, x, z, c);
    std::cout << "[ audit ] max |X_k+Y_k| = " << c.audit.max_sumset << ", |R| = " << c.audit.remainder
              << ", d = " << c.audit.d << "\n";
    EXPECT_TRUE(c.audit.sumset_bound_holds(cfg.c2));
    EXPECT_TRUE(c.audit.remainder_bound_holds(cfg.c3));
}

TEST(BsgCover, RandomInstancesAlwaysCovered) {
    Rng rng(323);
    for (int rep = 0; rep < 40; ++rep) {
        const auto d = static_cast<std::size_t>(uniform_int(rng, 1, 40));
        auto x = random_set(d, -60, 60, rng);
        auto y = random_set(d, -60, 60, rng);
        auto z = random_set(d, -120, 120, rng);
        const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        auto c = bsg_cover(x, y, z, k, rng);
        EXPECT_EQ(c.parts.size(), k);
        check_cover(x, y, z, c);
    }
}

TEST(Decomposition, SingleSet) {
    Rng rng(331);
    std::vector<IntSet> xs{{0}}, ys{{0}};
    auto dec = popular_sum_decomposition(xs, ys, 1, 1, rng);
    check_side(xs, ys, 1, 1, dec.x_side);
    check_side(ys, xs, 1, 1, dec.y_side);
}

TEST(Decomposition, IdenticalIntervalsExtractImmediately) {
    Rng rng(337);
    const std::size_t n = 6, d = 8, delta = 2;
    std::vector<IntSet> xs(n, range_set(0, d - 1)), ys(n, negate_set(range_set(0, d - 1)));
    auto dec = popular_sum_decomposition(xs, ys, d, delta, rng);
    check_side(xs, ys, d, delta, dec.x_side);
    check_side(ys, xs, d, delta, dec.y_side);
    ASSERT_GE(dec.x_side.iterations, 1u);
    for (std::size_t i = 0; i < n; ++i) EXPECT_GE(static_cast<double>(dec.x_side.parts[i][0].size()), double(d) / delta);
}

TEST(Decomposition, RandomInstancesSatisfyBothProperties) {
    Rng rng(341);
    const std::size_t n = 30, d = 16;
    for (std::size_t delta : {2, 3}) {
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<IntSet> xs(n), ys(n);
            for (auto& s : xs) s = random_set(static_cast<std::size_t>(uniform_int(rng, 1, d)), 0, 30, rng);
            for (auto& s : ys) s = random_set(static_cast<std::size_t>(uniform_int(rng, 1, d)), -30, 0, rng);
            auto dec = popular_sum_decomposition(xs, ys, d, delta, rng);
            check_side(xs, ys, d, delta, dec.x_side);
            check_side(ys, xs, d, delta, dec.y_side);
        }
    }
}

TEST(Decomposition, RejectsOversizedSets) {
    Rng rng(347);
    EXPECT_THROW(popular_sum_decomposition({{1, 2, 3}}, {{0}}, 2, 2, rng), ParameterError);
}
