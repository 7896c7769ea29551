#include "fewapsp/additive/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fewapsp/core/error.hpp"
#include "fewapsp/core/weight.hpp"

namespace fewapsp {

namespace {

// Sorted (sum, count) runs over X x Y.
std::vector<std::pair<std::int64_t, std::int64_t>> sum_counts(const IntSet& x, const IntSet& y) {
    std::vector<std::int64_t> sums;
    sums.reserve(x.size() * y.size());
    for (auto a : x)
        for (auto b : y) sums.push_back(checked_add(a, b));
    std::sort(sums.begin(), sums.end());
    std::vector<std::pair<std::int64_t, std::int64_t>> runs;
    for (auto s : sums) {
        if (!runs.empty() && runs.back().first == s) ++runs.back().second;
        else runs.emplace_back(s, 1);
    }
    return runs;
}

IntSet subsample(const IntSet& s, double p, Rng& rng) {
    IntSet out;
    for (auto v : s)
        if (uniform01(rng) < p) out.push_back(v);
    return out;
}

}  // namespace

IntSet make_set(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool set_contains(const IntSet& s, std::int64_t v) { return std::binary_search(s.begin(), s.end(), v); }

IntSet negate_set(const IntSet& s) {
    IntSet out(s.rbegin(), s.rend());
    for (auto& v : out) v = -v;
    return out;
}

IntSet SumsetProfile::support() const {
    IntSet out;
    out.reserve(multiplicity.size());
    for (const auto& [z, r] : multiplicity) out.push_back(z);
    return out;
}

SumsetProfile sumset_with_multiplicities(const IntSet& x, const IntSet& y) {
    SumsetProfile p{x, y, {}};
    for (const auto& [z, r] : sum_counts(x, y)) p.multiplicity.emplace_hint(p.multiplicity.end(), z, r);
    return p;
}

IntSet sumset(const IntSet& x, const IntSet& y) {
    std::vector<std::int64_t> sums;
    sums.reserve(x.size() * y.size());
    for (auto a : x)
        for (auto b : y) sums.push_back(checked_add(a, b));
    return make_set(std::move(sums));
}

IntSet popular_sums_exact(const IntSet& x, const IntSet& y, double t) {
    if (!(t > 0)) throw ParameterError("popularity threshold must be positive");
    IntSet out;
    for (const auto& [z, r] : sum_counts(x, y))
        if (static_cast<double>(r) >= t) out.push_back(z);
    return out;
}

IntSet popular_sums_approx(const IntSet& x, const IntSet& y, double t, Rng& rng, const PopularSumsConfig& cfg) {
    if (!(t > 0)) throw ParameterError("popularity threshold must be positive");
    const double d = static_cast<double>(std::max<std::size_t>({x.size(), y.size(), 2}));
    const double p = cfg.rate_constant * std::log(d) / std::sqrt(t);
    const auto pairs = static_cast<std::uint64_t>(x.size()) * y.size();
    if (p >= 1.0 || pairs <= cfg.exact_pair_limit) return popular_sums_exact(x, y, t);
    const IntSet xs = subsample(x, p, rng);
    const IntSet ys = subsample(y, p, rng);
    const double threshold = 1.5 * p * p * t;
    IntSet out;
    for (const auto& [z, r] : sum_counts(xs, ys))
        if (static_cast<double>(r) >= threshold) out.push_back(z);
    return out;
}

}  // namespace fewapsp
