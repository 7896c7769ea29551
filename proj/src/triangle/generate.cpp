#include "fewapsp/triangle/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fewapsp/core/error.hpp"
#include "fewapsp/triangle/orientation.hpp"

namespace fewapsp {

namespace {

WeightMatrix uniform_matrix(std::size_t n, std::int64_t lo, std::int64_t hi, double hole, Rng& rng) {
    WeightMatrix m(n, n, Weight::bot());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (uniform01(rng) >= hole) m(i, j) = Weight(uniform_int(rng, lo, hi));
    return m;
}

std::vector<std::int64_t> palette(std::size_t d, std::int64_t lo, std::int64_t hi, Rng& rng) {
    std::set<std::int64_t> s;
    const auto span = static_cast<std::size_t>(hi - lo + 1);
    while (s.size() < std::min(d, span)) s.insert(uniform_int(rng, lo, hi));
    return {s.begin(), s.end()};
}

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

WeightMatrix cyclic_matrix(std::size_t n, const std::vector<std::int64_t>& w, double hole, Rng& rng) {
    const auto pi = shuffled(n, rng), sigma = shuffled(n, rng);
    WeightMatrix m(n, n, Weight::bot());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (uniform01(rng) >= hole) m(i, k) = Weight(w[(pi[i] + sigma[k]) % w.size()]);
    return m;
}

}  // namespace

TriangleInstance random_dweights_instance(std::size_t n, std::size_t d, PromiseSide side, const TriangleGenOptions& opt,
                                          Rng& rng) {
    if (d == 0 || opt.lo > opt.hi) throw ParameterError("bad instance generator parameters");
    // Build in canonical form (rows of A promised), then rotate back.
    WeightMatrix a(n, n, Weight::bot());
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = palette(d, opt.lo, opt.hi, rng);
        for (std::size_t k = 0; k < n; ++k)
            if (uniform01(rng) >= opt.hole_prob) a(i, k) = Weight(p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(p.size()) - 1))]);
    }
    TriangleInstance canon{std::move(a), uniform_matrix(n, opt.lo, opt.hi, opt.hole_prob, rng),
                           uniform_matrix(n, 2 * opt.lo, 2 * opt.hi, opt.hole_prob, rng), Orientation::identity};
    TriangleInstance out = apply_orientation(canon, inverse(orientation_for(side)));
    out.orientation = Orientation::identity;
    return out;
}

TriangleInstance random_uniform_regular_instance(std::size_t n, std::size_t d, const TriangleGenOptions& opt, Rng& rng) {
    if (d == 0 || opt.lo > opt.hi) throw ParameterError("bad instance generator parameters");
    const auto wa = palette(d, opt.lo, opt.hi, rng);
    const auto wb = palette(d, opt.lo, opt.hi, rng);
    std::vector<std::int64_t> sums;
    for (auto x : wa)
        for (auto y : wb) sums.push_back(x + y);
    std::shuffle(sums.begin(), sums.end(), rng);
    std::set<std::int64_t> wc_set;
    for (auto s : sums)
        if (wc_set.size() < d) wc_set.insert(s);
    const std::vector<std::int64_t> wc(wc_set.begin(), wc_set.end());
    TriangleInstance inst{cyclic_matrix(n, wa, opt.hole_prob, rng), cyclic_matrix(n, wb, opt.hole_prob, rng),
                          cyclic_matrix(n, wc, opt.hole_prob, rng), Orientation::identity};
    return inst;
}

void plant_triangle(TriangleInstance& inst, std::size_t i, std::size_t k, std::size_t j, std::int64_t lo) {
    if (!inst.a(i, k).is_finite()) inst.a(i, k) = Weight(lo);
    if (!inst.b(k, j).is_finite()) inst.b(k, j) = Weight(lo);
    inst.c(i, j) = inst.a(i, k) + inst.b(k, j);
}

}  // namespace fewapsp
