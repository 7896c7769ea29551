#include "fewapsp/additive/decomposition.hpp"

#include <algorithm>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

SideDecomposition decompose_side(const std::vector<IntSet>& sets, const std::vector<IntSet>& others, std::size_t d,
                                 std::size_t delta, Rng& rng, const PopularSumsConfig& cfg) {
    if (delta == 0) throw ParameterError("delta must be at least 1");
    if (d == 0) throw ParameterError("d must be at least 1");
    const std::size_t n = sets.size();
    const double t = static_cast<double>(d) / static_cast<double>(delta);
    const double degree_floor = static_cast<double>(n) / static_cast<double>(delta);
    const std::size_t cap = delta * delta;

    SideDecomposition out;
    out.parts.assign(n, {});
    out.shifts.assign(n, {});
    std::vector<IntSet> cur = sets;

    while (true) {
        // p[j][i] = P_{i,j}
        std::vector<std::vector<IntSet>> p(others.size(), std::vector<IntSet>(n));
        std::size_t chosen = others.size();
        for (std::size_t j = 0; j < others.size() && chosen == others.size(); ++j) {
            std::size_t deg = 0;
            for (std::size_t i = 0; i < n; ++i) {
                p[j][i] = popular_sums_approx(cur[i], others[j], t, rng, cfg);
                deg += !p[j][i].empty();
            }
            if (n > 0 && static_cast<double>(deg) >= degree_floor) chosen = j;
        }
        if (chosen == others.size()) break;
        if (out.iterations == cap) {
            out.exhausted = true;
            break;
        }
        const IntSet core = negate_set(others[chosen]);
        for (std::size_t i = 0; i < n; ++i) {
            IntSet part;
            std::int64_t shift = 0;
            if (!p[chosen][i].empty()) {
                shift = p[chosen][i].front();
                IntSet keep;
                for (auto v : cur[i]) (set_contains(core, v - shift) ? part : keep).push_back(v);
                cur[i] = std::move(keep);
            }
            out.parts[i].push_back(std::move(part));
            out.shifts[i].push_back(shift);
        }
        out.cores.push_back(core);
        ++out.iterations;
    }
    out.remainder = std::move(cur);
    return out;
}

Decomposition popular_sum_decomposition(const std::vector<IntSet>& xs, const std::vector<IntSet>& ys, std::size_t d,
                                        std::size_t delta, Rng& rng, const PopularSumsConfig& cfg) {
    for (const auto* side : {&xs, &ys})
        for (const auto& s : *side)
            if (s.size() > d) throw ParameterError("a set exceeds the size bound d");
    Decomposition out;
    out.x_side = decompose_side(xs, ys, d, delta, rng, cfg);
    out.y_side = decompose_side(ys, xs, d, delta, rng, cfg);
    return out;
}

}  // namespace fewapsp
