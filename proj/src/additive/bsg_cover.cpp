#include "fewapsp/additive/bsg_cover.hpp"

#include <algorithm>
#include <cmath>

#include "fewapsp/core/error.hpp"
#include "fewapsp/core/weight.hpp"

namespace fewapsp {

namespace {

// Bipartite graph on positions of X and Y; an edge for each uncovered pair summing into Z.
struct PairGraph {
    std::size_t nx = 0, ny = 0;
    std::vector<std::vector<bool>> live;  // live[a][b]

    std::size_t degree_x(std::size_t a) const { return static_cast<std::size_t>(std::count(live[a].begin(), live[a].end(), true)); }
    std::size_t degree_y(std::size_t b) const {
        std::size_t c = 0;
        for (std::size_t a = 0; a < nx; ++a) c += live[a][b];
        return c;
    }
    std::size_t edges() const {
        std::size_t c = 0;
        for (std::size_t a = 0; a < nx; ++a) c += degree_x(a);
        return c;
    }
};

struct Attempt {
    std::vector<std::size_t> xa, yb;
    std::size_t covered = 0;
    std::size_t sumset_size = 0;
};

std::size_t pick_weighted(const std::vector<std::size_t>& weights, Rng& rng) {
    std::size_t total = 0;
    for (auto w : weights) total += w;
    auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(total) - 1));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    return weights.size() - 1;
}

// Dependent random choice: an anchor y0 picked by degree defines X_k = N(y0);
// Y_k keeps the y whose neighbourhood meets X_k in a 1/(2K) fraction, and
// X_k is then trimmed the same way against Y_k.
Attempt attempt(const PairGraph& g, const IntSet& x, const IntSet& y, std::size_t k, Rng& rng) {
    std::vector<std::size_t> deg(g.ny);
    for (std::size_t b = 0; b < g.ny; ++b) deg[b] = g.degree_y(b);
    const std::size_t y0 = pick_weighted(deg, rng);
    Attempt at;
    std::vector<std::size_t> nbr;
    for (std::size_t a = 0; a < g.nx; ++a)
        if (g.live[a][y0]) nbr.push_back(a);
    const double need_y = std::max(1.0, static_cast<double>(nbr.size()) / (2.0 * static_cast<double>(k)));
    for (std::size_t b = 0; b < g.ny; ++b) {
        std::size_t common = 0;
        for (auto a : nbr) common += g.live[a][b];
        if (static_cast<double>(common) >= need_y) at.yb.push_back(b);
    }
    const double need_x = std::max(1.0, static_cast<double>(at.yb.size()) / (2.0 * static_cast<double>(k)));
    for (auto a : nbr) {
        std::size_t common = 0;
        for (auto b : at.yb) common += g.live[a][b];
        if (static_cast<double>(common) >= need_x) at.xa.push_back(a);
    }
    for (auto a : at.xa)
        for (auto b : at.yb) at.covered += g.live[a][b];
    IntSet xs, ys;
    for (auto a : at.xa) xs.push_back(x[a]);
    for (auto b : at.yb) ys.push_back(y[b]);
    at.sumset_size = sumset(xs, ys).size();
    return at;
}

}  // namespace

bool CoverAudit::sumset_bound_holds(double c2) const {
    const double kk = static_cast<double>(k);
    return static_cast<double>(max_sumset) <= c2 * std::pow(kk, 5) * static_cast<double>(d);
}

bool CoverAudit::remainder_bound_holds(double c3) const {
    const double dd = static_cast<double>(d);
    return static_cast<double>(remainder) <= c3 * dd * dd / static_cast<double>(k);
}

CoverOutput bsg_cover(const IntSet& x, const IntSet& y, const IntSet& z, std::size_t k, Rng& rng,
                      const CoverConfig& cfg) {
    if (k == 0) throw ParameterError("cover parameter K must be at least 1");
    CoverOutput out;
    out.parts.resize(k);
    out.audit.k = k;
    out.audit.d = std::max<std::size_t>({x.size(), y.size(), z.size(), 1});
    out.audit.sumset_sizes.assign(k, 0);

    PairGraph g{x.size(), y.size(), std::vector<std::vector<bool>>(x.size(), std::vector<bool>(y.size(), false))};
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b) g.live[a][b] = set_contains(z, checked_add(x[a], y[b]));

    const double dd = static_cast<double>(out.audit.d);
    const double remainder_target = cfg.c3 * dd * dd / static_cast<double>(k);
    const double sumset_cap = cfg.c2 * std::pow(static_cast<double>(k), 5) * dd;

    for (std::size_t part = 0; part < k; ++part) {
        const std::size_t live = g.edges();
        if (static_cast<double>(live) <= remainder_target) break;
        Attempt best;
        for (std::size_t r = 0; r < cfg.retry_budget; ++r) {
            Attempt at = attempt(g, x, y, k, rng);
            if (static_cast<double>(at.sumset_size) > sumset_cap) continue;
            if (at.covered > best.covered) best = std::move(at);
        }
        if (best.covered == 0) continue;
        for (auto a : best.xa) {
            out.parts[part].x.push_back(x[a]);
            for (auto b : best.yb) g.live[a][b] = false;
        }
        for (auto b : best.yb) out.parts[part].y.push_back(y[b]);
        out.audit.sumset_sizes[part] = best.sumset_size;
    }

    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
            if (g.live[a][b]) out.remainder.emplace_back(x[a], y[b]);
    out.audit.remainder = out.remainder.size();
    out.audit.max_sumset = out.audit.sumset_sizes.empty()
                               ? 0
                               : *std::max_element(out.audit.sumset_sizes.begin(), out.audit.sumset_sizes.end());
    return out;
}

}  // namespace fewapsp
