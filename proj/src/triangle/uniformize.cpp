#include "fewapsp/triangle/uniformize.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "fewapsp/additive/decomposition.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/triangle/brute.hpp"

namespace fewapsp {

namespace {

using Index = std::map<std::int64_t, std::vector<std::size_t>>;

std::vector<IntSet> chunk(const IntSet& values, std::size_t d) {
    std::vector<IntSet> out;
    for (std::size_t s = 0; s < values.size(); s += d)
        out.emplace_back(values.begin() + static_cast<std::ptrdiff_t>(s),
                         values.begin() + static_cast<std::ptrdiff_t>(std::min(values.size(), s + d)));
    return out;
}

bool all_bot(const WeightMatrix& m) {
    for (auto w : m.entries())
        if (w.is_finite()) return false;
    return true;
}

std::size_t floor_log2(std::size_t x) { return static_cast<std::size_t>(std::bit_width(x)) - 1; }

// Keeps the entries whose occurrence count in their row (or column) falls in
// [2^cls, 2^{cls+1}); one matrix per class.
std::vector<WeightMatrix> dyadic_classes(const WeightMatrix& m, bool by_rows) {
    const std::size_t n = m.rows();
    std::vector<WeightMatrix> out;
    std::map<std::int64_t, std::size_t> count;
    for (std::size_t line = 0; line < n; ++line) {
        count.clear();
        for (std::size_t t = 0; t < n; ++t) {
            const Weight w = by_rows ? m(line, t) : m(t, line);
            if (w.is_finite()) ++count[w.value()];
        }
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t r = by_rows ? line : t, c = by_rows ? t : line;
            if (!m(r, c).is_finite()) continue;
            const std::size_t cls = floor_log2(count[m(r, c).value()]);
            while (out.size() <= cls) out.emplace_back(n, n, Weight::bot());
            out[cls](r, c) = m(r, c);
        }
    }
    return out;
}

IntSet row_set(const WeightMatrix& m, std::size_t i) {
    std::vector<std::int64_t> v;
    for (auto w : m.row(i))
        if (w.is_finite()) v.push_back(w.value());
    return make_set(std::move(v));
}

IntSet col_set(const WeightMatrix& m, std::size_t j) {
    std::vector<std::int64_t> v;
    for (std::size_t k = 0; k < m.rows(); ++k)
        if (m(k, j).is_finite()) v.push_back(m(k, j).value());
    return make_set(std::move(v));
}

// idx[i][a] = columns k with m[i,k] = a.
std::vector<Index> row_index(const WeightMatrix& m) {
    std::vector<Index> idx(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (m(i, k).is_finite()) idx[i][m(i, k).value()].push_back(k);
    return idx;
}

// idx[j][b] = rows k with m[k,j] = b.
std::vector<Index> col_index(const WeightMatrix& m) {
    std::vector<Index> idx(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(k, j).is_finite()) idx[j][m(k, j).value()].push_back(k);
    return idx;
}

const std::vector<std::size_t>& lookup(const Index& idx, std::int64_t v) {
    static const std::vector<std::size_t> kEmpty;
    auto it = idx.find(v);
    return it == idx.end() ? kEmpty : it->second;
}

struct ClassContext {
    const WeightMatrix& a;
    const WeightMatrix& b;
    const WeightMatrix& c;
    std::size_t n, d, delta;
    std::set<Triple>& listed;
    std::vector<TriangleInstance>& out;
    Orientation orientation;
    UniformizeStats& stats;
};

bool triangle(const WeightMatrix& a, const WeightMatrix& b, const WeightMatrix& c, std::size_t i, std::size_t k,
              std::size_t j) {
    return a(i, k).is_finite() && b(k, j).is_finite() && c(i, j).is_finite() &&
           a(i, k).value() + b(k, j).value() == c(i, j).value();
}

void handle_class(ClassContext& ctx, Rng& rng, const PopularSumsConfig& cfg) {
    const auto& [a, b, c, n, d, delta, listed, out, orientation, stats] = ctx;
    const std::size_t dp = d * delta;          // d'
    const std::size_t delta_p = delta * delta;  // Δ'
    std::vector<IntSet> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = row_set(a, i);
    for (std::size_t j = 0; j < n; ++j) ys[j] = col_set(b, j);
    const Decomposition dec = popular_sum_decomposition(xs, ys, dp, delta_p, rng, cfg);
    stats.decomposition_iterations += dec.x_side.iterations + dec.y_side.iterations;
    const auto a_rows = row_index(a);
    const auto b_cols = col_index(b);
    const double t_exc = 2.0 * static_cast<double>(dp) / static_cast<double>(delta_p);

    // Exceptional triangles: A-entry in X'_i, or B-entry in Y'_j.
    for (int side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!c(i, j).is_finite()) continue;
                const IntSet& xi = side == 0 ? dec.x_side.remainder[i] : xs[i];
                const IntSet& yj = side == 0 ? ys[j] : dec.y_side.remainder[j];
                if ((side == 0 ? xi : yj).empty()) continue;
                const std::int64_t cv = c(i, j).value();
                const IntSet p = popular_sums_approx(xi, yj, t_exc, rng, cfg);
                if (!set_contains(p, cv)) {
                    for (auto av : xi) {
                        if (!set_contains(yj, cv - av)) continue;
                        for (auto k : lookup(a_rows[i], av))
                            if (triangle(a, b, c, i, k, j) && listed.insert({i, k, j}).second) ++stats.exceptional;
                    }
                } else {
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!triangle(a, b, c, i, k, j)) continue;
                        const bool in_rem = side == 0 ? set_contains(xi, a(i, k).value()) : set_contains(yj, b(k, j).value());
                        if (in_rem && listed.insert({i, k, j}).second) ++stats.exceptional;
                    }
                }
            }
    }

    // Ordinary triangles: shift each (g, h) part into S_g + T_h.
    const double t_c = static_cast<double>(d) / std::pow(static_cast<double>(delta), 9.0);
    for (std::size_t g = 0; g < dec.x_side.iterations; ++g) {
        WeightMatrix ag(n, n, Weight::bot());
        bool any_a = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (a(i, k).is_finite() && set_contains(dec.x_side.parts[i][g], a(i, k).value())) {
                    ag(i, k) = Weight(a(i, k).value() - dec.x_side.shifts[i][g]);
                    any_a = true;
                }
        if (!any_a) continue;
        const auto ag_rows = row_index(ag);
        for (std::size_t h = 0; h < dec.y_side.iterations; ++h) {
            WeightMatrix bh(n, n, Weight::bot());
            bool any_b = false;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    if (b(k, j).is_finite() && set_contains(dec.y_side.parts[j][h], b(k, j).value())) {
                        bh(k, j) = Weight(b(k, j).value() - dec.y_side.shifts[j][h]);
                        any_b = true;
                    }
            if (!any_b) continue;
            ++stats.shifted_pairs;
            const IntSet& sg = dec.x_side.cores[g];
            const IntSet& th = dec.y_side.cores[h];
            const IntSet popular = popular_sums_exact(sg, th, t_c);
            WeightMatrix cp(n, n, Weight::bot());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (!c(i, j).is_finite()) continue;
                    const std::int64_t cv = c(i, j).value() - dec.x_side.shifts[i][g] - dec.y_side.shifts[j][h];
                    if (set_contains(popular, cv)) {
                        cp(i, j) = Weight(cv);
                        continue;
                    }
                    for (auto av : sg) {
                        if (!set_contains(th, cv - av)) continue;
                        for (auto k : lookup(ag_rows[i], av))
                            if (bh(k, j).is_finite() && bh(k, j).value() == cv - av && listed.insert({i, k, j}).second)
                                ++stats.unpopular;
                    }
                }
            if (all_bot(cp)) continue;
            const TriangleInstance shifted{ag, std::move(bh), std::move(cp), orientation};
            for (auto& sub : split_uniform(shifted, d)) out.push_back(std::move(sub));
        }
    }
}

}  // namespace

std::vector<TriangleInstance> uniformize_naive(const TriangleInstance& inst, std::size_t d, std::size_t delta) {
    if (d == 0 || delta == 0) throw ParameterError("d and delta must be positive");
    std::vector<std::vector<IntSet>> groups;
    for (const auto* m : {&inst.a, &inst.b, &inst.c}) {
        auto g = chunk(distinct_entries(*m), d);
        if (g.size() > delta) throw AuditError("instance is not " + std::to_string(d * delta) + "-uniform");
        g.resize(delta);
        groups.push_back(std::move(g));
    }
    std::vector<TriangleInstance> out;
    for (const auto& ga : groups[0])
        for (const auto& gb : groups[1])
            for (const auto& gc : groups[2])
                out.push_back({restrict_entries(inst.a, ga), restrict_entries(inst.b, gb),
                               restrict_entries(inst.c, gc), inst.orientation});
    return out;
}

std::vector<TriangleInstance> split_uniform(const TriangleInstance& inst, std::size_t d) {
    if (d == 0) throw ParameterError("d must be positive");
    std::vector<TriangleInstance> out;
    const auto ga = chunk(distinct_entries(inst.a), d);
    const auto gb = chunk(distinct_entries(inst.b), d);
    const auto gc = chunk(distinct_entries(inst.c), d);
    for (const auto& x : ga)
        for (const auto& y : gb)
            for (const auto& z : gc)
                out.push_back({restrict_entries(inst.a, x), restrict_entries(inst.b, y), restrict_entries(inst.c, z),
                               inst.orientation});
    return out;
}

std::size_t saturating_delta(std::size_t n, std::size_t d) { return std::max(n, 4 * d) + 1; }

UniformizeResult uniformize(const TriangleInstance& inst, std::size_t d, std::size_t delta, Rng& rng,
                            const PopularSumsConfig& cfg) {
    inst.validate();
    if (d == 0 || delta == 0) throw ParameterError("d and delta must be positive");
    const std::size_t n = inst.n();
    const std::size_t rows_distinct = audit_matrix(inst.a).max_row_distinct;
    if (rows_distinct > d) {
        throw AuditError("rows of A carry " + std::to_string(rows_distinct) + " distinct entries, promised " +
                         std::to_string(d));
    }
    delta = std::min(delta, saturating_delta(n, d));

    UniformizeResult res;
    std::set<Triple> listed;
    const auto a_classes = dyadic_classes(inst.a, true);
    const auto b_classes = dyadic_classes(inst.b, false);
    for (const auto& ax : a_classes) {
        if (all_bot(ax)) continue;
        for (std::size_t y = 0; y < b_classes.size(); ++y) {
            const auto& by = b_classes[y];
            if (all_bot(by)) continue;
            ++res.stats.classes;
            if ((std::size_t{1} << y) * d * delta <= n) {
                // Sparse column class: list everything outright.
                ++res.stats.brute_classes;
                for (const auto& t : list_triangles({ax, by, inst.c, inst.orientation})) listed.insert(t);
                continue;
            }
            ClassContext ctx{ax, by, inst.c, n, d, delta, listed, res.instances, inst.orientation, res.stats};
            handle_class(ctx, rng, cfg);
        }
    }
    res.triples.assign(listed.begin(), listed.end());
    return res;
}

}  // namespace fewapsp
