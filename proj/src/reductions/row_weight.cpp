#include "fewapsp/reductions/row_weight.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "fewapsp/additive/decomposition.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/reductions/scaling.hpp"

namespace fewapsp {

namespace {

using ValueIndex = std::unordered_map<std::int64_t, std::vector<std::size_t>>;

// Entries of m grouped by floor(log2(occurrences within their line)); lines
// are rows, or columns when by_cols is set.
std::vector<WeightMatrix> dyadic_classes(const WeightMatrix& m, bool by_cols) {
    const std::size_t lines = by_cols ? m.cols() : m.rows();
    const std::size_t len = by_cols ? m.rows() : m.cols();
    auto at = [&](std::size_t line, std::size_t t) { return by_cols ? m(t, line) : m(line, t); };
    std::vector<WeightMatrix> out;
    for (std::size_t line = 0; line < lines; ++line) {
        std::unordered_map<std::int64_t, std::size_t> occ;
        for (std::size_t t = 0; t < len; ++t)
            if (at(line, t).is_finite()) ++occ[at(line, t).value()];
        for (std::size_t t = 0; t < len; ++t) {
            const Weight w = at(line, t);
            if (!w.is_finite()) continue;
            const auto cls = static_cast<std::size_t>(std::bit_width(occ[w.value()]) - 1);
            while (out.size() <= cls) out.emplace_back(m.rows(), m.cols());
            (by_cols ? out[cls](t, line) : out[cls](line, t)) = w;
        }
    }
    return out;
}

// Row i of a as value -> column indices.
std::vector<ValueIndex> row_index(const WeightMatrix& a) {
    std::vector<ValueIndex> idx(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k).is_finite()) idx[i][a(i, k).value()].push_back(k);
    return idx;
}

std::vector<ValueIndex> col_index(const WeightMatrix& b) {
    std::vector<ValueIndex> idx(b.cols());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(k, j).is_finite()) idx[j][b(k, j).value()].push_back(k);
    return idx;
}

std::size_t max_distinct(const std::vector<ValueIndex>& idx) {
    std::size_t m = 0;
    for (const auto& v : idx) m = std::max(m, v.size());
    return m;
}

IntSet keys(const ValueIndex& v) {
    std::vector<std::int64_t> out;
    for (const auto& [w, ks] : v) out.push_back(w);
    return make_set(std::move(out));
}

bool exact_at(const WeightMatrix& m, std::size_t r, std::size_t c, std::int64_t v) {
    return m(r, c).is_finite() && m(r, c).value() == v;
}

void relax(WeightMatrix& out, std::size_t i, std::size_t j, std::int64_t v) {
    if (Weight(v) < out(i, j)) out(i, j) = Weight(v);
}

struct ClassPair {
    const WeightMatrix& a;
    const WeightMatrix& b;
    const WeightMatrix& c;
    std::vector<ValueIndex> rows;  // of a
    std::vector<ValueIndex> cols;  // of b
};

// Smallest candidate in {C, C+1, C+2} realized by some k, enumerating the
// values of row i of A against column j's index of B (or the reverse).
void windowed_brute(const ClassPair& cp, bool from_rows, WeightMatrix& out) {
    for (std::size_t i = 0; i < cp.a.rows(); ++i)
        for (std::size_t j = 0; j < cp.b.cols(); ++j) {
            if (!cp.c(i, j).is_finite()) continue;
            bool found = false;
            for (std::int64_t off = 0; off <= 2 && !found; ++off) {
                const std::int64_t target = cp.c(i, j).value() + off;
                const ValueIndex& enumerate = from_rows ? cp.rows[i] : cp.cols[j];
                const ValueIndex& lookup = from_rows ? cp.cols[j] : cp.rows[i];
                for (const auto& [v, unused] : enumerate) {
                    const auto it = lookup.find(target - v);
                    if (it == lookup.end()) continue;
                    for (auto k : it->second) {
                        if (from_rows ? exact_at(cp.a, i, k, v) : exact_at(cp.b, k, j, v)) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) relax(out, i, j, target);
            }
        }
}

void decomposed(const ClassPair& cp, std::size_t d, std::size_t delta, const NodeApspSolver& solver, Rng& rng,
                const RowWeightOptions& opt, RowWeightStats& st, WeightMatrix& out) {
    const std::size_t n_rows = cp.a.rows(), n_cols = cp.b.cols();
    std::vector<IntSet> s(n_rows), t(n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) s[i] = keys(cp.rows[i]);
    for (std::size_t j = 0; j < n_cols; ++j) t[j] = keys(cp.cols[j]);
    const Decomposition dec = popular_sum_decomposition(s, t, d, delta, rng, opt.popular);
    const auto& xs = dec.x_side;
    const auto& ys = dec.y_side;
    const double heavy_threshold = 2.0 * static_cast<double>(d) / static_cast<double>(delta);

    // Unpopular pairs: x in S'_i or y in T'_j.
    for (std::size_t i = 0; i < n_rows; ++i)
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (!cp.c(i, j).is_finite()) continue;
            std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> found(3);
            bool heavy = false;
            for (std::int64_t off = 0; off <= 2; ++off) {
                const std::int64_t target = cp.c(i, j).value() + off;
                for (auto x : s[i]) {
                    const std::int64_t y = target - x;
                    if (!set_contains(t[j], y)) continue;
                    if (set_contains(xs.remainder[i], x) || set_contains(ys.remainder[j], y)) {
                        found[static_cast<std::size_t>(off)].emplace_back(x, y);
                    }
                }
                if (static_cast<double>(found[static_cast<std::size_t>(off)].size()) >= heavy_threshold) heavy = true;
            }
            if (heavy) {
                ++st.heavy_pairs;
                for (std::size_t k = 0; k < cp.a.cols(); ++k)
                    if (cp.a(i, k).is_finite() && cp.b(k, j).is_finite())
                        relax(out, i, j, cp.a(i, k).value() + cp.b(k, j).value());
                continue;
            }
            ++st.unpopular_pairs;
            for (std::int64_t off = 0; off <= 2; ++off) {
                bool hit = false;
                for (const auto& [x, y] : found[static_cast<std::size_t>(off)]) {
                    for (auto k : cp.rows[i].at(x))
                        if (exact_at(cp.b, k, j, y)) {
                            hit = true;
                            break;
                        }
                    if (hit) break;
                }
                if (hit) {
                    relax(out, i, j, cp.c(i, j).value() + off);
                    break;
                }
            }
        }

    // Popular pairs: one gadget per (l, l').
    for (std::size_t l = 0; l < xs.iterations; ++l) {
        std::vector<std::int64_t> sigma(n_rows, 0);
        bool any_row = false;
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (xs.parts[i][l].empty()) continue;
            sigma[i] = xs.shifts[i][l];
            any_row = true;
        }
        if (!any_row) continue;
        for (std::size_t lp = 0; lp < ys.iterations; ++lp) {
            std::vector<std::int64_t> tau(n_cols, 0);
            bool any_col = false;
            for (std::size_t j = 0; j < n_cols; ++j) {
                if (ys.parts[j][lp].empty()) continue;
                tau[j] = ys.shifts[j][lp];
                any_col = true;
            }
            if (!any_col) continue;
            const NodeGadget g =
                gen_row_weight_gadget(cp.a, cp.b, sigma, tau, xs.cores[l], ys.cores[lp], opt.undirected);
            ++st.gadget_graphs;
            st.max_gadget_nodes = std::max(st.max_gadget_nodes, g.graph.n());
            const WeightMatrix dist = solver(g.graph);
            if (dist.rows() != g.graph.n() || dist.cols() != g.graph.n()) {
                throw SolverError("node-weighted solver returned wrong shape");
            }
            const WeightMatrix prod = decode_gadget(g, dist);
            for (std::size_t i = 0; i < n_rows; ++i)
                for (std::size_t j = 0; j < n_cols; ++j)
                    if (prod(i, j).is_finite()) relax(out, i, j, prod(i, j).value());
        }
    }
}

}  // namespace

NodeGadget gen_row_weight_gadget(const WeightMatrix& a, const WeightMatrix& b, const std::vector<std::int64_t>& sigma,
                                 const std::vector<std::int64_t>& tau, const IntSet& x, const IntSet& y,
                                 bool undirected) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    if (sigma.size() != a.rows() || tau.size() != b.cols()) throw ShapeError("shift vectors have wrong length");
    const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
    std::int64_t m = 1;
    for (const auto* v : {&sigma, &tau, &x, &y})
        for (auto w : *v) m = std::max(m, std::abs(w));
    const std::int64_t extra = undirected ? checked_mul(10, m) : 0;

    std::vector<std::int64_t> weight;
    for (std::size_t i = 0; i < rows; ++i) weight.push_back(checked_add(sigma[i], extra));
    const std::size_t k1 = weight.size();
    for (std::size_t k = 0; k < inner; ++k)
        for (auto v : x) weight.push_back(checked_add(v, extra));
    const std::size_t k2 = weight.size();
    for (std::size_t k = 0; k < inner; ++k)
        for (auto v : y) weight.push_back(checked_add(v, extra));
    const std::size_t j0 = weight.size();
    for (std::size_t j = 0; j < cols; ++j) weight.push_back(checked_add(tau[j], extra));

    auto pos = [](const IntSet& s, std::int64_t v) -> std::ptrdiff_t {
        const auto it = std::lower_bound(s.begin(), s.end(), v);
        return it != s.end() && *it == v ? it - s.begin() : -1;
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto link = [&](std::size_t u, std::size_t v) {
        edges.emplace_back(u, v);
        if (undirected) edges.emplace_back(v, u);
    };
    for (std::size_t k = 0; k < inner; ++k)
        for (std::size_t s = 0; s < x.size(); ++s)
            for (std::size_t t = 0; t < y.size(); ++t) link(k1 + k * x.size() + s, k2 + k * y.size() + t);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (!a(i, k).is_finite()) continue;
            const auto p = pos(x, a(i, k).value() - sigma[i]);
            if (p >= 0) link(i, k1 + k * x.size() + static_cast<std::size_t>(p));
        }
    for (std::size_t k = 0; k < inner; ++k)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!b(k, j).is_finite()) continue;
            const auto p = pos(y, b(k, j).value() - tau[j]);
            if (p >= 0) link(k2 + k * y.size() + static_cast<std::size_t>(p), j0 + j);
        }

    NodeGadget g;
    const std::size_t total = weight.size();
    g.graph = NodeWeightedGraph(total, std::move(weight), std::move(edges));
    for (std::size_t i = 0; i < rows; ++i) g.sources.push_back(i);
    for (std::size_t j = 0; j < cols; ++j) g.sinks.push_back(j0 + j);
    g.undirected = undirected;
    g.offset = 4 * extra;
    g.max_genuine = undirected ? 4 * m : std::numeric_limits<std::int64_t>::max();
    g.layer_sizes = {rows, inner * x.size(), inner * y.size(), cols};
    return g;
}

WeightMatrix row_weight_minplus_via_nw_apsp(const WeightMatrix& a, const WeightMatrix& b,
                                           const WeightMatrix& c_promise, std::size_t delta,
                                           const NodeApspSolver& solver, Rng& rng, const RowWeightOptions& opt,
                                           RowWeightStats* stats) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    if (c_promise.rows() != a.rows() || c_promise.cols() != b.cols()) throw ShapeError("promise has wrong shape");
    if (delta == 0) throw ParameterError("delta must be positive");
    if (!solver) throw ParameterError("no node-weighted solver given");
    min_finite_entry(a);
    min_finite_entry(b);
    RowWeightStats local;
    RowWeightStats& st = stats ? *stats : local;
    const double root_delta = std::sqrt(static_cast<double>(delta));

    WeightMatrix out(a.rows(), b.cols());
    const auto a_classes = dyadic_classes(a, false);
    const auto b_classes = dyadic_classes(b, true);
    for (const auto& ax : a_classes)
        for (const auto& by : b_classes) {
            ClassPair cp{ax, by, c_promise, row_index(ax), col_index(by)};
            const std::size_t da = max_distinct(cp.rows), db = max_distinct(cp.cols);
            if (da == 0 || db == 0) continue;
            ++st.class_pairs;
            const auto fa = static_cast<double>(da), fb = static_cast<double>(db);
            if (fb > fa * root_delta || fa > fb * root_delta) {
                ++st.brute_class_pairs;
                windowed_brute(cp, da <= db, out);
                continue;
            }
            ++st.decomposed_class_pairs;
            decomposed(cp, std::max(da, db), delta, solver, rng, opt, st, out);
        }

    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) {
            const Weight c = c_promise(i, j), r = out(i, j);
            const bool ok = c.is_finite() ? r.is_finite() && r.value() >= c.value() && r.value() <= c.value() + 2
                                          : !r.is_finite();
            if (!ok) {
                throw AuditError("promise violated at (" + std::to_string(i) + ", " + std::to_string(j) +
                                 "): promise " + c.to_string() + ", computed " + r.to_string());
            }
        }
    return out;
}

WeightMatrix row_weight_minplus(const WeightMatrix& a, const WeightMatrix& b, std::size_t delta,
                                const NodeApspSolver& solver, Rng& rng, const RowWeightOptions& opt,
                                RowWeightStats* stats) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    const Weight lo = std::min(min_finite_entry(a), min_finite_entry(b));
    if (lo.is_finite() && lo.value() < 0) throw ParameterError("row-weight reduction needs nonnegative entries");
    std::vector<WeightMatrix> as{a}, bs{b};
    auto zero = [](const WeightMatrix& m) {
        return std::all_of(m.entries().begin(), m.entries().end(),
                           [](Weight w) { return !w.is_finite() || w.value() == 0; });
    };
    while (!zero(as.back()) || !zero(bs.back())) {
        as.push_back(halve_entries(as.back()));
        bs.push_back(halve_entries(bs.back()));
    }
    WeightMatrix c = support_product(as.back(), bs.back());
    for (std::size_t level = as.size() - 1; level-- > 0;) {
        WeightMatrix promise = c;
        for (std::size_t i = 0; i < promise.rows(); ++i)
            for (std::size_t j = 0; j < promise.cols(); ++j)
                if (promise(i, j).is_finite()) promise(i, j) = Weight(checked_mul(2, promise(i, j).value()));
        c = row_weight_minplus_via_nw_apsp(as[level], bs[level], promise, delta, solver, rng, opt, stats);
    }
    return c;
}

}  // namespace fewapsp
