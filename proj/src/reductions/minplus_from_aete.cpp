#include "fewapsp/reductions/minplus_from_aete.hpp"

#include <algorithm>
#include <string>

#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/products.hpp"
#include "fewapsp/reductions/scaling.hpp"
#include "fewapsp/triangle/brute.hpp"

namespace fewapsp {

namespace {

std::size_t max_row_distinct(const WeightMatrix& a) { return max_column_distinct(a.transposed()); }

bool all_zero_or_absent(const WeightMatrix& m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](Weight w) { return !w.is_finite() || w.value() == 0; });
}

// Square copy of size n with +inf turned into bot.
WeightMatrix pad(const WeightMatrix& m, std::size_t n) {
    WeightMatrix out(n, n, Weight::bot());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite()) out(i, j) = m(i, j);
    return out;
}

// Nonnegative operands with the promise on rows of A.
WeightMatrix solve_rows(const WeightMatrix& a0, const WeightMatrix& b0, std::size_t d, const AeteSolver& solver,
                        MinPlusFromAeteStats* stats) {
    std::vector<WeightMatrix> as{a0}, bs{b0};
    while (!all_zero_or_absent(as.back()) || !all_zero_or_absent(bs.back())) {
        as.push_back(halve_entries(as.back()));
        bs.push_back(halve_entries(bs.back()));
    }
    const std::size_t rows = a0.rows(), cols = b0.cols();
    const std::size_t n = std::max({rows, cols, a0.cols(), std::size_t{1}});
    WeightMatrix c = support_product(as.back(), bs.back());
    for (std::size_t level = as.size() - 1; level-- > 0;) {
        const WeightMatrix& approx = c;
        if (stats) stats->frames.push_back({level, as[level], bs[level], approx});
        const WeightMatrix pa = pad(as[level], n), pb = pad(bs[level], n);
        WeightMatrix next(rows, cols);
        std::vector<std::uint8_t> done(rows * cols, 0);
        for (std::int64_t off = 0; off <= 4; ++off) {
            WeightMatrix pc(n, n, Weight::bot());
            bool any = false;
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (approx(i, j).is_finite() && !done[i * cols + j]) {
                        pc(i, j) = Weight(checked_add(checked_mul(2, approx(i, j).value()), off));
                        any = true;
                    }
            if (!any) break;
            const TriangleReport r = solver(make_instance(pa, pb, pc), d);
            if (stats) ++stats->solver_calls;
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    if (pc(i, j).is_finite() && r.at(i, j)) {
                        next(i, j) = pc(i, j);
                        done[i * cols + j] = 1;
                    }
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (approx(i, j).is_finite() && !done[i * cols + j]) {
                    throw SolverError("no offset answered yes for pair (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") at level " + std::to_string(level));
                }
        c = std::move(next);
    }
    if (stats) std::reverse(stats->frames.begin(), stats->frames.end());
    return c;
}

}  // namespace

WeightMatrix minplus_from_aete(const WeightMatrix& a, const WeightMatrix& b, std::size_t d, const AeteSolver& solver,
                               MinPlusFromAeteStats* stats) {
    if (a.cols() != b.rows()) throw ShapeError("inner dimensions differ");
    const Weight amin = min_finite_entry(a), bmin = min_finite_entry(b);
    if (!amin.is_finite() || !bmin.is_finite()) return WeightMatrix(a.rows(), b.cols());
    const WeightMatrix a0 = shift_entries(a, amin.value());
    const WeightMatrix b0 = shift_entries(b, bmin.value());
    WeightMatrix c;
    if (max_row_distinct(a) <= d) {
        c = solve_rows(a0, b0, d, solver, stats);
    } else if (max_column_distinct(b) <= d) {
        c = solve_rows(b0.transposed(), a0.transposed(), d, solver, stats).transposed();
    } else {
        throw AuditError("neither rows of A nor columns of B have at most " + std::to_string(d) +
                         " distinct entries");
    }
    const std::int64_t back = checked_add(amin.value(), bmin.value());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (c(i, j).is_finite()) c(i, j) = Weight(checked_add(c(i, j).value(), back));
    return c;
}

AeteSolver brute_aete_solver() {
    return [](const TriangleInstance& inst, std::size_t) { return aete_brute(inst); };
}

AeteSolver few_weights_aete_solver(double delta_exponent, Rng& rng, FewWeightsConfig cfg) {
    return [delta_exponent, &rng, cfg](const TriangleInstance& inst, std::size_t d) {
        return aete_few_weights(inst, std::max<std::size_t>(d, 1), delta_exponent, PromiseSide::a_rows, rng, cfg);
    };
}

MinPlusFn aete_min_plus(AeteSolver solver) {
    return [solver = std::move(solver)](const WeightMatrix& a, const WeightMatrix& b) {
        const std::size_t d = std::max<std::size_t>(std::min(max_row_distinct(a), max_column_distinct(b)), 1);
        return minplus_from_aete(a, b, d, solver);
    };
}

}  // namespace fewapsp
