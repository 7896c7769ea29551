#include "fewapsp/triangle/regularize.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "fewapsp/core/error.hpp"
#include "fewapsp/triangle/orientation.hpp"
#include "fewapsp/triangle/uniform_regular.hpp"
#include "fewapsp/triangle/uniformize.hpp"

namespace fewapsp {

namespace {

bool all_bot(const WeightMatrix& m) {
    for (auto w : m.entries())
        if (w.is_finite()) return false;
    return true;
}

// Part index of every entry so that each part holds at most r copies of a
// value per row (by_rows) or per column.
std::vector<std::size_t> occurrence_parts(const WeightMatrix& m, bool by_rows, std::size_t r) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> part(n * n, 0);
    std::map<std::int64_t, std::size_t> seen;
    for (std::size_t line = 0; line < n; ++line) {
        seen.clear();
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t i = by_rows ? line : t, j = by_rows ? t : line;
            if (m(i, j).is_finite()) part[i * n + j] = seen[m(i, j).value()]++ / r;
        }
    }
    return part;
}

std::vector<WeightMatrix> split_matrix(const WeightMatrix& m, std::size_t r, std::size_t big_r) {
    const std::size_t n = m.rows();
    std::vector<WeightMatrix> out;
    const auto row_part = occurrence_parts(m, true, r);
    for (std::size_t p = 0; p < big_r; ++p) {
        WeightMatrix mp(n, n, Weight::bot());
        for (std::size_t x = 0; x < n * n; ++x)
            if (m.entries()[x].is_finite() && row_part[x] == p) mp(x / n, x % n) = m.entries()[x];
        const auto col_part = occurrence_parts(mp, false, r);
        for (std::size_t q = 0; q < big_r; ++q) {
            WeightMatrix mq(n, n, Weight::bot());
            for (std::size_t x = 0; x < n * n; ++x)
                if (mp.entries()[x].is_finite() && col_part[x] == q) mq(x / n, x % n) = mp.entries()[x];
            out.push_back(std::move(mq));
        }
    }
    return out;
}

// Row-heavy, then column-heavy (after removing the row-heavy entries), then the rest.
struct ThreeWay {
    WeightMatrix row, col, reg;
};

ThreeWay three_way(const WeightMatrix& m, double threshold) {
    const std::size_t n = m.rows();
    ThreeWay out{WeightMatrix(n, n, Weight::bot()), WeightMatrix(n, n, Weight::bot()), m};
    std::map<std::int64_t, std::size_t> count;
    for (std::size_t i = 0; i < n; ++i) {
        count.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).is_finite()) ++count[m(i, j).value()];
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).is_finite() && static_cast<double>(count[m(i, j).value()]) > threshold) {
                out.row(i, j) = m(i, j);
                out.reg(i, j) = Weight::bot();
            }
    }
    const WeightMatrix rest = out.reg;
    for (std::size_t j = 0; j < n; ++j) {
        count.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (rest(i, j).is_finite()) ++count[rest(i, j).value()];
        for (std::size_t i = 0; i < n; ++i)
            if (rest(i, j).is_finite() && static_cast<double>(count[rest(i, j).value()]) > threshold) {
                out.col(i, j) = rest(i, j);
                out.reg(i, j) = Weight::bot();
            }
    }
    return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
    if (a != 0 && b > cap / a) return cap;
    return std::min(a * b, cap);
}

struct Recursion {
    double rho;
    Rng& rng;
    const RegularizeConfig& cfg;
    std::set<Triple>& triples;
    std::vector<RegularPiece>& raw;
    RegularizeStats& stats;

    // inst is canonical: rows of A carry at most d distinct entries.
    void run(const TriangleInstance& inst, std::size_t d, std::size_t delta, std::size_t depth) {
        ++stats.calls;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (d == 0) return;
        if (depth > cfg.max_depth) throw SolverError("regularization recursion exceeded depth " + std::to_string(cfg.max_depth));
        const std::size_t n = inst.n();
        UniformizeResult u = uniformize(inst, d, delta, rng, cfg.popular);
        for (const auto& t : u.triples) triples.insert(inst.to_original(t));
        stats.uniformized += u.instances.size();
        const std::size_t next_d = static_cast<std::size_t>(std::floor(static_cast<double>(d) / rho));
        const std::size_t next_delta =
            saturating_mul(delta, 12 * std::max<std::size_t>(u.instances.size(), 1), saturating_delta(n, d));
        const double threshold = static_cast<double>(n) / static_cast<double>(d) * rho;
        for (const auto& sub : u.instances) {
            const ThreeWay a = three_way(sub.a, threshold);
            const ThreeWay b = three_way(sub.b, threshold);
            const ThreeWay c = three_way(sub.c, threshold);
            const Orientation o = sub.orientation;
            const std::pair<TriangleInstance, PromiseSide> branches[] = {
                {{a.row, sub.b, sub.c, o}, PromiseSide::a_rows},  {{a.col, sub.b, sub.c, o}, PromiseSide::a_cols},
                {{a.reg, b.row, sub.c, o}, PromiseSide::b_rows},  {{a.reg, b.col, sub.c, o}, PromiseSide::b_cols},
                {{a.reg, b.reg, c.row, o}, PromiseSide::c_rows},  {{a.reg, b.reg, c.col, o}, PromiseSide::c_cols},
            };
            for (const auto& [branch, side] : branches) {
                if (all_bot(branch.a) || all_bot(branch.b) || all_bot(branch.c)) continue;
                run(canonical_orientation(branch, side), next_d, next_delta, depth + 1);
            }
            TriangleInstance piece{a.reg, b.reg, c.reg, o};
            if (all_bot(piece.a) || all_bot(piece.b) || all_bot(piece.c)) continue;
            raw.push_back({std::move(piece), d});
        }
    }
};

}  // namespace

std::vector<TriangleInstance> regularize_naive(const TriangleInstance& inst, std::size_t r, std::size_t big_r) {
    if (r == 0 || big_r == 0) throw ParameterError("r and R must be positive");
    const std::size_t occ = audit_instance(inst).max_occurrence();
    if (occ > r * big_r) {
        throw AuditError("instance is not " + std::to_string(r * big_r) + "-regular (max occurrence " +
                         std::to_string(occ) + ")");
    }
    const auto as = split_matrix(inst.a, r, big_r);
    const auto bs = split_matrix(inst.b, r, big_r);
    const auto cs = split_matrix(inst.c, r, big_r);
    std::vector<TriangleInstance> out;
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& c : cs) out.push_back({a, b, c, inst.orientation});
    return out;
}

RegularizeResult regularize(const TriangleInstance& inst, std::size_t d, std::size_t delta, double epsilon,
                            PromiseSide side, Rng& rng, const RegularizeConfig& cfg) {
    inst.validate();
    if (!(epsilon > 0)) throw ParameterError("epsilon must be positive");
    if (delta == 0) throw ParameterError("delta must be positive");
    const std::size_t measured = promise_distinct(inst, side);
    if (measured > d) {
        throw AuditError(to_string(side) + " carry " + std::to_string(measured) + " distinct entries, promised " +
                         std::to_string(d));
    }
    RegularizeResult res;
    if (d == 0) return res;
    const double rho = std::pow(static_cast<double>(d), epsilon / 6.0);
    res.stats.rho = rho;
    std::set<Triple> triples;
    std::vector<RegularPiece> raw;
    Recursion rec{rho, rng, cfg, triples, raw, res.stats};
    rec.run(canonical_orientation(inst, side), d, delta, 0);
    res.stats.pieces = raw.size();

    const std::size_t n = inst.n();
    for (const auto& piece : raw) {
        const std::size_t r = regularity_bound(n, piece.d);
        const std::size_t occ = audit_instance(piece.inst).max_occurrence();
        const std::size_t big_r = std::max<std::size_t>(1, (occ + r - 1) / r);
        for (auto& sub : regularize_naive(piece.inst, r, big_r)) {
            if (all_bot(sub.a) || all_bot(sub.b) || all_bot(sub.c)) continue;
            res.pieces.push_back({std::move(sub), piece.d});
        }
    }
    res.triples.assign(triples.begin(), triples.end());
    return res;
}

}  // namespace fewapsp
