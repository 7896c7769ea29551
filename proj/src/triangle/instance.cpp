#include "fewapsp/triangle/instance.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2},  // identity
    {1, 0, 2},  // a_cols
    {1, 2, 0},  // b_rows
    {2, 1, 0},  // b_cols
    {0, 2, 1},  // c_rows
    {2, 0, 1},  // c_cols
}};

// Counts of each finite value per line.
std::size_t max_line_occurrence(const WeightMatrix& m, bool by_rows, std::size_t* max_distinct) {
    const std::size_t lines = by_rows ? m.rows() : m.cols();
    const std::size_t len = by_rows ? m.cols() : m.rows();
    std::size_t best = 0, distinct = 0;
    std::unordered_map<std::int64_t, std::size_t> count;
    for (std::size_t a = 0; a < lines; ++a) {
        count.clear();
        for (std::size_t b = 0; b < len; ++b) {
            const Weight w = by_rows ? m(a, b) : m(b, a);
            if (w.is_finite()) best = std::max(best, ++count[w.value()]);
        }
        distinct = std::max(distinct, count.size());
    }
    *max_distinct = distinct;
    return best;
}

}  // namespace

std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::identity: return "identity";
        case Orientation::a_cols: return "a_cols";
        case Orientation::b_rows: return "b_rows";
        case Orientation::b_cols: return "b_cols";
        case Orientation::c_rows: return "c_rows";
        case Orientation::c_cols: return "c_cols";
    }
    return "?";
}

std::string to_string(PromiseSide s) {
    switch (s) {
        case PromiseSide::a_rows: return "a-rows";
        case PromiseSide::a_cols: return "a-cols";
        case PromiseSide::b_rows: return "b-rows";
        case PromiseSide::b_cols: return "b-cols";
        case PromiseSide::c_rows: return "c-rows";
        case PromiseSide::c_cols: return "c-cols";
    }
    return "?";
}

PromiseSide parse_promise_side(const std::string& s) {
    for (auto side : {PromiseSide::a_rows, PromiseSide::a_cols, PromiseSide::b_rows, PromiseSide::b_cols,
                      PromiseSide::c_rows, PromiseSide::c_cols})
        if (to_string(side) == s) return side;
    throw ParameterError("unknown promise side '" + s + "'");
}

std::array<int, 3> orientation_perm(Orientation o) { return kPerms[static_cast<std::size_t>(o)]; }

Orientation orientation_from_perm(const std::array<int, 3>& perm) {
    for (std::size_t o = 0; o < kPerms.size(); ++o)
        if (kPerms[o] == perm) return static_cast<Orientation>(o);
    throw ParameterError("not a permutation of (0, 1, 2)");
}

Orientation compose(Orientation first, Orientation second) {
    const auto p = orientation_perm(first), q = orientation_perm(second);
    return orientation_from_perm({p[q[0]], p[q[1]], p[q[2]]});
}

Orientation inverse(Orientation o) {
    const auto p = orientation_perm(o);
    std::array<int, 3> inv{};
    for (int t = 0; t < 3; ++t) inv[p[t]] = t;
    return orientation_from_perm(inv);
}

bool TriangleInstance::is_triangle(std::size_t i, std::size_t k, std::size_t j) const {
    const Weight x = a(i, k), y = b(k, j), z = c(i, j);
    return x.is_finite() && y.is_finite() && z.is_finite() && x.value() + y.value() == z.value();
}

Triple TriangleInstance::to_original(const Triple& t) const {
    const auto p = orientation_perm(orientation);
    const std::array<std::size_t, 3> cur{t.i, t.k, t.j};
    std::array<std::size_t, 3> orig{};
    for (int s = 0; s < 3; ++s) orig[p[s]] = cur[s];
    return {orig[0], orig[1], orig[2]};
}

void TriangleInstance::validate() const {
    const std::size_t n = a.rows();
    for (const auto* m : {&a, &b, &c}) {
        if (m->rows() != n || m->cols() != n) throw ShapeError("exact triangle matrices must all be n x n");
        for (auto w : m->entries())
            if (!w.is_finite() && !w.is_bot()) throw ParameterError("exact triangle entries must be finite or bot");
    }
}

TriangleInstance make_instance(WeightMatrix a, WeightMatrix b, WeightMatrix c) {
    TriangleInstance inst{std::move(a), std::move(b), std::move(c), Orientation::identity};
    inst.validate();
    return inst;
}

WeightMatrix bot_matrix(std::size_t n) { return WeightMatrix(n, n, Weight::bot()); }

void TriangleReport::mark(std::size_t i, std::size_t j, std::int64_t k) {
    yes[i * n + j] = 1;
    if (witness[i * n + j] < 0) witness[i * n + j] = k;
}

void TriangleReport::merge(const TriangleReport& other) {
    if (other.n != n) throw ShapeError("report sizes differ");
    for (std::size_t x = 0; x < yes.size(); ++x) {
        if (!other.yes[x]) continue;
        yes[x] = 1;
        if (witness[x] < 0) witness[x] = other.witness[x];
    }
}

std::size_t TriangleReport::count() const { return static_cast<std::size_t>(std::count(yes.begin(), yes.end(), 1)); }

bool RegularityAudit::regular(std::size_t r) const {
    return max_occurrence() <= r;
}

std::size_t RegularityAudit::max_occurrence() const {
    return std::max({a.max_row_occurrence, a.max_col_occurrence, b.max_row_occurrence, b.max_col_occurrence,
                     c.max_row_occurrence, c.max_col_occurrence});
}

MatrixAudit audit_matrix(const WeightMatrix& m) {
    MatrixAudit out;
    out.distinct = distinct_entries(m).size();
    out.max_row_occurrence = max_line_occurrence(m, true, &out.max_row_distinct);
    out.max_col_occurrence = max_line_occurrence(m, false, &out.max_col_distinct);
    return out;
}

RegularityAudit audit_instance(const TriangleInstance& inst) {
    return {audit_matrix(inst.a), audit_matrix(inst.b), audit_matrix(inst.c)};
}

std::size_t promise_distinct(const TriangleInstance& inst, PromiseSide side) {
    switch (side) {
        case PromiseSide::a_rows: return audit_matrix(inst.a).max_row_distinct;
        case PromiseSide::a_cols: return audit_matrix(inst.a).max_col_distinct;
        case PromiseSide::b_rows: return audit_matrix(inst.b).max_row_distinct;
        case PromiseSide::b_cols: return audit_matrix(inst.b).max_col_distinct;
        case PromiseSide::c_rows: return audit_matrix(inst.c).max_row_distinct;
        case PromiseSide::c_cols: return audit_matrix(inst.c).max_col_distinct;
    }
    return 0;
}

IntSet distinct_entries(const WeightMatrix& m) {
    std::vector<std::int64_t> v;
    for (auto w : m.entries())
        if (w.is_finite()) v.push_back(w.value());
    return make_set(std::move(v));
}

WeightMatrix restrict_entries(const WeightMatrix& m, const IntSet& keep) {
    WeightMatrix out(m.rows(), m.cols(), Weight::bot());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_finite() && set_contains(keep, m(i, j).value())) out(i, j) = m(i, j);
    return out;
}

}  // namespace fewapsp
