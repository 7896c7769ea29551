#include "fewapsp/triangle/orientation.hpp"

#include <algorithm>

namespace fewapsp {

namespace {

// Matrix on the role pair (r, s) of the relation A + B - C = 0, read with
// rows indexed by role r. Roles: 0 = i, 1 = k, 2 = j.
WeightMatrix edge(const TriangleInstance& inst, int r, int s, int* sign) {
    const int lo = std::min(r, s), hi = std::max(r, s);
    const WeightMatrix* m = nullptr;
    if (lo == 0 && hi == 1) {
        m = &inst.a;
        *sign = 1;
    } else if (lo == 1 && hi == 2) {
        m = &inst.b;
        *sign = 1;
    } else {
        m = &inst.c;
        *sign = -1;
    }
    return r < s ? *m : m->transposed();
}

}  // namespace

TriangleInstance apply_orientation(const TriangleInstance& inst, Orientation o) {
    const auto p = orientation_perm(o);
    TriangleInstance out;
    constexpr int kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    constexpr int kNewSign[3] = {1, 1, -1};
    WeightMatrix* dst[3] = {&out.a, &out.b, &out.c};
    for (int e = 0; e < 3; ++e) {
        int sign = 1;
        WeightMatrix m = edge(inst, p[kPairs[e][0]], p[kPairs[e][1]], &sign);
        *dst[e] = sign * kNewSign[e] > 0 ? std::move(m) : m.negated();
    }
    out.orientation = compose(inst.orientation, o);
    return out;
}

Orientation orientation_for(PromiseSide side) {
    switch (side) {
        case PromiseSide::a_rows: return Orientation::identity;
        case PromiseSide::a_cols: return Orientation::a_cols;
        case PromiseSide::b_rows: return Orientation::b_rows;
        case PromiseSide::b_cols: return Orientation::b_cols;
        case PromiseSide::c_rows: return Orientation::c_rows;
        case PromiseSide::c_cols: return Orientation::c_cols;
    }
    return Orientation::identity;
}

TriangleInstance canonical_orientation(const TriangleInstance& inst, PromiseSide side) {
    return apply_orientation(inst, orientation_for(side));
}

TriangleInstance to_original_orientation(const TriangleInstance& inst) {
    return apply_orientation(inst, inverse(inst.orientation));
}

}  // namespace fewapsp
