#pragma once

#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Rotates inst by o; the result's orientation is compose(inst.orientation, o).
TriangleInstance apply_orientation(const TriangleInstance& inst, Orientation o);

// Rotation that moves the promised side onto the rows of A.
Orientation orientation_for(PromiseSide side);

TriangleInstance canonical_orientation(const TriangleInstance& inst, PromiseSide side);

// Undoes every rotation recorded on inst.
TriangleInstance to_original_orientation(const TriangleInstance& inst);

}  // namespace fewapsp
