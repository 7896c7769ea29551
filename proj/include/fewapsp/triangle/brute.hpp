#pragma once

#include <vector>

#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Triple loop; the witness is the smallest k.
TriangleReport aete_brute(const TriangleInstance& inst);

// All exact triangles, sorted.
std::vector<Triple> list_triangles(const TriangleInstance& inst);

// Re-checks every yes-pair: a witness is kept if valid and recovered otherwise.
void attach_witnesses(const TriangleInstance& inst, TriangleReport& report);

}  // namespace fewapsp
