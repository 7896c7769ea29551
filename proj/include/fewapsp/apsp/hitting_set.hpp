#pragma once

#include <cstddef>
#include <vector>

namespace fewapsp {

// Greedy hitting set: repeatedly take the vertex on the most unhit paths,
// lowest id first among equals. Returns ids in ascending order.
std::vector<std::size_t> greedy_hitting_set(const std::vector<std::vector<std::size_t>>& paths, std::size_t n);

}  // namespace fewapsp
