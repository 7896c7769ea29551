#pragma once

#include <cstdint>

#include "fewapsp/apsp/hop_engine.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// floor(x / 2) on finite entries; +inf and bot become +inf. Halving never
// increases the number of distinct entries in a row or column.
WeightMatrix halve_entries(const WeightMatrix& m);

// Smallest finite entry, or +inf when there is none. Throws ParameterError on -inf.
Weight min_finite_entry(const WeightMatrix& m);
// Largest finite entry, or -inf when there is none.
Weight max_finite_entry(const WeightMatrix& m);

// Subtracts s from every finite entry.
WeightMatrix shift_entries(const WeightMatrix& m, std::int64_t s);

// [i,j] = 0 when some k has both A[i,k] and B[k,j] finite, +inf otherwise.
WeightMatrix support_product(const WeightMatrix& a, const WeightMatrix& b);

// 2 * inner(floor(A/2), floor(B/2)). For nonnegative A, B the true product
// lies in {C, C+1, C+2} entrywise.
WeightMatrix make_scaling_promise(const WeightMatrix& a, const WeightMatrix& b, const MinPlusFn& inner = {});

}  // namespace fewapsp
