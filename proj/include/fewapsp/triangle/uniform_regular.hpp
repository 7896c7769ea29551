#pragma once

#include <cstddef>

#include "fewapsp/additive/bsg_cover.hpp"
#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Largest r with "(n/d)-regular": floor(n / d), at least 1.
std::size_t regularity_bound(std::size_t n, std::size_t d);

struct UniformRegularStats {
    CoverAudit cover;
    std::size_t structured_calls = 0;
    std::size_t remainder_triples = 0;  // triples inspected in the remainder case
};

// Requires a d-uniform, (n/d)-regular instance (AuditError otherwise).
// BSG-covers the entry sets; covered pairs go through the small-doubling
// solver per part, remainder pairs are expanded through the occurrence lists.
TriangleReport aete_uniform_regular(const TriangleInstance& inst, std::size_t d, std::size_t k, Rng& rng,
                                    const CoverConfig& cfg = {}, UniformRegularStats* stats = nullptr);

}  // namespace fewapsp
