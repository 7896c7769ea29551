#pragma once

#include <cstddef>
#include <vector>

#include "fewapsp/additive/sumset.hpp"
#include "fewapsp/triangle/instance.hpp"

namespace fewapsp {

// Splits an rR-regular instance into R^6 r-regular ones: the t-th occurrence
// of a value in its row goes to row part floor(t / r), then likewise by column.
std::vector<TriangleInstance> regularize_naive(const TriangleInstance& inst, std::size_t r, std::size_t big_r);

struct RegularizeConfig {
    PopularSumsConfig popular;
    std::size_t max_depth = 64;
};

struct RegularizeStats {
    double rho = 1.0;
    std::size_t calls = 0;
    std::size_t max_depth = 0;
    std::size_t uniformized = 0;  // instances produced by uniformization
    std::size_t pieces = 0;       // regular pieces before the naive split
};

struct RegularPiece {
    TriangleInstance inst;  // carries its rotation relative to the input
    std::size_t d = 0;      // d-uniform and floor(n/d)-regular
};

struct RegularizeResult {
    std::vector<RegularPiece> pieces;
    std::vector<Triple> triples;  // sorted, in the input's coordinates
    RegularizeStats stats;
};

// The input's `side` carries at most d distinct entries per line.
RegularizeResult regularize(const TriangleInstance& inst, std::size_t d, std::size_t delta, double epsilon,
                            PromiseSide side, Rng& rng, const RegularizeConfig& cfg = {});

}  // namespace fewapsp
