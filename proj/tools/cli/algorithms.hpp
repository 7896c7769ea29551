#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "fewapsp/core/io.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp::cli {

enum class Problem { apsp, minplus, triangle };

struct Inputs {
    std::optional<AnyGraph> graph;
    WeightMatrix a;
    WeightMatrix b;
    WeightMatrix c;
};

const std::vector<std::string>& algorithm_names();
// Throws ParameterError for unknown ids.
Problem problem_of(const std::string& algo);
std::string to_string(Problem p);

// Loads the files the algorithm's problem needs.
Inputs load_inputs(const RunConfig& cfg);

// Distance matrix, min-plus product, or 0/1 exact-triangle answers.
WeightMatrix run_algorithm(const RunConfig& cfg, const Inputs& in);
// Oracle answer of the same shape.
WeightMatrix reference_result(Problem p, const Inputs& in);

std::size_t instance_size(Problem p, const Inputs& in);
// The promise d used by the run: cfg.params.d, or measured when 0.
std::size_t effective_d(const RunConfig& cfg, Problem p, const Inputs& in);

}  // namespace fewapsp::cli
