#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

using AnyGraph = std::variant<NodeWeightedGraph, EdgeWeightedGraph>;

// Text matrix format: "rows cols", then one line per row of integer / inf /
// -inf / bot tokens. Finite entries must satisfy |v| <= bound.
WeightMatrix read_matrix(std::istream& in, std::int64_t bound = Weight::kInputBound);
void write_matrix(std::ostream& out, const WeightMatrix& m);
WeightMatrix load_matrix(const std::string& path, std::int64_t bound = Weight::kInputBound);
void save_matrix(const std::string& path, const WeightMatrix& m);

// Text graph format: "n m [node-weighted|edge-weighted]" (default
// edge-weighted); node-weighted graphs list n lines "v w" before m lines
// "u v"; edge-weighted graphs list m lines "u v w". Ids are 0-based.
AnyGraph read_graph(std::istream& in, std::int64_t bound = Weight::kInputBound);
void write_graph(std::ostream& out, const NodeWeightedGraph& g);
void write_graph(std::ostream& out, const EdgeWeightedGraph& g);
AnyGraph load_graph(const std::string& path, std::int64_t bound = Weight::kInputBound);
void save_graph(const std::string& path, const NodeWeightedGraph& g);
void save_graph(const std::string& path, const EdgeWeightedGraph& g);

}  // namespace fewapsp
