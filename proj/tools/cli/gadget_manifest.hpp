#pragma once

#include <string>

#include <json.hpp>

#include "fewapsp/reductions/gadgets.hpp"

namespace fewapsp::cli {

// Writes graph.txt next to the returned manifest fields.
nlohmann::json save_gadget(const std::string& dir, const EdgeGadget& g);
nlohmann::json save_gadget(const std::string& dir, const NodeGadget& g);

// Decodes a distance matrix of the gadget described by manifest.json in dir.
WeightMatrix decode_saved_gadget(const std::string& manifest_path, const WeightMatrix& dist);

}  // namespace fewapsp::cli
