#include "cli/config.hpp"

#include <fstream>

#include "fewapsp/core/error.hpp"

namespace fewapsp::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RunParams, h, delta, k, d, eps, delta_exp, omega, sampling, side)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RunConfig, algo, params, seed, graph, a, b, c, out, timing, verify)

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path);
    try {
        return nlohmann::json::parse(in).get<RunConfig>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad config " + path + ": " + e.what());
    }
}

void save_run_config(const std::string& path, const RunConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write config " + path);
    out << nlohmann::json(cfg).dump(2) << "\n";
}

}  // namespace fewapsp::cli
