#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

namespace fewapsp::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kMismatch = 2, kInputError = 3, kParameterError = 4 };

struct RunParams {
    std::size_t h = 0;      // 0: solver default
    std::size_t delta = 0;  // 0: solver default
    std::size_t k = 1;
    std::size_t d = 0;      // 0: measured from the input
    double eps = 1.0;
    double delta_exp = 1.0;
    double omega = 3.0;
    double sampling = 10.0;
    std::string side = "a-rows";
};

struct RunConfig {
    std::string algo;
    RunParams params;
    std::uint64_t seed = 1;
    std::string graph;
    std::string a;
    std::string b;
    std::string c;
    std::string out;
    std::string timing;
    bool verify = false;
};

void to_json(nlohmann::json& j, const RunParams& p);
void from_json(const nlohmann::json& j, RunParams& p);
void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

RunConfig load_run_config(const std::string& path);
void save_run_config(const std::string& path, const RunConfig& cfg);

}  // namespace fewapsp::cli
