#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fewapsp::cli {

struct BenchArgs {
    std::string suite;  // kernels, products, apsp, triangle
    std::vector<std::size_t> sizes{32, 64};
    std::vector<std::uint64_t> seeds{1, 2, 3};
    std::size_t d = 4;
    std::string out;      // table as JSON-lines
    std::string records;  // one timing record per run
    std::size_t jobs = 1;
};

struct BenchRecord {
    std::string algo;
    std::size_t n = 0;
    std::size_t d = 0;
    std::uint64_t seed = 0;
    std::int64_t wall_ns = 0;
    std::uint64_t ops = 0;
    bool ok = false;
};

struct BenchRow {
    std::string algo;
    std::size_t n = 0;
    std::size_t d = 0;
    std::int64_t median_ns = 0;
    std::uint64_t median_ops = 0;
    std::size_t runs = 0;
    bool ok = false;  // every run matched the reference
};

const std::vector<std::string>& bench_algorithms(const std::string& suite);

// One row per (size, algorithm), in that order.
std::vector<BenchRow> run_bench(const BenchArgs& args, std::vector<BenchRecord>* records = nullptr);

int cmd_bench(const BenchArgs& args, std::ostream& out);

}  // namespace fewapsp::cli
