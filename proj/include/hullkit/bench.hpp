#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hullkit/generators.hpp"

namespace hullkit {

enum class Algo { Det, Rs, Reference };

std::string algo_name(Algo a);

struct BenchConfig {
    Distribution dist;
    std::vector<std::size_t> sizes;
    std::vector<Algo> algos;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    // Mirrors the experimental setup: entropy in the inputs stands in for
    // the permutation inside the ray-shooting scan.
    bool shuffle_rayshoot = false;
    unsigned workers = 1;
};

struct BenchRecord {
    std::string distribution;
    std::size_t n = 0;
    std::string algorithm;
    std::size_t trials = 0;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
    double mean_orientation_tests = 0.0;
    double mean_hull_size = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// One record per (size, algorithm). Every trial gets a fresh point set from
// seed base_seed + trial; only the hull computation is timed, after one
// untimed warm-up run per pair. Counter columns are platform-independent and
// reproducible; timing columns are not. Worker threads may overlap point
// generation, but timed regions are serialized.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg,
                                   std::ostream* log = nullptr);

// Header exactly:
// distribution,n,algorithm,trials,mean_ms,stddev_ms,mean_orientation_tests,mean_hull_size,seed
// LF line endings, shortest round-trip decimals.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);
void write_csv_file(std::span<const BenchRecord> records,
                    const std::string& path);

// Strict parser for the format above; inverse of write_csv.
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace hullkit
