#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "optia/algorithms.hpp"
#include "optia/benchmarks.hpp"

namespace optia {

struct ExperimentConfig {
    AlgorithmConfig algorithm;
    BenchmarkSpec benchmark;
    std::uint64_t budget = 1;
    std::uint64_t runs = 1;
    std::uint64_t master_seed = 0;
    std::size_t parallelism = 1;  // worker threads; never affects results

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<RunRecord> records;  // indexed by run

    friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

void validate(const ExperimentConfig& config);

/// Run i uses seed derive_seed(master_seed, i). Records come back in run
/// order whatever the parallelism.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Persistence. The JSON document holds {config, records}; parallelism is an
// execution detail and is not written. The CSV holds the records only.
std::string to_json(const ExperimentResult& result);
ExperimentResult from_json(const std::string& text);
std::string to_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> from_csv(const std::string& text);

/// Writes JSON or CSV according to the extension (.json / .csv).
/// Throws std::runtime_error when the file cannot be written.
void save_results(const ExperimentResult& result, const std::filesystem::path& path);
/// Reads a JSON results file. Throws ParseError (with line or field) on
/// malformed content and std::runtime_error when unreadable.
ExperimentResult load_results(const std::filesystem::path& path);

}  // namespace optia
