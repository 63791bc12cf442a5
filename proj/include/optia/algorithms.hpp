#pragma once

#include <cstdint>
#include <string_view>

#include "optia/benchmarks.hpp"
#include "optia/operators.hpp"

namespace optia {

enum class AlgorithmId {
    OptIA,
    OptIAStar,
    OnePlusOneIAHyp,
    OnePlusOneEA,
    RLS1,
    MuRLSpAgeing,
    MuRLSAgeingDiv,
    MuEAAgeing,
};

std::string_view to_string(AlgorithmId id);
AlgorithmId parse_algorithm_id(std::string_view name);

/// Variation operator of OptIA. Sbm keeps cloning, ageing and selection but
/// replaces static hypermutation with standard bit mutation.
enum class Variation { Hypermutation, Sbm };

std::string_view to_string(Variation v);
Variation parse_variation(std::string_view name);

struct AlgorithmConfig {
    AlgorithmId id = AlgorithmId::OptIA;
    OperatorParams params;
    Variation variation = Variation::Hypermutation;

    friend bool operator==(const AlgorithmConfig&, const AlgorithmConfig&) = default;
};

/// Parameters an algorithm fixes by construction (div for OptIAStar and
/// MuRLSAgeingDiv); everything else keeps the OperatorParams defaults.
AlgorithmConfig default_config(AlgorithmId id);

/// Throws ConfigError naming the violated constraint.
void validate(const AlgorithmConfig& config);

struct RunRecord {
    bool success = false;
    std::uint64_t evaluations_used = 0;  // budget when unsuccessful
    std::uint64_t generations = 0;
    double best_fitness = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// One seeded run. Validates both configs before evaluating anything.
RunRecord run(const AlgorithmConfig& config, const BenchmarkSpec& benchmark, std::uint64_t budget, std::uint64_t seed);

// Same as run() for an already validated pair, with the landscape supplied
// by the caller. Used by tests that instrument the fitness function.
RunRecord run_on(const AlgorithmConfig& config, std::size_t n, const Landscape& landscape, std::uint64_t budget,
                 std::uint64_t seed);

}  // namespace optia
