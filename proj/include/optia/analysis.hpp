#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "optia/algorithms.hpp"
#include "optia/rng.hpp"

namespace optia {

/// Statistics over the successful runs of an experiment. Censored runs
/// (budget exhausted) only enter success_rate and censored_count; the
/// evaluation statistics are absent when nothing succeeded.
struct SummaryStats {
    double success_rate = 0.0;
    std::size_t runs = 0;
    std::size_t censored_count = 0;
    std::optional<double> mean_evals, median_evals, std_evals;
    std::optional<double> ci_low, ci_high;  // percentile bootstrap, 95%
};

inline constexpr std::size_t kDefaultResamples = 2000;
inline constexpr std::uint64_t kDefaultBootstrapSeed = 0x0b0075;

/// The bootstrap resamples the sorted successful values, so the result
/// does not depend on record order. resamples must be at least 2000.
SummaryStats summarize(const std::vector<RunRecord>& records, std::size_t resamples = kDefaultResamples,
                       std::uint64_t seed = kDefaultBootstrapSeed);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;  // natural log of the prefactor
    double r_squared = 0.0;
    std::vector<std::pair<double, double>> points;  // (n, mean evaluations)
};

/// Least squares of ln(y) on ln(n). Needs at least three points with
/// positive coordinates and two distinct n; throws ConfigError otherwise.
ScalingFit fit_loglog(const std::vector<std::pair<double, double>>& points);

struct HypermutationCheck {
    double empirical = 0.0;
    double exact = 0.0;
    bool pass = false;
};

/// Frequency with which the k-th point of a strict hypermutation walk
/// (c = 1, constant fitness, from 0^n) equals 1^k 0^(n-k), against
/// 1/binom(n, k). Passes within 5% relative error.
HypermutationCheck verify_hypermutation_distribution(std::size_t n, std::size_t k, std::uint64_t samples, Rng& rng);

struct AgeingCheck {
    std::vector<std::uint64_t> histogram;  // histogram[s] = trials with s survivors
    std::vector<double> expected;          // trials * Binomial(mu, 1/mu) pmf
    double chi_square = 0.0;
    double critical = 0.0;                 // 0.99 quantile, 0 when no test is possible
    std::size_t dof = 0;
    bool pass = false;
};

/// Ages a population of mu individuals that are all past tau once per
/// trial and tests the survivor counts against Binomial(mu, 1/mu) at
/// significance 0.01. Bins with expected count below 5 are pooled with
/// their neighbours. With mu = 1 nobody may die.
AgeingCheck verify_ageing_survivors(std::size_t mu, std::uint64_t trials, Rng& rng);

struct SweepRow {
    std::size_t n = 0;
    SummaryStats stats;
};

/// Tab-separated "n mean ci_low ci_high" table followed by one "# fit ..."
/// line: the fit when every n succeeded in all runs, a skip notice otherwise.
std::string sweep_table(const std::vector<SweepRow>& rows);

/// Fit over the rows, or nullopt when some n has censored runs or fewer
/// than three rows exist.
std::optional<ScalingFit> sweep_fit(const std::vector<SweepRow>& rows);

/// One-line human-readable summary.
std::string summary_line(const SummaryStats& stats);

}  // namespace optia
