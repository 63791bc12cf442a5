#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace optia {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of run `run_index` within an experiment seeded by `master_seed`:
/// splitmix64(master_seed + (run_index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept;

/// Deterministic random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. All derived draws (bounded integers, reals, Bernoulli trials) are
/// computed here rather than through <random> distributions, which are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Number of failures before the first success of Bernoulli(p) trials, 0 < p <= 1.
    std::uint64_t geometric(double p);

    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = below(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace optia
