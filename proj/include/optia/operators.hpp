#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "optia/bitstring.hpp"
#include "optia/evaluator.hpp"
#include "optia/rng.hpp"

namespace optia {

/// When a hypermutation walk stops early.
///   None      - no early stop; only the final point is evaluated.
///   Strict    - stop at the first point strictly fitter than the parent.
///   NonStrict - stop at the first point at least as fit as the parent.
enum class CmMode { None, Strict, NonStrict };

std::string_view to_string(CmMode mode);
CmMode parse_cm_mode(std::string_view name);

/// Ageing threshold; std::nullopt means unbounded (no ageing deaths).
using AgeLimit = std::optional<std::uint64_t>;

struct OperatorParams {
    double c = 1.0;  // mutation potential factor, M = ceil(c * n)
    CmMode cm_mode = CmMode::NonStrict;
    std::size_t dup = 1;
    AgeLimit tau;
    std::size_t mu = 1;
    double p = 0.0;  // copy probability of rls_p
    bool div = false;

    friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

/// M = ceil(c * n) clamped to [1, n].
std::size_t mutation_potential(double c, std::size_t n);

struct MutationResult {
    Individual offspring;        // genotype, inherited-or-reset age, evaluated fitness
    std::uint64_t evals_used = 0;
    bool constructive = false;   // the walk stopped because the cm_mode condition held
};

/// Static hypermutation: flips up to M distinct, uniformly chosen positions
/// one after another. With Strict/NonStrict every intermediate point is
/// evaluated and the walk halts at the first constructive one; with None
/// all M positions are flipped and only the end point is evaluated.
/// The offspring gets age 0 if strictly fitter than the parent, otherwise
/// the parent's age. The walk also halts when the evaluator reports an optimum.
MutationResult static_hypermutation(const Individual& parent, double c, CmMode mode, Rng& rng, Evaluator& evaluate);

/// Same walk with a caller-supplied flip order (distinct positions).
MutationResult hypermutate_along(const Individual& parent, std::span<const std::size_t> order, CmMode mode,
                                 Evaluator& evaluate);

/// Contiguous-region mutation: draws i uniformly from [0, n-2], then j from
/// [i+1, n-1], and flips positions i..j in order under the same stopping
/// and age rules as static_hypermutation. Requires n >= 2.
MutationResult hypermacromutation(const Individual& parent, CmMode mode, Rng& rng, Evaluator& evaluate);

/// Hypermacromutation over the given region [first, last] (0-based, inclusive).
MutationResult hypermacromutation_range(const Individual& parent, std::size_t first, std::size_t last, CmMode mode,
                                        Evaluator& evaluate);

/// Standard bit mutation with rate 1/n. Not evaluated here.
BitString sbm(const BitString& x, Rng& rng);

/// Flips exactly one uniformly chosen bit.
BitString rls_one(const BitString& x, Rng& rng);

/// A copy of x with probability p, otherwise rls_one(x).
BitString rls_p(const BitString& x, double p, Rng& rng);

/// dup copies of each individual, in order; ages and fitness preserved.
Population clone_population(const Population& population, std::size_t dup);

/// Increments every age, then removes each individual older than tau with
/// probability 1 - 1/mu. Survivors keep their relative order.
void hybrid_ageing(Population& population, AgeLimit tau, std::size_t mu, Rng& rng);

/// (mu + lambda) selection over parents and offspring.
///
/// With div, offspring whose genotype equals some parent's are discarded
/// first. While more than mu remain, a lowest-fitness individual is removed
/// with ties broken uniformly at random. If fewer than mu remain, fresh
/// random age-0 individuals are added (each costing one evaluation); filling
/// stops early once an optimum has been evaluated. n is the genotype length
/// used for fresh individuals.
Population select(Population parents, Population offspring, std::size_t mu, bool div, std::size_t n, Rng& rng,
                  Evaluator& evaluate);

}  // namespace optia
