#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "optia/bitstring.hpp"

namespace optia {

/// A fitness function together with its optimum predicate.
struct Landscape {
    std::function<double(const BitString&)> fitness;
    std::function<bool(const BitString&)> is_optimum;
};

/// Raised when a run asks for an evaluation after its budget is spent.
/// Run loops catch it and record a failed (censored) run.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

class EvaluationCounter {
public:
    EvaluationCounter() = default;
    explicit EvaluationCounter(std::optional<std::uint64_t> budget) : budget_(budget) {}

    std::uint64_t used() const noexcept { return used_; }
    std::optional<std::uint64_t> budget() const noexcept { return budget_; }
    bool exhausted() const noexcept { return budget_ && used_ >= *budget_; }

    /// Accounts one evaluation; throws BudgetExhausted if none remain.
    void charge() {
        if (exhausted()) throw BudgetExhausted();
        ++used_;
    }

private:
    std::uint64_t used_ = 0;
    std::optional<std::uint64_t> budget_;
};

/// The only path by which search code obtains fitness values.
///
/// Every call is charged to the counter and checked against the optimum
/// predicate. Once an optimum has been evaluated, optimum_found() stays true
/// and operators stop at their next check.
class Evaluator {
public:
    using Observer = std::function<void(const BitString&, double)>;

    Evaluator(Landscape landscape, std::optional<std::uint64_t> budget)
        : landscape_(std::move(landscape)), counter_(budget) {}

    double operator()(const BitString& x);

    bool optimum_found() const noexcept { return optimum_.has_value(); }
    /// Fitness of the first evaluated optimum.
    std::optional<double> optimum_value() const noexcept { return optimum_; }
    /// Counter value at which the optimum was first evaluated.
    std::uint64_t optimum_evaluation() const noexcept { return optimum_at_; }

    const EvaluationCounter& counter() const noexcept { return counter_; }
    std::uint64_t used() const noexcept { return counter_.used(); }

    /// Called after each successful evaluation with the point and its value.
    void set_observer(Observer observer) { observer_ = std::move(observer); }

private:
    Landscape landscape_;
    EvaluationCounter counter_;
    std::optional<double> optimum_;
    std::uint64_t optimum_at_ = 0;
    Observer observer_;
};

/// A b-cell: genotype, age and the fitness cached at its last evaluation.
struct Individual {
    BitString genotype;
    std::uint64_t age = 0;
    double fitness = 0.0;

    friend bool operator==(const Individual&, const Individual&) = default;
};

using Population = std::vector<Individual>;

/// Uniformly random age-0 individual; costs one evaluation.
Individual random_individual(std::size_t n, Rng& rng, Evaluator& evaluate);

}  // namespace optia
