#include "optia/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "optia/error.hpp"

namespace optia {

namespace {

bool is_constructive(CmMode mode, double value, double parent_value) {
    return mode == CmMode::Strict ? value > parent_value : value >= parent_value;
}

// Draws positions not yet flipped (those where `current` still agrees with
// `parent`), uniformly among the remaining ones. Rejection sampling is used
// while at most half the positions are flipped; after that the remaining
// positions are listed once and drawn by a partial Fisher-Yates shuffle.
class DistinctPositions {
public:
    DistinctPositions(const BitString& parent, Rng& rng) : parent_(parent), rng_(rng), n_(parent.size()) {}

    std::size_t operator()(const BitString& current) {
        if (2 * taken_ < n_) {
            ++taken_;
            while (true) {
                const auto pos = static_cast<std::size_t>(rng_.below(n_));
                if (current[pos] == parent_[pos]) return pos;
            }
        }
        if (!listed_) {
            remaining_.clear();
            for (std::size_t i = 0; i < n_; ++i)
                if (current[i] == parent_[i]) remaining_.push_back(static_cast<std::uint32_t>(i));
            listed_ = true;
            cursor_ = 0;
        }
        ++taken_;
        const auto j = cursor_ + static_cast<std::size_t>(rng_.below(remaining_.size() - cursor_));
        std::swap(remaining_[cursor_], remaining_[j]);
        return remaining_[cursor_++];
    }

private:
    const BitString& parent_;
    Rng& rng_;
    std::size_t n_;
    std::size_t taken_ = 0;
    bool listed_ = false;
    std::size_t cursor_ = 0;
    // Scratch storage only; fully rebuilt before use, so it carries no state between calls.
    static thread_local std::vector<std::uint32_t> remaining_;
};

thread_local std::vector<std::uint32_t> DistinctPositions::remaining_;

template <typename NextPosition>
MutationResult walk(const Individual& parent, std::size_t steps, CmMode mode, NextPosition&& next,
                    Evaluator& evaluate) {
    MutationResult result{parent, 0, false};
    BitString& y = result.offspring.genotype;
    double value = parent.fitness;
    if (mode == CmMode::None) {
        for (std::size_t s = 0; s < steps; ++s) y.flip(next(y));
        value = evaluate(y);
        result.evals_used = 1;
    } else {
        for (std::size_t s = 0; s < steps; ++s) {
            y.flip(next(y));
            value = evaluate(y);
            ++result.evals_used;
            if (is_constructive(mode, value, parent.fitness)) {
                result.constructive = true;
                break;
            }
            if (evaluate.optimum_found()) break;
        }
    }
    result.offspring.fitness = value;
    result.offspring.age = value > parent.fitness ? 0 : parent.age;
    return result;
}

}  // namespace

std::string_view to_string(CmMode mode) {
    switch (mode) {
        case CmMode::None: return "none";
        case CmMode::Strict: return "strict";
        case CmMode::NonStrict: return "nonstrict";
    }
    return "unknown";
}

CmMode parse_cm_mode(std::string_view name) {
    if (name == "none") return CmMode::None;
    if (name == "strict") return CmMode::Strict;
    if (name == "nonstrict") return CmMode::NonStrict;
    throw ConfigError("unknown cm-mode '" + std::string(name) + "'");
}

std::size_t mutation_potential(double c, std::size_t n) {
    const auto m = static_cast<std::size_t>(std::ceil(c * static_cast<double>(n) - 1e-9));
    return std::clamp<std::size_t>(m, 1, n);
}

MutationResult static_hypermutation(const Individual& parent, double c, CmMode mode, Rng& rng, Evaluator& evaluate) {
    const std::size_t steps = mutation_potential(c, parent.genotype.size());
    DistinctPositions next(parent.genotype, rng);
    return walk(parent, steps, mode, next, evaluate);
}

MutationResult hypermutate_along(const Individual& parent, std::span<const std::size_t> order, CmMode mode,
                                 Evaluator& evaluate) {
    std::size_t i = 0;
    return walk(parent, order.size(), mode, [&](const BitString&) { return order[i++]; }, evaluate);
}

MutationResult hypermacromutation(const Individual& parent, CmMode mode, Rng& rng, Evaluator& evaluate) {
    const std::size_t n = parent.genotype.size();
    if (n < 2) throw ConfigError("hypermacromutation requires n >= 2");
    const auto first = static_cast<std::size_t>(rng.below(n - 1));
    const auto last = static_cast<std::size_t>(rng.between(first + 1, n - 1));
    return hypermacromutation_range(parent, first, last, mode, evaluate);
}

MutationResult hypermacromutation_range(const Individual& parent, std::size_t first, std::size_t last, CmMode mode,
                                        Evaluator& evaluate) {
    std::size_t pos = first;
    return walk(parent, last - first + 1, mode, [&](const BitString&) { return pos++; }, evaluate);
}

BitString sbm(const BitString& x, Rng& rng) {
    BitString y = x;
    const std::size_t n = x.size();
    const double rate = 1.0 / static_cast<double>(n);
    std::uint64_t pos = rng.geometric(rate);
    while (pos < n) {
        y.flip(static_cast<std::size_t>(pos));
        pos += 1 + rng.geometric(rate);
    }
    return y;
}

BitString rls_one(const BitString& x, Rng& rng) {
    BitString y = x;
    y.flip(static_cast<std::size_t>(rng.below(x.size())));
    return y;
}

BitString rls_p(const BitString& x, double p, Rng& rng) {
    if (p > 0.0 && rng.bernoulli(p)) return x;
    return rls_one(x, rng);
}

Population clone_population(const Population& population, std::size_t dup) {
    Population clones;
    clones.reserve(population.size() * dup);
    for (const auto& ind : population)
        for (std::size_t i = 0; i < dup; ++i) clones.push_back(ind);
    return clones;
}

void hybrid_ageing(Population& population, AgeLimit tau, std::size_t mu, Rng& rng) {
    const double p_die = mu > 1 ? 1.0 - 1.0 / static_cast<double>(mu) : 0.0;
    std::erase_if(population, [&](Individual& ind) {
        ++ind.age;
        return tau && ind.age > *tau && p_die > 0.0 && rng.uniform() < p_die;
    });
}

Population select(Population parents, Population offspring, std::size_t mu, bool div, std::size_t n, Rng& rng,
                  Evaluator& evaluate) {
    const std::size_t parent_count = parents.size();
    Population pool = std::move(parents);
    pool.reserve(parent_count + offspring.size());
    for (auto& child : offspring) {
        if (div && std::any_of(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(parent_count),
                               [&](const Individual& p) { return p.genotype == child.genotype; }))
            continue;
        pool.push_back(std::move(child));
    }

    std::vector<std::size_t> lowest;
    while (pool.size() > mu) {
        double worst = pool.front().fitness;
        for (const auto& ind : pool) worst = std::min(worst, ind.fitness);
        lowest.clear();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool[i].fitness == worst) lowest.push_back(i);
        const std::size_t victim = lowest.size() == 1 ? lowest[0] : lowest[rng.below(lowest.size())];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(victim));
    }

    while (pool.size() < mu && !evaluate.optimum_found()) pool.push_back(random_individual(n, rng, evaluate));
    return pool;
}

}  // namespace optia
