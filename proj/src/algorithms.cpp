#include "optia/algorithms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "optia/error.hpp"

namespace optia {

namespace {

constexpr std::array<std::pair<AlgorithmId, std::string_view>, 8> kAlgorithmNames{{
    {AlgorithmId::OptIA, "optia"},
    {AlgorithmId::OptIAStar, "optia-star"},
    {AlgorithmId::OnePlusOneIAHyp, "ia-hyp"},
    {AlgorithmId::OnePlusOneEA, "ea"},
    {AlgorithmId::RLS1, "rls1"},
    {AlgorithmId::MuRLSpAgeing, "mu-rls-p-ageing"},
    {AlgorithmId::MuRLSAgeingDiv, "mu-rls-ageing-div"},
    {AlgorithmId::MuEAAgeing, "mu-ea-ageing"},
}};

// State shared by all run loops. The population is kept here so that the
// record can be completed after a BudgetExhausted unwinds the loop.
struct RunState {
    RunState(std::size_t n, const Landscape& landscape, std::uint64_t budget, std::uint64_t seed)
        : n(n), rng(seed), evaluate(landscape, budget) {}

    std::size_t n;
    Rng rng;
    Evaluator evaluate;
    Population population;
    std::uint64_t generations = 0;

    bool done() const { return evaluate.optimum_found(); }

    void initialise(std::size_t mu) {
        population.reserve(mu);
        for (std::size_t i = 0; i < mu && !done(); ++i) population.push_back(random_individual(n, rng, evaluate));
    }

    Individual offspring_of(const Individual& parent, BitString child) {
        Individual y{std::move(child), parent.age, 0.0};
        y.fitness = evaluate(y.genotype);
        if (y.fitness > parent.fitness) y.age = 0;
        return y;
    }

    RunRecord record(std::uint64_t budget, std::uint64_t seed) const {
        RunRecord r;
        r.seed = seed;
        r.generations = generations;
        r.success = evaluate.optimum_found();
        if (r.success) {
            r.evaluations_used = evaluate.optimum_evaluation();
            r.best_fitness = *evaluate.optimum_value();
        } else {
            r.evaluations_used = budget;
            r.best_fitness = population.empty() ? 0.0
                                                : std::max_element(population.begin(), population.end(),
                                                                   [](const Individual& a, const Individual& b) {
                                                                       return a.fitness < b.fitness;
                                                                   })
                                                      ->fitness;
        }
        return r;
    }
};

void opt_ia_loop(const AlgorithmConfig& cfg, RunState& s, bool macro) {
    const auto& p = cfg.params;
    s.initialise(p.mu);
    Population offspring;
    while (!s.done()) {
        ++s.generations;
        const Population clones = clone_population(s.population, p.dup);
        offspring.clear();
        for (const auto& clone : clones) {
            if (s.done()) break;
            if (cfg.variation == Variation::Sbm)
                offspring.push_back(s.offspring_of(clone, sbm(clone.genotype, s.rng)));
            else
                offspring.push_back(static_hypermutation(clone, p.c, p.cm_mode, s.rng, s.evaluate).offspring);
        }
        if (macro && s.n >= 2) {
            for (const auto& clone : clones) {
                if (s.done()) break;
                offspring.push_back(hypermacromutation(clone, p.cm_mode, s.rng, s.evaluate).offspring);
            }
        }
        if (s.done()) break;
        hybrid_ageing(s.population, p.tau, p.mu, s.rng);
        hybrid_ageing(offspring, p.tau, p.mu, s.rng);
        s.population = select(std::move(s.population), std::move(offspring), p.mu, p.div, s.n, s.rng, s.evaluate);
        offspring = Population{};
    }
}

template <typename Mutate>
void one_plus_one_loop(RunState& s, Mutate&& mutate) {
    s.initialise(1);
    while (!s.done()) {
        ++s.generations;
        Individual y = mutate(s.population.front());
        if (y.fitness >= s.population.front().fitness) s.population.front() = std::move(y);
    }
}

template <typename Vary>
void mu_plus_one_loop(const AlgorithmConfig& cfg, RunState& s, bool div, Vary&& vary) {
    const auto& p = cfg.params;
    s.initialise(p.mu);
    while (!s.done()) {
        ++s.generations;
        const Individual& parent = s.population[s.rng.below(s.population.size())];
        Population offspring{s.offspring_of(parent, vary(parent.genotype))};
        if (s.done()) break;
        hybrid_ageing(s.population, p.tau, p.mu, s.rng);
        hybrid_ageing(offspring, p.tau, p.mu, s.rng);
        s.population = select(std::move(s.population), std::move(offspring), p.mu, div, s.n, s.rng, s.evaluate);
    }
}

}  // namespace

std::string_view to_string(AlgorithmId id) {
    for (const auto& [aid, name] : kAlgorithmNames)
        if (aid == id) return name;
    return "unknown";
}

AlgorithmId parse_algorithm_id(std::string_view name) {
    for (const auto& [aid, aname] : kAlgorithmNames)
        if (aname == name) return aid;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Variation v) { return v == Variation::Sbm ? "sbm" : "hypermutation"; }

Variation parse_variation(std::string_view name) {
    if (name == "hypermutation") return Variation::Hypermutation;
    if (name == "sbm") return Variation::Sbm;
    throw ConfigError("unknown variation '" + std::string(name) + "'");
}

AlgorithmConfig default_config(AlgorithmId id) {
    AlgorithmConfig cfg;
    cfg.id = id;
    cfg.params.div = id == AlgorithmId::OptIAStar || id == AlgorithmId::MuRLSAgeingDiv;
    return cfg;
}

void validate(const AlgorithmConfig& config) {
    const auto& p = config.params;
    const std::string name(to_string(config.id));
    if (!(p.c > 0.0 && p.c <= 1.0)) throw ConfigError("c out of range: must lie in (0, 1]");
    if (p.mu < 1) throw ConfigError("mu out of range: must be at least 1");
    if (p.dup < 1) throw ConfigError("dup out of range: must be at least 1");
    if (p.tau && *p.tau < 1) throw ConfigError("tau out of range: must be positive or inf");
    if (!(p.p >= 0.0 && p.p < 0.5)) throw ConfigError("p out of range: must lie in [0, 1/2)");
    if (p.p != 0.0 && config.id != AlgorithmId::MuRLSpAgeing)
        throw ConfigError("p is only used by mu-rls-p-ageing");
    if (config.variation == Variation::Sbm && config.id != AlgorithmId::OptIA)
        throw ConfigError("variation sbm is only available for optia");

    switch (config.id) {
        case AlgorithmId::OnePlusOneIAHyp:
            if (p.mu != 1 || p.dup != 1) throw ConfigError(name + " requires mu = 1 and dup = 1");
            break;
        case AlgorithmId::OnePlusOneEA:
        case AlgorithmId::RLS1:
            if (p.mu != 1) throw ConfigError(name + " requires mu = 1");
            break;
        case AlgorithmId::OptIAStar:
        case AlgorithmId::MuRLSAgeingDiv:
            if (!p.div) throw ConfigError(name + " requires div = 1");
            break;
        case AlgorithmId::MuRLSpAgeing:
        case AlgorithmId::MuEAAgeing:
            if (p.div) throw ConfigError(name + " requires div = 0");
            break;
        case AlgorithmId::OptIA:
            break;
    }
}

RunRecord run_on(const AlgorithmConfig& config, std::size_t n, const Landscape& landscape, std::uint64_t budget,
                 std::uint64_t seed) {
    RunState s(n, landscape, budget, seed);
    const auto& p = config.params;
    try {
        switch (config.id) {
            case AlgorithmId::OptIA: opt_ia_loop(config, s, false); break;
            case AlgorithmId::OptIAStar: opt_ia_loop(config, s, true); break;
            case AlgorithmId::OnePlusOneIAHyp:
                one_plus_one_loop(s, [&](const Individual& x) {
                    return static_hypermutation(x, p.c, p.cm_mode, s.rng, s.evaluate).offspring;
                });
                break;
            case AlgorithmId::OnePlusOneEA:
                one_plus_one_loop(s, [&](const Individual& x) { return s.offspring_of(x, sbm(x.genotype, s.rng)); });
                break;
            case AlgorithmId::RLS1:
                one_plus_one_loop(s,
                                  [&](const Individual& x) { return s.offspring_of(x, rls_one(x.genotype, s.rng)); });
                break;
            case AlgorithmId::MuRLSpAgeing:
                mu_plus_one_loop(config, s, false, [&](const BitString& x) { return rls_p(x, p.p, s.rng); });
                break;
            case AlgorithmId::MuRLSAgeingDiv:
                mu_plus_one_loop(config, s, true, [&](const BitString& x) { return rls_one(x, s.rng); });
                break;
            case AlgorithmId::MuEAAgeing:
                mu_plus_one_loop(config, s, false, [&](const BitString& x) { return sbm(x, s.rng); });
                break;
        }
    } catch (const BudgetExhausted&) {
    }
    return s.record(budget, seed);
}

RunRecord run(const AlgorithmConfig& config, const BenchmarkSpec& benchmark, std::uint64_t budget, std::uint64_t seed) {
    validate(config);
    validate(benchmark);
    if (budget < 1) throw ConfigError("budget out of range: must be at least 1");
    return run_on(config, benchmark.n, make_landscape(benchmark), budget, seed);
}

}  // namespace optia
