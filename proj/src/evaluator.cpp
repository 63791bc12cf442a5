#include "optia/evaluator.hpp"

#include "optia/rng.hpp"

namespace optia {

double Evaluator::operator()(const BitString& x) {
    counter_.charge();
    const double value = landscape_.fitness(x);
    if (!optimum_ && landscape_.is_optimum && landscape_.is_optimum(x)) {
        optimum_ = value;
        optimum_at_ = counter_.used();
    }
    if (observer_) observer_(x, value);
    return value;
}

Individual random_individual(std::size_t n, Rng& rng, Evaluator& evaluate) {
    Individual ind{BitString::random(n, rng), 0, 0.0};
    ind.fitness = evaluate(ind.genotype);
    return ind;
}

}  // namespace optia
