#include "optia/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include "optia/error.hpp"
#include "optia/operators.hpp"
#include "optia/text.hpp"

namespace optia {

namespace {

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

// Linear interpolation between order statistics of sorted data.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

SummaryStats summarize(const std::vector<RunRecord>& records, std::size_t resamples, std::uint64_t seed) {
    if (records.empty()) throw ConfigError("summarize needs at least one record");
    if (resamples < kDefaultResamples) throw ConfigError("bootstrap needs at least 2000 resamples");

    std::vector<double> values;
    for (const auto& r : records)
        if (r.success) values.push_back(static_cast<double>(r.evaluations_used));
    std::sort(values.begin(), values.end());

    SummaryStats s;
    s.runs = records.size();
    s.censored_count = records.size() - values.size();
    s.success_rate = static_cast<double>(values.size()) / static_cast<double>(records.size());
    if (values.empty()) return s;

    const double mean = mean_of(values);
    s.mean_evals = mean;
    s.median_evals = quantile_sorted(values, 0.5);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    s.std_evals = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;

    Rng rng(seed);
    std::vector<double> means(resamples);
    for (auto& m : means) {
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) sum += values[rng.below(values.size())];
        m = sum / static_cast<double>(values.size());
    }
    std::sort(means.begin(), means.end());
    s.ci_low = quantile_sorted(means, 0.025);
    s.ci_high = quantile_sorted(means, 0.975);
    return s;
}

ScalingFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw ConfigError("fit needs at least 3 points");
    for (const auto& [n, y] : points)
        if (!(n > 0.0) || !(y > 0.0)) throw ConfigError("fit needs strictly positive coordinates");

    const auto m = static_cast<double>(points.size());
    double sx = 0, sy = 0;
    for (const auto& [n, y] : points) {
        sx += std::log(n);
        sy += std::log(y);
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [n, y] : points) {
        const double dx = std::log(n) - mx, dy = std::log(y) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw ConfigError("fit needs at least two distinct n");

    ScalingFit fit;
    fit.points = points;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

HypermutationCheck verify_hypermutation_distribution(std::size_t n, std::size_t k, std::uint64_t samples, Rng& rng) {
    if (k < 1 || k > n) throw ConfigError("k out of range: must satisfy 1 <= k <= n");
    if (samples < 1) throw ConfigError("samples out of range: must be positive");

    const BitString target = BitString::prefix_ones(n, k);
    std::uint64_t step = 0, hits = 0;
    Evaluator evaluate(Landscape{[](const BitString&) { return 0.0; }, nullptr}, std::nullopt);
    evaluate.set_observer([&](const BitString& point, double) {
        if (++step == k && point == target) ++hits;
    });

    const Individual parent{BitString::zeros(n), 0, 0.0};
    for (std::uint64_t s = 0; s < samples; ++s) {
        step = 0;
        static_hypermutation(parent, 1.0, CmMode::Strict, rng, evaluate);
    }

    HypermutationCheck check;
    check.empirical = static_cast<double>(hits) / static_cast<double>(samples);
    check.exact = 1.0 / boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k));
    check.pass = std::abs(check.empirical - check.exact) / check.exact <= 0.05;
    return check;
}

AgeingCheck verify_ageing_survivors(std::size_t mu, std::uint64_t trials, Rng& rng) {
    if (mu < 1) throw ConfigError("mu out of range: must be at least 1");
    if (trials < 1) throw ConfigError("trials out of range: must be positive");

    constexpr std::uint64_t tau = 1;
    const Population old(mu, Individual{BitString::zeros(1), tau, 0.0});
    AgeingCheck check;
    check.histogram.assign(mu + 1, 0);
    Population pop;
    for (std::uint64_t t = 0; t < trials; ++t) {
        pop = old;
        hybrid_ageing(pop, tau, mu, rng);
        ++check.histogram[pop.size()];
    }

    check.expected.assign(mu + 1, 0.0);
    if (mu == 1) {
        check.expected[1] = static_cast<double>(trials);
        check.pass = check.histogram[1] == trials;
        return check;
    }
    const boost::math::binomial_distribution<double> law(static_cast<double>(mu), 1.0 / static_cast<double>(mu));
    for (std::size_t s = 0; s <= mu; ++s)
        check.expected[s] = static_cast<double>(trials) * boost::math::pdf(law, static_cast<double>(s));

    // Merge bins left to right until each holds an expected count of at least 5;
    // a short remainder joins the last complete bin.
    std::vector<std::pair<double, double>> bins;  // (observed, expected)
    double obs = 0.0, exp = 0.0;
    for (std::size_t s = 0; s <= mu; ++s) {
        obs += static_cast<double>(check.histogram[s]);
        exp += check.expected[s];
        if (exp >= 5.0) {
            bins.emplace_back(obs, exp);
            obs = exp = 0.0;
        }
    }
    if (exp > 0.0 || obs > 0.0) {
        if (bins.empty()) {
            bins.emplace_back(obs, exp);
        } else {
            bins.back().first += obs;
            bins.back().second += exp;
        }
    }
    if (bins.size() < 2) {
        check.pass = true;
        return check;
    }
    for (const auto& [o, e] : bins) check.chi_square += (o - e) * (o - e) / e;
    check.dof = bins.size() - 1;
    const boost::math::chi_squared_distribution<double> chi(static_cast<double>(check.dof));
    check.critical = boost::math::quantile(boost::math::complement(chi, 0.01));
    check.pass = check.chi_square <= check.critical;
    return check;
}

std::optional<ScalingFit> sweep_fit(const std::vector<SweepRow>& rows) {
    if (rows.size() < 3) return std::nullopt;
    std::vector<std::pair<double, double>> points;
    for (const auto& row : rows) {
        if (row.stats.censored_count > 0 || !row.stats.mean_evals) return std::nullopt;
        points.emplace_back(static_cast<double>(row.n), *row.stats.mean_evals);
    }
    return fit_loglog(points);
}

std::string sweep_table(const std::vector<SweepRow>& rows) {
    auto cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("NA"); };
    std::string out = "n\tmean\tci_low\tci_high\n";
    for (const auto& row : rows)
        out += std::to_string(row.n) + '\t' + cell(row.stats.mean_evals) + '\t' + cell(row.stats.ci_low) + '\t' +
               cell(row.stats.ci_high) + '\n';
    if (const auto fit = sweep_fit(rows))
        out += "# fit slope=" + format_double(fit->slope) + " intercept=" + format_double(fit->intercept) +
               " r_squared=" + format_double(fit->r_squared) + '\n';
    else
        out += "# fit skipped: requires at least 3 sizes, each with success rate 1\n";
    return out;
}

std::string summary_line(const SummaryStats& s) {
    auto cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("NA"); };
    return "runs=" + std::to_string(s.runs) + " success_rate=" + format_double(s.success_rate) +
           " censored=" + std::to_string(s.censored_count) + " mean=" + cell(s.mean_evals) +
           " median=" + cell(s.median_evals) + " std=" + cell(s.std_evals) + " ci95=[" + cell(s.ci_low) + ", " +
           cell(s.ci_high) + "]";
}

}  // namespace optia
