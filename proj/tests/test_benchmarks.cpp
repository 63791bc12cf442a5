#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "optia/benchmarks.hpp"
#include "optia/error.hpp"
#include "optia/rng.hpp"

using namespace optia;

namespace {

// Reference implementations written directly over '0'/'1' strings.
std::size_t ones_of(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '1')); }

std::string path_point(std::size_t n, std::size_t ones) { return std::string(ones, '1') + std::string(n - ones, '0'); }

std::size_t ref_min_sp_distance(const std::string& s) {
    const std::size_t n = s.size();
    std::size_t best = n;
    for (std::size_t i = (n + 1) / 2; i < n; ++i) {
        const auto p = path_point(n, i);
        std::size_t d = 0;
        for (std::size_t j = 0; j < n; ++j) d += s[j] != p[j];
        best = std::min(best, d);
    }
    return best;
}

double ref_hyper_trap(const std::string& s, double gamma) {
    const std::size_t n = s.size(), ones = ones_of(s);
    const double nn = static_cast<double>(n);
    if (ones == n) return std::pow(nn, 4);
    if (ones * 4 >= 3 * n && static_cast<double>(ref_min_sp_distance(s)) >= std::ceil(gamma * nn - 1e-9))
        return std::pow(nn, 3);
    for (std::size_t i = n / 2; i < n; ++i)
        if (s == path_point(n, i)) return nn * nn * static_cast<double>(ones);
    if (ones * 2 == n) {
        double sum = 0;
        for (std::size_t i = 1; i <= n; ++i) sum += static_cast<double>(n - i) * (s[i - 1] == '1');
        return nn / 2 + sum / nn;
    }
    if (ones * 2 < n) return static_cast<double>(ones);
    return static_cast<double>(n - ones);
}

double ref_hidden_path(const std::string& s, double eps) {
    const std::size_t n = s.size(), zeros = n - ones_of(s);
    const double nn = static_cast<double>(n), logn = std::log2(nn);
    if (zeros == n) return 0;
    for (std::size_t k = 5; static_cast<double>(k) <= logn + 1; ++k)
        if (s == path_point(n, n - k)) return nn - eps + eps * static_cast<double>(k) / logn;
    if (zeros == n - 1) return nn;
    if (zeros == 5) {
        double last = 0;
        for (std::size_t i = n - 5; i < n; ++i) last += s[i] == '0';
        return nn - eps + last / nn;
    }
    if (zeros < 5) return 0;
    return static_cast<double>(zeros);
}

std::string with_ones(std::size_t n, std::size_t ones, Rng& rng) {
    std::string s = path_point(n, ones);
    rng.shuffle(s.begin(), s.end());
    return s;
}

double f(const BenchmarkSpec& spec, const std::string& s) { return evaluate(spec, BitString::parse(s)); }

}  // namespace

TEST_CASE("onemax, zeromax and leadingones examples") {
    CHECK(onemax(BitString::ones(7)) == 7);
    CHECK(onemax(BitString::zeros(7)) == 0);
    CHECK(onemax(BitString::parse("110100")) == 3);
    CHECK(zeromax(BitString::zeros(7)) == 7);
    CHECK(zeromax(BitString::ones(7)) == 0);
    CHECK(zeromax(BitString::parse("1001")) == 2);
    CHECK(leadingones(BitString::ones(9)) == 9);
    CHECK(leadingones(BitString::parse("0111111")) == 0);
    CHECK(leadingones(BitString::parse("1101")) == 2);
}

TEST_CASE("jump examples and range") {
    Rng rng(1);
    const auto spec = BenchmarkSpec::jump(50, 10);
    CHECK(f(spec, with_ones(50, 40, rng)) == 50);
    CHECK(f(spec, std::string(50, '1')) == 60);
    CHECK(f(spec, with_ones(50, 45, rng)) == 5);
    for (std::size_t ones = 0; ones <= 50; ++ones) {
        const double v = f(spec, with_ones(50, ones, rng));
        CHECK(v >= 0);
        CHECK(v <= 60);
        if (ones < 50) CHECK(v < 60);
    }
}

TEST_CASE("cliff examples and per-branch monotonicity") {
    Rng rng(2);
    const auto spec = BenchmarkSpec::cliff(50, 10);
    CHECK(f(spec, with_ones(50, 40, rng)) == 40);
    CHECK(f(spec, with_ones(50, 41, rng)) == 31.5);
    CHECK(f(spec, std::string(50, '1')) == 40.5);
    for (std::size_t ones = 1; ones <= 50; ++ones) {
        if (ones == 41) continue;
        CHECK(f(spec, with_ones(50, ones, rng)) > f(spec, with_ones(50, ones - 1, rng)));
    }
    double best = -1;
    std::size_t argbest = 0;
    for (std::size_t ones = 0; ones <= 50; ++ones) {
        const double v = f(spec, with_ones(50, ones, rng));
        if (v > best) best = v, argbest = ones;
    }
    CHECK(argbest == 50);
}

TEST_CASE("simple trap examples and defaults") {
    Rng rng(3);
    const auto spec = BenchmarkSpec::simple_trap(50);
    CHECK(spec.z == 12);
    CHECK(spec.b == 37);
    CHECK(spec.a == 74);
    CHECK(f(spec, std::string(50, '0')) == doctest::Approx(74));
    CHECK(f(spec, with_ones(50, 12, rng)) == doctest::Approx(0));
    CHECK(f(spec, std::string(50, '1')) == doctest::Approx(37));
    for (double a : {55.5, 60.0, 74.0}) {
        const auto s = BenchmarkSpec::simple_trap(50, 12, a, 37);
        CHECK(f(s, std::string(50, '0')) > f(s, std::string(50, '1')));
    }
}

TEST_CASE("hidden path examples") {
    const auto spec = BenchmarkSpec::hidden_path(64);
    CHECK(f(spec, path_point(64, 59)) == doctest::Approx(64 - 0.5 + 0.5 * 5 / 6.0));
    CHECK(f(spec, path_point(64, 59)) == doctest::Approx(63.9167).epsilon(1e-5));
    std::string g(64, '1');
    for (int pos : {1, 61, 62, 63, 64}) g[static_cast<std::size_t>(pos - 1)] = '0';
    CHECK(f(spec, g) == doctest::Approx(63.5625));
    Rng rng(4);
    for (int rep = 0; rep < 10; ++rep) CHECK(f(spec, with_ones(64, 1, rng)) == 64);
    CHECK(f(spec, std::string(64, '0')) == 0);
}

TEST_CASE("hidden path agrees with the reference on random and structured points") {
    Rng rng(5);
    for (std::size_t n : {32u, 64u}) {
        const auto spec = BenchmarkSpec::hidden_path(n, 0.3);
        for (std::size_t ones = 0; ones <= n; ++ones)
            for (int rep = 0; rep < 20; ++rep) {
                const auto s = with_ones(n, ones, rng);
                CHECK(f(spec, s) == doctest::Approx(ref_hidden_path(s, 0.3)));
            }
        for (std::size_t ones = 0; ones <= n; ++ones) CHECK(f(spec, path_point(n, ones)) == doctest::Approx(ref_hidden_path(path_point(n, ones), 0.3)));
    }
}

TEST_CASE("hidden path maximum sits at the optimum (n = 32 slices)") {
    const std::size_t n = 32;
    const auto spec = BenchmarkSpec::hidden_path(n);
    const double opt = f(spec, path_point(n, n - 6));
    CHECK(is_optimum(spec, BitString::parse(path_point(n, n - 6))));
    CHECK(optimum_value(spec) == doctest::Approx(opt));
    for (std::size_t k = 5; k < 6; ++k) CHECK(f(spec, path_point(n, n - k)) < opt);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s(n, '0');
        s[i] = '1';
        CHECK(f(spec, s) < opt);
    }
    Rng rng(6);
    for (int rep = 0; rep < 5000; ++rep) {
        const auto s = with_ones(n, n - 5, rng);
        CHECK(f(spec, s) < opt);
    }
    for (std::size_t ones = 0; ones <= n; ++ones)
        for (int rep = 0; rep < 50; ++rep) {
            const auto s = with_ones(n, ones, rng);
            if (s != path_point(n, n - 6)) CHECK(f(spec, s) < opt);
        }
}

TEST_CASE("hyper trap examples") {
    const auto spec = BenchmarkSpec::hyper_trap(16, 0.125);
    CHECK(f(spec, std::string(16, '1')) == 65536);
    CHECK(f(spec, path_point(16, 8)) == 2048);
    CHECK(f(spec, std::string(8, '0') + std::string(8, '1')) == doctest::Approx(9.75));
    CHECK(f(spec, "00" + std::string(14, '1')) == 4096);
}

TEST_CASE("min_sp_distance examples and reference") {
    CHECK(min_sp_distance(BitString::parse(path_point(16, 12))) == 0);
    CHECK(min_sp_distance(BitString::ones(16)) == 1);
    CHECK(min_sp_distance(BitString::zeros(16)) == 8);
    Rng rng(7);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto s = with_ones(40, rng.below(41), rng);
        CHECK(min_sp_distance(BitString::parse(s)) == ref_min_sp_distance(s));
    }
}

TEST_CASE("hyper trap on all 2^16 points: reference agreement and a unique optimum") {
    const std::size_t n = 16;
    const auto spec = BenchmarkSpec::hyper_trap(n);
    std::size_t at_top = 0;
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((v >> i) & 1u) s[i] = '1';
        const double value = f(spec, s);
        REQUIRE(value == doctest::Approx(ref_hyper_trap(s, 0.125)));
        if (value == 65536) ++at_top;
    }
    CHECK(at_top == 1);
    // Value ordering matches the case priority on every path point.
    for (std::size_t i = n / 2; i < n; ++i) CHECK(f(spec, path_point(n, i)) < 4096);
}

TEST_CASE("benchmarks are pure") {
    Rng rng(8);
    for (const auto& spec : {BenchmarkSpec::hyper_trap(64), BenchmarkSpec::hidden_path(64), BenchmarkSpec::jump(30, 4)}) {
        const auto x = BitString::random(spec.n, rng);
        CHECK(evaluate(spec, x) == evaluate(spec, x));
    }
}

TEST_CASE("validation messages name the violated constraint") {
    auto message = [](const BenchmarkSpec& s) {
        try {
            validate(s);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(BenchmarkSpec::jump(10, 0)).find("k out of range") == 0);
    CHECK(message(BenchmarkSpec::jump(10, 11)).find("k out of range") == 0);
    CHECK(message(BenchmarkSpec::cliff(10, 0)).find("d out of range") == 0);
    CHECK(message(BenchmarkSpec::hidden_path(48)).find("n out of range") == 0);
    CHECK(message(BenchmarkSpec::hidden_path(16)).find("n out of range") == 0);
    CHECK(message(BenchmarkSpec::hidden_path(64, 1.0)).find("epsilon out of range") == 0);
    CHECK(message(BenchmarkSpec::hyper_trap(18)).find("n out of range") == 0);
    CHECK(message(BenchmarkSpec::hyper_trap(16, 0.2)).find("gamma out of range") == 0);
    CHECK(message(BenchmarkSpec::simple_trap(50, 12, 80, 37)).find("a out of range") == 0);
    CHECK(message(BenchmarkSpec::simple_trap(50, 12, 74, 30)).find("b out of range") == 0);
    CHECK(message(BenchmarkSpec::onemax(0)).find("n out of range") == 0);
    CHECK(message(BenchmarkSpec::simple_trap(50)).empty());
}

TEST_CASE("text form round trip") {
    for (const auto& spec : {BenchmarkSpec::onemax(5), BenchmarkSpec::jump(20, 5), BenchmarkSpec::cliff(100, 20),
                             BenchmarkSpec::simple_trap(50), BenchmarkSpec::hidden_path(64, 0.25),
                             BenchmarkSpec::hyper_trap(64, 0.0625)})
        CHECK(parse_benchmark(to_string(spec)) == spec);
    CHECK(to_string(BenchmarkSpec::jump(20, 5)) == "jump n=20 k=5");
    CHECK(parse_benchmark("hypertrap n=64 gamma=1/16").gamma == 0.0625);
    CHECK_THROWS_AS(parse_benchmark("onemax n=5 k=3"), ConfigError);
    CHECK_THROWS_AS(parse_benchmark("nosuch n=5"), ConfigError);
    CHECK_THROWS_AS(parse_benchmark("jump k=3"), ConfigError);
}

TEST_CASE("optimum predicates") {
    CHECK(is_optimum(BenchmarkSpec::simple_trap(50), BitString::zeros(50)));
    CHECK_FALSE(is_optimum(BenchmarkSpec::simple_trap(50), BitString::ones(50)));
    CHECK(is_optimum(BenchmarkSpec::hyper_trap(16), BitString::ones(16)));
    CHECK(optimum(BenchmarkSpec::hidden_path(64)) == BitString::parse(path_point(64, 57)));
    CHECK(optimum_value(BenchmarkSpec::jump(20, 5)) == 25);
}
