#include "optia/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>

#include "optia/error.hpp"
#include "optia/text.hpp"

namespace optia {

namespace {

constexpr std::array<std::pair<FunctionId, std::string_view>, 8> kFunctionNames{{
    {FunctionId::OneMax, "onemax"},
    {FunctionId::ZeroMax, "zeromax"},
    {FunctionId::LeadingOnes, "leadingones"},
    {FunctionId::Jump, "jump"},
    {FunctionId::Cliff, "cliff"},
    {FunctionId::SimpleTrap, "simpletrap"},
    {FunctionId::HiddenPath, "hiddenpath"},
    {FunctionId::HyperTrap, "hypertrap"},
}};

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

// Last five positions that hold a zero.
std::size_t zeros_in_last_five(const BitString& x) {
    const std::size_t n = x.size();
    return 5 - x.count_ones(n - 5, n);
}

bool is_prefix_path_point(const BitString& x, std::size_t ones) { return x.leading_ones() == ones; }

}  // namespace

std::string_view to_string(FunctionId id) {
    for (const auto& [fid, name] : kFunctionNames)
        if (fid == id) return name;
    return "unknown";
}

FunctionId parse_function_id(std::string_view name) {
    for (const auto& [fid, fname] : kFunctionNames)
        if (fname == name) return fid;
    throw ConfigError("unknown function '" + std::string(name) + "'");
}

BenchmarkSpec BenchmarkSpec::jump(std::size_t n, std::size_t k) {
    BenchmarkSpec s{FunctionId::Jump, n};
    s.k = k;
    return s;
}

BenchmarkSpec BenchmarkSpec::cliff(std::size_t n, std::size_t d) {
    BenchmarkSpec s{FunctionId::Cliff, n};
    s.d = d;
    return s;
}

BenchmarkSpec BenchmarkSpec::simple_trap(std::size_t n) {
    const double z = std::floor(static_cast<double>(n) / 4.0);
    const double b = static_cast<double>(n) - z - 1.0;
    return simple_trap(n, z, 2.0 * b, b);
}

BenchmarkSpec BenchmarkSpec::simple_trap(std::size_t n, double z, double a, double b) {
    BenchmarkSpec s{FunctionId::SimpleTrap, n};
    s.z = z;
    s.a = a;
    s.b = b;
    return s;
}

BenchmarkSpec BenchmarkSpec::hidden_path(std::size_t n, double epsilon) {
    BenchmarkSpec s{FunctionId::HiddenPath, n};
    s.epsilon = epsilon;
    return s;
}

BenchmarkSpec BenchmarkSpec::hyper_trap(std::size_t n, double gamma) {
    BenchmarkSpec s{FunctionId::HyperTrap, n};
    s.gamma = gamma;
    return s;
}

void validate(const BenchmarkSpec& spec) {
    const std::size_t n = spec.n;
    if (n == 0) throw ConfigError("n out of range: n must be positive");
    switch (spec.id) {
        case FunctionId::OneMax:
        case FunctionId::ZeroMax:
        case FunctionId::LeadingOnes:
            break;
        case FunctionId::Jump:
            if (spec.k < 1 || spec.k > n) throw ConfigError("k out of range: Jump requires 1 <= k <= n");
            break;
        case FunctionId::Cliff:
            if (spec.d < 1 || spec.d > n) throw ConfigError("d out of range: Cliff requires 1 <= d <= n");
            break;
        case FunctionId::SimpleTrap: {
            const double nn = static_cast<double>(n);
            if (!(spec.z > 0.0 && spec.z < nn)) throw ConfigError("z out of range: SimpleTrap requires 0 < z < n");
            if (std::abs(spec.b - (nn - spec.z - 1.0)) > 1e-9)
                throw ConfigError("b out of range: SimpleTrap requires b = n - z - 1");
            if (spec.b <= 0.0) throw ConfigError("b out of range: SimpleTrap requires b > 0");
            if (spec.a < 1.5 * spec.b - 1e-9 || spec.a > 2.0 * spec.b + 1e-9)
                throw ConfigError("a out of range: SimpleTrap requires 3b/2 <= a <= 2b");
            break;
        }
        case FunctionId::HiddenPath:
            if (n < 32 || !std::has_single_bit(n))
                throw ConfigError("n out of range: HiddenPath requires n >= 32 and a power of two");
            if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0))
                throw ConfigError("epsilon out of range: HiddenPath requires 0 < epsilon < 1");
            break;
        case FunctionId::HyperTrap:
            if (n % 4 != 0) throw ConfigError("n out of range: HyperTrap requires n divisible by 4");
            if (!(spec.gamma > 0.0 && spec.gamma <= 0.125))
                throw ConfigError("gamma out of range: HyperTrap requires 0 < gamma <= 1/8");
            break;
    }
}

std::string to_string(const BenchmarkSpec& spec) {
    std::ostringstream out;
    out << to_string(spec.id) << " n=" << spec.n;
    switch (spec.id) {
        case FunctionId::Jump: out << " k=" << spec.k; break;
        case FunctionId::Cliff: out << " d=" << spec.d; break;
        case FunctionId::SimpleTrap:
            out << " z=" << format_double(spec.z) << " a=" << format_double(spec.a) << " b=" << format_double(spec.b);
            break;
        case FunctionId::HiddenPath: out << " epsilon=" << format_double(spec.epsilon); break;
        case FunctionId::HyperTrap: out << " gamma=" << format_double(spec.gamma); break;
        default: break;
    }
    return out.str();
}

BenchmarkSpec parse_benchmark(std::string_view text) {
    std::vector<std::string_view> tokens;
    for (auto tok : split(text, ' '))
        if (!tok.empty()) tokens.push_back(tok);
    if (tokens.empty()) throw ConfigError("empty benchmark description");

    BenchmarkSpec spec;
    spec.id = parse_function_id(tokens[0]);
    bool have_n = false;
    bool have_trap_params = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" + std::string(tokens[i]) + "'");
        const auto key = tokens[i].substr(0, eq);
        const auto value = tokens[i].substr(eq + 1);
        if (key == "n") {
            spec.n = parse_uint(value, "n");
            have_n = true;
        } else if (key == "k" && spec.id == FunctionId::Jump) {
            spec.k = parse_uint(value, "k");
        } else if (key == "d" && spec.id == FunctionId::Cliff) {
            spec.d = parse_uint(value, "d");
        } else if (key == "gamma" && spec.id == FunctionId::HyperTrap) {
            spec.gamma = parse_rational(value, "gamma");
        } else if (key == "epsilon" && spec.id == FunctionId::HiddenPath) {
            spec.epsilon = parse_double(value, "epsilon");
        } else if ((key == "z" || key == "a" || key == "b") && spec.id == FunctionId::SimpleTrap) {
            const double v = parse_double(value, key);
            (key == "z" ? spec.z : key == "a" ? spec.a : spec.b) = v;
            have_trap_params = true;
        } else {
            throw ConfigError("unknown parameter '" + std::string(key) + "' for " + std::string(tokens[0]));
        }
    }
    if (!have_n) throw ConfigError("benchmark description is missing n");
    if (spec.id == FunctionId::SimpleTrap && !have_trap_params) spec = BenchmarkSpec::simple_trap(spec.n);
    return spec;
}

double onemax(const BitString& x) { return static_cast<double>(x.count_ones()); }

double zeromax(const BitString& x) { return static_cast<double>(x.count_zeros()); }

double leadingones(const BitString& x) { return static_cast<double>(x.leading_ones()); }

double jump(const BitString& x, std::size_t k) {
    const std::size_t n = x.size();
    const std::size_t ones = x.count_ones();
    if (ones + k <= n || ones == n) return static_cast<double>(k + ones);
    return static_cast<double>(n - ones);
}

double cliff(const BitString& x, std::size_t d) {
    const std::size_t n = x.size();
    const std::size_t ones = x.count_ones();
    if (ones + d <= n) return static_cast<double>(ones);
    return static_cast<double>(ones) - static_cast<double>(d) + 0.5;
}

double simple_trap(const BitString& x, double z, double a, double b) {
    const double n = static_cast<double>(x.size());
    const double ones = static_cast<double>(x.count_ones());
    if (ones <= z) return a / z * (z - ones);
    return b / (n - z) * (ones - z);
}

double hidden_path(const BitString& x, double epsilon) {
    const std::size_t n = x.size();
    const std::size_t zeros = x.count_zeros();
    const std::size_t log_n = log2_exact(n);
    const double nn = static_cast<double>(n);
    if (zeros == n) return 0.0;
    if (zeros >= 5 && zeros <= log_n + 1 && is_prefix_path_point(x, n - zeros))
        return nn - epsilon + epsilon * static_cast<double>(zeros) / static_cast<double>(log_n);
    if (zeros == n - 1) return nn;
    if (zeros == 5) return nn - epsilon + static_cast<double>(zeros_in_last_five(x)) / nn;
    if (zeros < 5) return 0.0;
    return static_cast<double>(zeros);
}

std::size_t min_sp_distance(const BitString& x) {
    const std::size_t n = x.size();
    const std::size_t start = (n + 1) / 2;
    if (start >= n) return x.count_zeros();
    // Distance to 1^i 0^(n-i) is zeros in [0, i) plus ones in [i, n).
    std::size_t prefix_zeros = start - x.count_ones(0, start);
    std::size_t suffix_ones = x.count_ones(start, n);
    std::size_t best = prefix_zeros + suffix_ones;
    for (std::size_t i = start; i + 1 < n; ++i) {
        if (x[i]) --suffix_ones;
        else ++prefix_zeros;
        best = std::min(best, prefix_zeros + suffix_ones);
    }
    return best;
}

std::size_t hyper_trap_threshold(std::size_t n, double gamma) {
    // Tolerance keeps exact products such as (1/8) * 64 from rounding up.
    return static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(n) - 1e-9));
}

double hyper_trap(const BitString& x, double gamma) {
    const std::size_t n = x.size();
    const std::size_t ones = x.count_ones();
    const double nn = static_cast<double>(n);
    if (ones == n) return nn * nn * nn * nn;
    if (4 * ones >= 3 * n && min_sp_distance(x) >= hyper_trap_threshold(n, gamma)) return nn * nn * nn;
    if (2 * ones >= n && is_prefix_path_point(x, ones)) return nn * nn * static_cast<double>(ones);
    if (2 * ones == n) {
        double weighted = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i]) weighted += static_cast<double>(n - 1 - i);
        return nn / 2.0 + weighted / nn;
    }
    if (2 * ones < n) return static_cast<double>(ones);
    return static_cast<double>(n - ones);
}

double evaluate(const BenchmarkSpec& spec, const BitString& x) {
    switch (spec.id) {
        case FunctionId::OneMax: return onemax(x);
        case FunctionId::ZeroMax: return zeromax(x);
        case FunctionId::LeadingOnes: return leadingones(x);
        case FunctionId::Jump: return jump(x, spec.k);
        case FunctionId::Cliff: return cliff(x, spec.d);
        case FunctionId::SimpleTrap: return simple_trap(x, spec.z, spec.a, spec.b);
        case FunctionId::HiddenPath: return hidden_path(x, spec.epsilon);
        case FunctionId::HyperTrap: return hyper_trap(x, spec.gamma);
    }
    return 0.0;
}

BitString optimum(const BenchmarkSpec& spec) {
    switch (spec.id) {
        case FunctionId::ZeroMax:
        case FunctionId::SimpleTrap:
            return BitString::zeros(spec.n);
        case FunctionId::HiddenPath:
            return BitString::prefix_ones(spec.n, spec.n - log2_exact(spec.n) - 1);
        default:
            return BitString::ones(spec.n);
    }
}

bool is_optimum(const BenchmarkSpec& spec, const BitString& x) {
    switch (spec.id) {
        case FunctionId::ZeroMax:
        case FunctionId::SimpleTrap:
            return x.all_zeros();
        case FunctionId::HiddenPath: {
            const std::size_t zeros = log2_exact(spec.n) + 1;
            return x.count_zeros() == zeros && x.leading_ones() == spec.n - zeros;
        }
        default:
            return x.all_ones();
    }
}

double optimum_value(const BenchmarkSpec& spec) { return evaluate(spec, optimum(spec)); }

Landscape make_landscape(const BenchmarkSpec& spec) {
    validate(spec);
    Landscape landscape;
    switch (spec.id) {
        case FunctionId::OneMax: landscape.fitness = onemax; break;
        case FunctionId::ZeroMax: landscape.fitness = zeromax; break;
        case FunctionId::LeadingOnes: landscape.fitness = leadingones; break;
        case FunctionId::Jump: landscape.fitness = [k = spec.k](const BitString& x) { return jump(x, k); }; break;
        case FunctionId::Cliff: landscape.fitness = [d = spec.d](const BitString& x) { return cliff(x, d); }; break;
        case FunctionId::SimpleTrap:
            landscape.fitness = [z = spec.z, a = spec.a, b = spec.b](const BitString& x) { return simple_trap(x, z, a, b); };
            break;
        case FunctionId::HiddenPath:
            landscape.fitness = [eps = spec.epsilon](const BitString& x) { return hidden_path(x, eps); };
            break;
        case FunctionId::HyperTrap:
            landscape.fitness = [g = spec.gamma](const BitString& x) { return hyper_trap(x, g); };
            break;
    }
    landscape.is_optimum = [spec](const BitString& x) { return is_optimum(spec, x); };
    return landscape;
}

}  // namespace optia
