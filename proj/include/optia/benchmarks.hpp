#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "optia/bitstring.hpp"
#include "optia/evaluator.hpp"

namespace optia {

enum class FunctionId { OneMax, ZeroMax, LeadingOnes, Jump, Cliff, SimpleTrap, HiddenPath, HyperTrap };

std::string_view to_string(FunctionId id);
/// Accepts the lowercase names used by to_string ("onemax", "jump", ...).
FunctionId parse_function_id(std::string_view name);

/// A pseudo-Boolean benchmark and its parameters. Only the fields relevant to
/// `id` are meaningful; the named constructors fill in defaults.
struct BenchmarkSpec {
    FunctionId id = FunctionId::OneMax;
    std::size_t n = 1;
    std::size_t k = 0;        // Jump gap length
    std::size_t d = 0;        // Cliff distance from the optimum
    double gamma = 0.125;     // HyperTrap trap distance factor
    double epsilon = 0.5;     // HiddenPath offset
    double z = 0.0, a = 0.0, b = 0.0;  // SimpleTrap

    static BenchmarkSpec onemax(std::size_t n) { return {FunctionId::OneMax, n}; }
    static BenchmarkSpec zeromax(std::size_t n) { return {FunctionId::ZeroMax, n}; }
    static BenchmarkSpec leadingones(std::size_t n) { return {FunctionId::LeadingOnes, n}; }
    static BenchmarkSpec jump(std::size_t n, std::size_t k);
    static BenchmarkSpec cliff(std::size_t n, std::size_t d);
    /// z = floor(n/4), b = n - z - 1, a = 2b.
    static BenchmarkSpec simple_trap(std::size_t n);
    static BenchmarkSpec simple_trap(std::size_t n, double z, double a, double b);
    static BenchmarkSpec hidden_path(std::size_t n, double epsilon = 0.5);
    static BenchmarkSpec hyper_trap(std::size_t n, double gamma = 0.125);

    friend bool operator==(const BenchmarkSpec&, const BenchmarkSpec&) = default;
};

/// Throws ConfigError naming the violated constraint.
void validate(const BenchmarkSpec& spec);

/// Plain-text form: "<id> n=<n> [key=value ...]", listing only the
/// parameters relevant to the function, e.g. "jump n=20 k=5".
std::string to_string(const BenchmarkSpec& spec);
BenchmarkSpec parse_benchmark(std::string_view text);

// Individual functions. n is the length of x.
double onemax(const BitString& x);
double zeromax(const BitString& x);
double leadingones(const BitString& x);
double jump(const BitString& x, std::size_t k);
double cliff(const BitString& x, std::size_t d);
double simple_trap(const BitString& x, double z, double a, double b);
double hidden_path(const BitString& x, double epsilon);
double hyper_trap(const BitString& x, double gamma);

/// Minimum Hamming distance from x to the HyperTrap short path
/// {1^i 0^(n-i) : n/2 <= i < n}.
std::size_t min_sp_distance(const BitString& x);

/// Smallest distance from the short path that still counts as a trap point: ceil(gamma * n).
std::size_t hyper_trap_threshold(std::size_t n, double gamma);

double evaluate(const BenchmarkSpec& spec, const BitString& x);
bool is_optimum(const BenchmarkSpec& spec, const BitString& x);
/// The unique global optimum of the function.
BitString optimum(const BenchmarkSpec& spec);
double optimum_value(const BenchmarkSpec& spec);

/// Validates spec and binds it into a Landscape for an Evaluator.
Landscape make_landscape(const BenchmarkSpec& spec);

}  // namespace optia
