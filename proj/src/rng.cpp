#include "optia/rng.hpp"

#include <cmath>
#include <limits>

namespace optia {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return splitmix64(master_seed + (run_index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Lemire's multiply-shift with rejection; exact for every bound.
std::uint64_t Rng::below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t Rng::geometric(double p) {
    if (p >= 1.0) return 0;
    // 1 - uniform() lies in (0, 1], so the logarithm is finite.
    const double u = 1.0 - uniform();
    const double g = std::floor(std::log(u) / std::log1p(-p));
    if (g >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(g);
}

}  // namespace optia
