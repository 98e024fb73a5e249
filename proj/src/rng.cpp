#include "pompeiu/rng.hpp"

#include <cmath>
#include <numbers>

namespace pompeiu {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t s = seed ^ 0xA0761D6478BD642FULL;
    splitmix64(s);
    for (std::uint64_t id : ids) {
        s ^= id + 0x9E3779B97F4A7C15ULL + (s << 6) + (s >> 2);
        splitmix64(s);
    }
    return s;
}

double Rng::next_double() {
    // (0,1]: never returns 0, safe as a log() argument.
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

std::uint64_t Rng::next_below(std::uint64_t bound) { return next_u64() % bound; }

double Rng::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

void Rng::fill_gaussians(std::span<double> out) {
    for (double& v : out) v = next_gaussian();
}

}  // namespace pompeiu
