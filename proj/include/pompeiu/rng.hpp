#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace pompeiu {

/// Default master seed used by every CLI entry point; documented in the README
/// so that bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Counter-free splitmix64 step.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream key from a master seed and a list of stream
/// identifiers (component tag, rotation index, batch index, ...).  Batches
/// keyed this way are order-independent, so reductions over batches give the
/// same result under any parallel schedule.
std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids);

/// Small deterministic generator (splitmix64 core).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in (0, 1].
    double next_double();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via Box-Muller; generated in pairs, one cached.
    double next_gaussian();

    void fill_gaussians(std::span<double> out);

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace pompeiu
