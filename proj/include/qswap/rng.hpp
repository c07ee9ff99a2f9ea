#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace qswap {

struct RandomSeed {
    std::uint64_t value = 0;
};

/// Seeded generator with platform-independent derived draws.
///
/// std::mt19937_64 output is fully specified by the standard, but the std
/// distributions are not, so uniform reals and bounded integers are derived
/// here by hand.
class Rng {
public:
    explicit Rng(RandomSeed seed) : engine_(seed.value) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, bound). bound must be positive.
    int below(int bound);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer applied to master ^ f(index); stable per-case seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Inverse-CDF draw over unnormalized weights, scanning in index order.
/// Never returns an index whose weight is zero.
std::size_t sample_index(std::span<const double> weights, Rng& rng);

}  // namespace qswap
