#pragma once

#include <cstdint>

namespace lognsum {

/// splitmix64 step (Steele, Lea & Flood); used for seeding and stream
/// derivation so that (seed, stream index) fully determines a generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic seed derivation for independent sub-streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (salt + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// xoshiro256++ (Blackman & Vigna) with splitmix64 seeding, plus the handful
/// of variate generators the estimators need. Portable and reproducible:
/// no standard-library distributions are involved.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Generator for replication r of a run keyed by `seed`; streams for
    /// distinct r are independent, so worker count never affects results.
    static Rng stream(std::uint64_t seed, std::uint64_t r) { return Rng(derive_seed(seed, r)); }

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1).
    double uniform();

    /// Standard normal (Box-Muller; the second variate is cached).
    double normal();

    /// Gamma(shape, 1) for shape >= 1, Marsaglia & Tsang (2000).
    double gamma(double shape);

  private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace lognsum
