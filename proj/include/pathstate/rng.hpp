#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace pathstate {

// Counter-based generator (Philox 4x32, 10 rounds). Every stochastic stage of
// the pipeline owns an explicit seed, and child streams are derived rather
// than shared, so results are reproducible bit-exactly regardless of thread
// scheduling or evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_{static_cast<std::uint32_t>(seed),
                                          static_cast<std::uint32_t>(seed >> 32)} {}

  /// Derive an independent child seed; depends only on (seed, tag).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag);

  /// Independent child stream for a work item (shot, quad, resample, ...).
  Rng split(std::uint64_t tag) const { return Rng(derive(seed_value(), tag)); }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform integer in [0, n), unbiased. n must be >= 1.
  std::uint32_t next_below(std::uint32_t n);

  /// Standard normal via Box-Muller (second value cached).
  double next_normal();

  /// Raw Philox 4x32-10 block; exposed for key derivation and tests.
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 2>& key,
                                            const std::array<std::uint32_t, 4>& counter);

 private:
  std::uint64_t seed_value() const {
    return static_cast<std::uint64_t>(key_[0]) | (static_cast<std::uint64_t>(key_[1]) << 32);
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Sample an index from a discrete distribution given by nonnegative weights.
/// Weights need not be normalized. Uses one uniform draw and a CDF walk.
std::size_t sample_discrete(Rng& rng, const std::vector<double>& weights);

/// Binomial draw by CDF inversion; exact and fast for the shot counts used here.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p);

/// Multinomial draw via conditional binomials: counts over `weights.size()`
/// categories summing to `n`.
std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t n,
                                              const std::vector<double>& weights);

}  // namespace pathstate
