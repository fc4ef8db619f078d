#include "pathstate/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace pathstate {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Rng::block(const std::array<std::uint32_t, 2>& key,
                                        const std::array<std::uint32_t, 4>& counter) {
  std::array<std::uint32_t, 4> ctr = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, k);
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return ctr;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t tag) {
  const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(seed),
                                         static_cast<std::uint32_t>(seed >> 32)};
  // Counter domain 0xD5 marks derivation blocks so they never collide with
  // the sequential draw counters used by next_u32.
  const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(tag),
                                         static_cast<std::uint32_t>(tag >> 32), 0u, 0xD5000000u};
  const auto out = block(key, ctr);
  return static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
}

std::uint32_t Rng::next_u32() {
  if (buffered_ == 0) {
    const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(counter_),
                                           static_cast<std::uint32_t>(counter_ >> 32), 0u, 0u};
    buffer_ = block(key_, ctr);
    ++counter_;
    buffered_ = 4;
  }
  return buffer_[4 - buffered_--];
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint32_t Rng::next_below(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be >= 1");
  if (n == 1) return 0;
  const std::uint32_t limit = (0u - n) % n;  // reject to remove modulo bias
  for (;;) {
    const std::uint32_t v = next_u32();
    if (v >= limit) return v % n;
  }
}

double Rng::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

std::size_t sample_discrete(Rng& rng, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0) throw std::invalid_argument("sample_discrete: weights sum to zero");
  double u = rng.next_double() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    u -= weights[i];
    if (u < 0.0) return i;
  }
  return weights.size() - 1;  // u landed on accumulated rounding
}

std::uint64_t sample_binomial(Rng& rng, std::uint64_t n, double p) {
  if (p <= 0.0 || n == 0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - sample_binomial(rng, n, 1.0 - p);
  // Keep n small enough that (1-p)^n stays normal, so the CDF walk below is
  // exact; larger draws split into independent halves.
  if (n > 1000) {
    const std::uint64_t half = n / 2;
    return sample_binomial(rng, half, p) + sample_binomial(rng, n - half, p);
  }
  // Invert the CDF by walking the probability mass from k = 0 upward.
  const double u = rng.next_double();
  const double q = 1.0 - p;
  const double ratio = p / q;
  double pmf = std::pow(q, static_cast<double>(n));
  double cdf = pmf;
  std::uint64_t k = 0;
  while (u > cdf && k < n) {
    ++k;
    pmf *= ratio * static_cast<double>(n - k + 1) / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

std::vector<std::uint64_t> sample_multinomial(Rng& rng, std::uint64_t n,
                                              const std::vector<double>& weights) {
  std::vector<std::uint64_t> counts(weights.size(), 0);
  double remaining_weight = 0.0;
  for (double w : weights) remaining_weight += w;
  std::uint64_t remaining = n;
  for (std::size_t i = 0; i + 1 < weights.size() && remaining > 0; ++i) {
    if (remaining_weight <= 0.0) break;
    const double p = weights[i] / remaining_weight;
    const std::uint64_t c = sample_binomial(rng, remaining, p);
    counts[i] = c;
    remaining -= c;
    remaining_weight -= weights[i];
  }
  if (!weights.empty()) counts.back() += remaining;
  return counts;
}

}  // namespace pathstate
