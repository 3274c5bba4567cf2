#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace flowlab {

// splitmix64 finalizer; a bijection on 64-bit words
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based stream generator: a stream is keyed by (seed, a, b, c) and
// every key yields a statistically independent sequence. Used so that each
// grid cell / replica / experiment draws from its own stream and a run is a
// pure function of its seed.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t state) : state_(state) {}

  static RngStream keyed(std::uint64_t seed, std::uint64_t a = 0,
                         std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = mix64(seed + 0x9e3779b97f4a7c15ull);
    s = mix64(s ^ (a * 0xd6e8feb86659fd93ull + 0x2545f4914f6cdd1dull));
    s = mix64(s ^ (b * 0xa0761d6478bd642full + 0xe7037ed1a0b428dbull));
    s = mix64(s ^ (c * 0x8ebc6af09c88c6e3ull + 0x589965cc75374cc3ull));
    return RngStream(s);
  }

  RngStream substream(std::uint64_t a, std::uint64_t b = 0) const {
    return keyed(state_, a, b, 0x5851f42d4c957f2dull);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type(0); }

  // uniform on (0,1); never returns 0 so log() is safe
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * M_PI * v;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // multiplication method; large means split so the product stays away from 0
  long poisson(double mean) {
    if (mean < 0) throw std::invalid_argument("poisson: mean < 0");
    if (mean == 0) return 0;
    if (mean > 30.0) return poisson(mean / 2) + poisson(mean / 2);
    const double limit = std::exp(-mean);
    long k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }

  // unbiased integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n == 0");
    const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // index draw from a probability vector (assumed to sum to ~1)
  std::size_t categorical(std::span<const double> probs) {
    const double u = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return probs.empty() ? 0 : probs.size() - 1;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace flowlab
