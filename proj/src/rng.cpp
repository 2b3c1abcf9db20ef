#include "bridgemi/rng.hpp"

#include <cmath>
#include <numbers>

namespace bridgemi {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Stafford mix 13, the SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGamma)) {}

std::uint64_t Rng::next_u64() { return mix64(key_ + kGamma * ++ctr_); }

double Rng::uniform() { return to_unit(next_u64()); }

double Rng::normal() {
  // One fresh pair per call keeps the output a pure function of the
  // counter position, with no cached state.
  const double u1 = 1.0 - to_unit(next_u64());  // (0, 1]
  const double u2 = to_unit(next_u64());
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

void Rng::fill_uniform(std::span<double> out) {
  for (double& v : out) v = uniform();
}

void Rng::fill_normal(std::span<double> out) {
  std::size_t i = 0;
  for (; i + 1 < out.size(); i += 2) {
    const double u1 = 1.0 - to_unit(next_u64());
    const double u2 = to_unit(next_u64());
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    out[i] = r * std::cos(a);
    out[i + 1] = r * std::sin(a);
  }
  if (i < out.size()) out[i] = normal();
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix64(key_ ^ mix64(stream + kGamma)), 0);
}

std::size_t sample_index(Rng& rng, std::size_t n) {
  // Modulo bias is < n / 2^64, irrelevant at benchmark scales.
  return static_cast<std::size_t>(rng.next_u64() % n);
}

}  // namespace bridgemi
