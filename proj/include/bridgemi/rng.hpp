#pragma once

#include <cstdint>
#include <span>

namespace bridgemi {

// Counter-based generator (SplitMix64 core). The n-th output is a pure
// function of (key, n), so child streams obtained via split() are
// reproducible independent of thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double normal();   // N(0, 1), Box-Muller
  void fill_uniform(std::span<double> out);
  void fill_normal(std::span<double> out);

  // Independent child stream keyed by (this stream's key, stream index).
  // Does not advance this stream's counter.
  Rng split(std::uint64_t stream) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return ctr_; }

 private:
  Rng(std::uint64_t key, int) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

std::size_t sample_index(Rng& rng, std::size_t n);  // uniform in [0, n)

}  // namespace bridgemi
