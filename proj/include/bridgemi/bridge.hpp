#pragma once

#include <functional>
#include <vector>

#include "bridgemi/matrix.hpp"
#include "bridgemi/rng.hpp"
#include "bridgemi/tasks.hpp"

namespace bridgemi {

// Volatility and time window of the pinned process dx = sqrt(eps) dW.
// t_max stays strictly below 1: the regression target (x1 - xt)/(1 - t)
// is singular there and its variance eps*t/(1-t) diverges.
struct BridgeConfig {
  double epsilon = 1.0;
  double t_min = 0.0;
  double t_max = 1.0 - 1e-3;

  void validate() const;
};

// One training batch: the true coupling and the permuted (independent)
// coupling share the t vector but use independent bridge noise.
struct BridgeBatch {
  Matrix x0;
  Matrix x1;
  Matrix x1_perm;
  std::vector<double> t;
  Matrix xt;
  Matrix xt_perm;
  Matrix target;       // (x1 - xt) / (1 - t)
  Matrix target_perm;  // (x1_perm - xt_perm) / (1 - t)
};

std::vector<double> sample_bridge_point(std::span<const double> x0,
                                        std::span<const double> x1, double t,
                                        const BridgeConfig& cfg, Rng& rng);

void bridge_target(std::span<const double> x1, std::span<const double> xt,
                   double t, std::span<double> out);

std::vector<double> sample_time(const BridgeConfig& cfg, Rng& rng,
                                std::size_t n);

std::vector<std::size_t> sample_permutation(Rng& rng, std::size_t n);

BridgeBatch make_training_batch(const PairSet& pairs, const BridgeConfig& cfg,
                                Rng& rng);
// Variant with a pinned permutation (tests exercise forced couplings).
BridgeBatch make_training_batch(const PairSet& pairs, const BridgeConfig& cfg,
                                Rng& rng, const std::vector<std::size_t>& perm);

// Drift v(x, t, x0, s) evaluated at a single state.
using PointDrift = std::function<void(
    std::span<const double> x, double t, std::span<const double> x0, int flag,
    std::span<double> out)>;

// Euler-Maruyama over t in [0, t_max]; returns the terminal state.
std::vector<double> simulate_sde(const PointDrift& drift,
                                 std::span<const double> x0, int flag,
                                 const BridgeConfig& cfg, std::size_t steps,
                                 Rng& rng);

}  // namespace bridgemi
