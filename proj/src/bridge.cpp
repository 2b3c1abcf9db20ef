#include "bridgemi/bridge.hpp"

#include <cmath>

#include "bridgemi/errors.hpp"

namespace bridgemi {

void BridgeConfig::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("bridge: epsilon must be > 0");
  if (!(t_min >= 0.0 && t_min < t_max && t_max < 1.0))
    throw ConfigError("bridge: need 0 <= t_min < t_max < 1");
}

std::vector<double> sample_bridge_point(std::span<const double> x0,
                                        std::span<const double> x1, double t,
                                        const BridgeConfig& cfg, Rng& rng) {
  if (x0.size() != x1.size())
    throw ShapeMismatchError("bridge point: endpoint dims differ");
  const double sd = std::sqrt(cfg.epsilon * t * (1.0 - t));
  std::vector<double> out(x0.size());
  rng.fill_normal(out);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (1.0 - t) * x0[i] + t * x1[i] + sd * out[i];
  return out;
}

void bridge_target(std::span<const double> x1, std::span<const double> xt,
                   double t, std::span<double> out) {
  const double rem = 1.0 - t;
  if (rem < 1e-12) throw SingularTimeError("bridge target: t too close to 1");
  const double inv = 1.0 / rem;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x1[i] - xt[i]) * inv;
}

std::vector<double> sample_time(const BridgeConfig& cfg, Rng& rng,
                                std::size_t n) {
  std::vector<double> t(n);
  for (double& v : t) v = cfg.t_min + (cfg.t_max - cfg.t_min) * rng.uniform();
  return t;
}

std::vector<std::size_t> sample_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = sample_index(rng, i);
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

namespace {

// xt rows for a batch with shared noise draw order: row i uses d fresh
// normals regardless of t, so batches are reproducible per stream.
Matrix bridge_points_batch(const Matrix& x0, const Matrix& x1,
                           const std::vector<double>& t,
                           const BridgeConfig& cfg, Rng& rng) {
  const std::size_t n = x0.rows, d = x0.cols;
  Matrix xt(n, d);
  rng.fill_normal(xt.data);
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = t[i];
    const double sd = std::sqrt(cfg.epsilon * ti * (1.0 - ti));
    for (std::size_t j = 0; j < d; ++j)
      xt(i, j) = (1.0 - ti) * x0(i, j) + ti * x1(i, j) + sd * xt(i, j);
  }
  return xt;
}

Matrix targets_batch(const Matrix& x1, const Matrix& xt,
                     const std::vector<double>& t) {
  Matrix out(x1.rows, x1.cols);
  for (std::size_t i = 0; i < x1.rows; ++i)
    bridge_target(x1.row(i), xt.row(i), t[i], out.row(i));
  return out;
}

}  // namespace

BridgeBatch make_training_batch(const PairSet& pairs, const BridgeConfig& cfg,
                                Rng& rng) {
  const auto perm = sample_permutation(rng, pairs.n());
  return make_training_batch(pairs, cfg, rng, perm);
}

BridgeBatch make_training_batch(const PairSet& pairs, const BridgeConfig& cfg,
                                Rng& rng,
                                const std::vector<std::size_t>& perm) {
  if (pairs.n() < 2) throw Error("training batch: need >= 2 pairs");
  if (pairs.x0.cols != pairs.x1.cols)
    throw ShapeMismatchError(
        "training batch: sides must share a common dimension (pad first)");
  cfg.validate();

  BridgeBatch batch;
  batch.x0 = pairs.x0;
  batch.x1 = pairs.x1;
  batch.x1_perm = Matrix(pairs.n(), pairs.x1.cols);
  for (std::size_t i = 0; i < pairs.n(); ++i) {
    const auto src = pairs.x1.row(perm[i]);
    std::copy(src.begin(), src.end(), batch.x1_perm.row(i).begin());
  }
  batch.t = sample_time(cfg, rng, pairs.n());
  batch.xt = bridge_points_batch(batch.x0, batch.x1, batch.t, cfg, rng);
  batch.xt_perm = bridge_points_batch(batch.x0, batch.x1_perm, batch.t, cfg, rng);
  batch.target = targets_batch(batch.x1, batch.xt, batch.t);
  batch.target_perm = targets_batch(batch.x1_perm, batch.xt_perm, batch.t);
  return batch;
}

std::vector<double> simulate_sde(const PointDrift& drift,
                                 std::span<const double> x0, int flag,
                                 const BridgeConfig& cfg, std::size_t steps,
                                 Rng& rng) {
  if (steps < 1) throw Error("simulate_sde: steps must be >= 1");
  cfg.validate();
  const std::size_t d = x0.size();
  const double dt = cfg.t_max / static_cast<double>(steps);
  const double noise_sd = std::sqrt(cfg.epsilon * dt);

  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> v(d), z(d);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = dt * static_cast<double>(k);
    drift(x, t, x0, flag, v);
    rng.fill_normal(z);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] += v[i] * dt + noise_sd * z[i];
      if (!std::isfinite(x[i]))
        throw NonFiniteStateError("simulate_sde: state diverged at t = " +
                                  std::to_string(t));
    }
  }
  return x;
}

}  // namespace bridgemi
