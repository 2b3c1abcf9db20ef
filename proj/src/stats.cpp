#include "bridgemi/stats.hpp"

#include <cmath>

#include "bridgemi/errors.hpp"

namespace bridgemi {

RunningStats::RunningStats(std::size_t dim, bool full_covariance)
    : full_(full_covariance),
      mean_(dim, 0.0),
      m2_(full_covariance ? dim * dim : dim, 0.0) {}

void RunningStats::add(std::span<const double> x) {
  if (x.size() != mean_.size())
    throw ShapeMismatchError("RunningStats: sample dimension mismatch");
  const std::size_t d = mean_.size();
  ++n_;
  const double inv_n = 1.0 / static_cast<double>(n_);
  if (!full_) {
    for (std::size_t i = 0; i < d; ++i) {
      const double delta = x[i] - mean_[i];
      mean_[i] += delta * inv_n;
      m2_[i] += delta * (x[i] - mean_[i]);
    }
    return;
  }
  std::vector<double> delta(d);
  for (std::size_t i = 0; i < d; ++i) {
    delta[i] = x[i] - mean_[i];
    mean_[i] += delta[i] * inv_n;
  }
  // m2 += delta_old * delta_new^T
  for (std::size_t i = 0; i < d; ++i) {
    const double di = delta[i];
    for (std::size_t j = 0; j < d; ++j)
      m2_[i * d + j] += di * (x[j] - mean_[j]);
  }
}

void RunningStats::merge(const RunningStats& other) {
  if (other.mean_.size() != mean_.size() || other.full_ != full_)
    throw ShapeMismatchError("RunningStats: merge layout mismatch");
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const std::size_t d = mean_.size();
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double nab = na + nb;
  std::vector<double> delta(d);
  for (std::size_t i = 0; i < d; ++i) delta[i] = other.mean_[i] - mean_[i];
  for (std::size_t i = 0; i < d; ++i) mean_[i] += delta[i] * nb / nab;
  if (!full_) {
    for (std::size_t i = 0; i < d; ++i)
      m2_[i] += other.m2_[i] + delta[i] * delta[i] * na * nb / nab;
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m2_[i * d + j] +=
            other.m2_[i * d + j] + delta[i] * delta[j] * na * nb / nab;
  }
  n_ += other.n_;
}

std::vector<double> RunningStats::mean() const {
  if (n_ < 1) throw InsufficientSamplesError("RunningStats: no samples");
  return mean_;
}

std::vector<double> RunningStats::variance() const {
  if (n_ < 2)
    throw InsufficientSamplesError("RunningStats: variance needs n >= 2");
  const std::size_t d = mean_.size();
  std::vector<double> v(d);
  const double denom = static_cast<double>(n_ - 1);
  for (std::size_t i = 0; i < d; ++i)
    v[i] = (full_ ? m2_[i * d + i] : m2_[i]) / denom;
  return v;
}

Matrix RunningStats::covariance() const {
  if (n_ < 2)
    throw InsufficientSamplesError("RunningStats: covariance needs n >= 2");
  const std::size_t d = mean_.size();
  Matrix cov(d, d);
  const double denom = static_cast<double>(n_ - 1);
  if (full_) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cov(i, j) = m2_[i * d + j] / denom;
  } else {
    for (std::size_t i = 0; i < d; ++i) cov(i, i) = m2_[i] / denom;
  }
  return cov;
}

double RunningStats::scalar_mean() const {
  if (dim() != 1) throw ShapeMismatchError("scalar_mean: dim != 1");
  return mean()[0];
}

double RunningStats::scalar_std_error() const {
  if (dim() != 1) throw ShapeMismatchError("scalar_std_error: dim != 1");
  return std::sqrt(variance()[0] / static_cast<double>(n_));
}

std::pair<std::vector<double>, Matrix> running_stats_finalize(
    const RunningStats& stats) {
  return {stats.mean(), stats.covariance()};
}

}  // namespace bridgemi
