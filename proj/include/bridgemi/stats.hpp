#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bridgemi/matrix.hpp"

namespace bridgemi {

// Single-pass mean / covariance accumulator (Welford). Instances merge
// associatively, so per-block accumulators can be pooled in a fixed order
// to keep parallel reductions independent of thread count.
class RunningStats {
 public:
  explicit RunningStats(std::size_t dim, bool full_covariance = false);

  void add(std::span<const double> x);
  void merge(const RunningStats& other);

  std::size_t count() const { return n_; }
  std::size_t dim() const { return mean_.size(); }
  bool full_covariance() const { return full_; }

  // Unbiased (n-1) estimates; throws InsufficientSamplesError when n < 2.
  std::vector<double> mean() const;
  std::vector<double> variance() const;
  Matrix covariance() const;  // diagonal matrix unless full_covariance

  // mean and variance of the mean (for MC standard errors), dim 1 helpers
  double scalar_mean() const;
  double scalar_std_error() const;

 private:
  std::size_t n_ = 0;
  bool full_ = false;
  std::vector<double> mean_;
  std::vector<double> m2_;  // dim values, or dim*dim when full_
};

std::pair<std::vector<double>, Matrix> running_stats_finalize(
    const RunningStats& stats);

}  // namespace bridgemi
