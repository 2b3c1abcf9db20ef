#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bridgemi/matrix.hpp"
#include "bridgemi/rng.hpp"

namespace bridgemi {

// Jointly Gaussian pi(x0, x1) described by the stacked mean and covariance.
struct GaussianSpec {
  std::size_t dim0 = 0;
  std::size_t dim1 = 0;
  std::vector<double> mean;  // dim0 + dim1
  Matrix cov;                // (dim0 + dim1)^2, symmetric positive definite

  std::size_t dim() const { return dim0 + dim1; }
  // i, j in {0, 1} select the Sigma_ij block.
  Matrix block(int i, int j) const;
};

// I(X0; X1) = 1/2 [logdet S00 + logdet S11 - logdet S].
double gaussian_mi_formula(const GaussianSpec& spec);

// X0 ~ U(0,1)^1, X1 = X0 + noise_scale * U(-1,1). Ground truth comes from
// the quadrature oracle, not a stored constant.
struct UniformNoiseSpec {
  double noise_scale = 0.1;
};

enum class Transform { kIdentity, kHalfCube, kAsinh, kNormalCdf };

Transform transform_from_string(const std::string& name);
std::string to_string(Transform t);
double apply_transform(Transform t, double x);

struct JointTask {
  std::string name;
  std::variant<GaussianSpec, UniformNoiseSpec> base;
  Transform transform0 = Transform::kIdentity;
  Transform transform1 = Transform::kIdentity;
  // Elementwise strictly monotone transforms leave MI unchanged, so this is
  // the base distribution's MI. Unset for tasks without a closed form here.
  std::optional<double> ground_truth_mi;

  std::size_t dim0() const;
  std::size_t dim1() const;
  bool gaussian_base() const {
    return std::holds_alternative<GaussianSpec>(base);
  }
  const GaussianSpec& gaussian() const { return std::get<GaussianSpec>(base); }
};

enum class GaussianStructure { kBivariate, kTwoPair, kDense, kAllPair };

struct GaussianTaskParams {
  GaussianStructure structure = GaussianStructure::kBivariate;
  std::size_t dim = 1;             // per side
  std::optional<double> rho;       // direct correlation level
  std::optional<double> target_mi; // alternatively, solve rho (or the dense
                                   // scale) so the analytic MI hits this
};

JointTask make_correlated_gaussian(const GaussianTaskParams& params, Rng& rng);

struct PairSet {
  Matrix x0;
  Matrix x1;
  std::size_t n() const { return x0.rows; }
};

PairSet sample_pairs(const JointTask& task, std::size_t n, Rng& rng);

// Per-dimension affine record: y = (x - shift) / scale.
struct Affine {
  std::vector<double> shift;
  std::vector<double> scale;
};

std::pair<Matrix, Affine> standardize(const Matrix& samples);
Matrix apply_affine(const Matrix& samples, const Affine& affine);

std::vector<double> pad_to_common_dim(std::span<const double> x,
                                      std::size_t d_target);
Matrix pad_columns(const Matrix& m, std::size_t d_target);

PairSet load_csv_pairs(const std::string& path0, const std::string& path1);

}  // namespace bridgemi
