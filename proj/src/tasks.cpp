#include "bridgemi/tasks.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bridgemi/csv.hpp"
#include "bridgemi/errors.hpp"
#include "bridgemi/linalg.hpp"

namespace bridgemi {

Matrix GaussianSpec::block(int i, int j) const {
  const std::size_t r0 = (i == 0) ? 0 : dim0;
  const std::size_t c0 = (j == 0) ? 0 : dim0;
  const std::size_t nr = (i == 0) ? dim0 : dim1;
  const std::size_t nc = (j == 0) ? dim0 : dim1;
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = cov(r0 + r, c0 + c);
  return b;
}

double gaussian_mi_formula(const GaussianSpec& spec) {
  return 0.5 * (logdet_spd(spec.block(0, 0)) + logdet_spd(spec.block(1, 1)) -
                logdet_spd(spec.cov));
}

Transform transform_from_string(const std::string& name) {
  if (name == "identity") return Transform::kIdentity;
  if (name == "half_cube") return Transform::kHalfCube;
  if (name == "asinh") return Transform::kAsinh;
  if (name == "normal_cdf") return Transform::kNormalCdf;
  throw ConfigError("unknown transform: " + name);
}

std::string to_string(Transform t) {
  switch (t) {
    case Transform::kIdentity: return "identity";
    case Transform::kHalfCube: return "half_cube";
    case Transform::kAsinh: return "asinh";
    case Transform::kNormalCdf: return "normal_cdf";
  }
  return "identity";
}

double apply_transform(Transform t, double x) {
  switch (t) {
    case Transform::kIdentity: return x;
    case Transform::kHalfCube: return x * std::sqrt(std::abs(x));
    case Transform::kAsinh: return std::asinh(x);
    case Transform::kNormalCdf:
      return 0.5 * (1.0 + std::erf(x / std::numbers::sqrt2));
  }
  return x;
}

std::size_t JointTask::dim0() const {
  return gaussian_base() ? gaussian().dim0 : 1;
}

std::size_t JointTask::dim1() const {
  return gaussian_base() ? gaussian().dim1 : 1;
}

namespace {

constexpr double kMaxPerPairMi = 17.0;  // 1 - rho^2 hits machine eps beyond

double rho_for_per_pair_mi(double mi) {
  // per-pair MI of a correlated coordinate pair: -1/2 ln(1 - rho^2)
  if (mi < 0.0) throw InfeasibleTargetError("target MI must be >= 0");
  if (mi > kMaxPerPairMi)
    throw InfeasibleTargetError(
        "target MI requires |rho| >= 1 at machine precision");
  return std::sqrt(1.0 - std::exp(-2.0 * mi));
}

GaussianSpec paired_spec(std::size_t dim, std::size_t n_pairs, double rho) {
  GaussianSpec spec;
  spec.dim0 = spec.dim1 = dim;
  spec.mean.assign(2 * dim, 0.0);
  spec.cov = Matrix::identity(2 * dim);
  for (std::size_t p = 0; p < n_pairs; ++p) {
    spec.cov(p, dim + p) = rho;
    spec.cov(dim + p, p) = rho;
  }
  return spec;
}

GaussianSpec dense_spec(std::size_t dim, double target_mi, Rng& rng) {
  // Randomized off-diagonal block, then a global correlation multiplier c
  // solved so that MI(c) = -1/2 logdet(I - c^2 R^T R) hits the target.
  Matrix r(dim, dim);
  for (double& v : r.data) v = 2.0 * rng.uniform() - 1.0;

  Eigen::JacobiSVD<EigenRowMajor> svd(as_eigen(r));
  const double sigma_max = svd.singularValues()(0);
  if (!(sigma_max > 0.0)) throw Error("dense: degenerate random block");

  auto mi_of = [&](double c) {
    EigenRowMajor m = EigenRowMajor::Identity(dim, dim) -
                      c * c * (as_eigen(r).transpose() * as_eigen(r));
    const Eigen::LLT<EigenRowMajor> llt(m);
    if (llt.info() != Eigen::Success)
      return std::numeric_limits<double>::infinity();
    return -llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  };

  const double c_hi_limit = (1.0 - 1e-9) / sigma_max;
  if (target_mi > mi_of(c_hi_limit))
    throw InfeasibleTargetError(
        "dense: target MI not expressible with |rho| < 1");

  double lo = 0.0, hi = c_hi_limit;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double mi = mi_of(mid);
    if (std::abs(mi - target_mi) < 1e-12) { lo = hi = mid; break; }
    (mi < target_mi ? lo : hi) = mid;
  }
  const double c = 0.5 * (lo + hi);

  GaussianSpec spec;
  spec.dim0 = spec.dim1 = dim;
  spec.mean.assign(2 * dim, 0.0);
  spec.cov = Matrix::identity(2 * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      spec.cov(i, dim + j) = c * r(i, j);
      spec.cov(dim + j, i) = c * r(i, j);
    }
  if (std::abs(gaussian_mi_formula(spec) - target_mi) > 1e-10)
    throw Error("dense: root finding failed to reach tolerance");
  return spec;
}

}  // namespace

JointTask make_correlated_gaussian(const GaussianTaskParams& params, Rng& rng) {
  if (params.dim < 1) throw ConfigError("dim must be >= 1");
  GaussianSpec spec;
  std::ostringstream name;
  switch (params.structure) {
    case GaussianStructure::kBivariate: {
      if (params.dim != 1) throw ConfigError("bivariate structure is 1 x 1");
      double rho;
      if (params.rho) {
        rho = *params.rho;
        if (!(std::abs(rho) < 1.0))
          throw InfeasibleTargetError("bivariate: |rho| must be < 1");
      } else if (params.target_mi) {
        rho = rho_for_per_pair_mi(*params.target_mi);
      } else {
        throw ConfigError("bivariate: need rho or target_mi");
      }
      spec = paired_spec(1, 1, rho);
      name << "bivariate_rho" << rho;
      break;
    }
    case GaussianStructure::kTwoPair: {
      if (params.dim < 2) throw ConfigError("two-pair structure needs dim >= 2");
      double rho;
      if (params.rho) rho = *params.rho;
      else if (params.target_mi)
        rho = rho_for_per_pair_mi(*params.target_mi / 2.0);
      else throw ConfigError("two_pair: need rho or target_mi");
      if (!(std::abs(rho) < 1.0))
        throw InfeasibleTargetError("two_pair: |rho| must be < 1");
      spec = paired_spec(params.dim, 2, rho);
      name << "two_pair_d" << params.dim;
      break;
    }
    case GaussianStructure::kAllPair: {
      double rho;
      if (params.rho) rho = *params.rho;
      else if (params.target_mi)
        rho = rho_for_per_pair_mi(*params.target_mi /
                                  static_cast<double>(params.dim));
      else throw ConfigError("all_pair: need rho or target_mi");
      if (!(std::abs(rho) < 1.0))
        throw InfeasibleTargetError("all_pair: |rho| must be < 1");
      spec = paired_spec(params.dim, params.dim, rho);
      name << "all_pair_d" << params.dim;
      break;
    }
    case GaussianStructure::kDense: {
      if (!params.target_mi) throw ConfigError("dense: need target_mi");
      spec = dense_spec(params.dim, *params.target_mi, rng);
      name << "dense_d" << params.dim;
      break;
    }
  }
  JointTask task;
  task.name = name.str();
  task.ground_truth_mi = gaussian_mi_formula(spec);
  task.base = std::move(spec);
  return task;
}

PairSet sample_pairs(const JointTask& task, std::size_t n, Rng& rng) {
  if (n < 1) throw Error("sample_pairs: n must be >= 1");
  const std::size_t d0 = task.dim0();
  const std::size_t d1 = task.dim1();
  PairSet out;
  out.x0 = Matrix(n, d0);
  out.x1 = Matrix(n, d1);

  if (task.gaussian_base()) {
    const GaussianSpec& spec = task.gaussian();
    const Matrix l = cholesky(spec.cov);
    std::vector<double> z(spec.dim()), x(spec.dim());
    for (std::size_t i = 0; i < n; ++i) {
      rng.fill_normal(z);
      affine_from_factor(l, spec.mean, z, x);
      for (std::size_t j = 0; j < d0; ++j) out.x0(i, j) = x[j];
      for (std::size_t j = 0; j < d1; ++j) out.x1(i, j) = x[d0 + j];
    }
  } else {
    const auto& u = std::get<UniformNoiseSpec>(task.base);
    for (std::size_t i = 0; i < n; ++i) {
      const double x0 = rng.uniform();
      out.x0(i, 0) = x0;
      out.x1(i, 0) = x0 + u.noise_scale * (2.0 * rng.uniform() - 1.0);
    }
  }

  if (task.transform0 != Transform::kIdentity)
    for (double& v : out.x0.data) v = apply_transform(task.transform0, v);
  if (task.transform1 != Transform::kIdentity)
    for (double& v : out.x1.data) v = apply_transform(task.transform1, v);
  return out;
}

std::pair<Matrix, Affine> standardize(const Matrix& samples) {
  if (samples.rows < 2)
    throw InsufficientSamplesError("standardize: need >= 2 samples");
  const std::size_t n = samples.rows, d = samples.cols;
  Affine affine;
  affine.shift.assign(d, 0.0);
  affine.scale.assign(d, 1.0);
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += samples(i, j);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dlt = samples(i, j) - mean;
      ss += dlt * dlt;
    }
    const double var = ss / static_cast<double>(n - 1);
    if (!(var > 0.0))
      throw ZeroVarianceError("standardize: constant dimension " +
                              std::to_string(j));
    affine.shift[j] = mean;
    affine.scale[j] = std::sqrt(var);
  }
  return {apply_affine(samples, affine), affine};
}

Matrix apply_affine(const Matrix& samples, const Affine& affine) {
  if (samples.cols != affine.shift.size())
    throw ShapeMismatchError("apply_affine: dimension mismatch");
  Matrix out = samples;
  for (std::size_t i = 0; i < out.rows; ++i)
    for (std::size_t j = 0; j < out.cols; ++j)
      out(i, j) = (out(i, j) - affine.shift[j]) / affine.scale[j];
  return out;
}

std::vector<double> pad_to_common_dim(std::span<const double> x,
                                      std::size_t d_target) {
  if (x.size() > d_target)
    throw TargetTooSmallError("pad: target dim " + std::to_string(d_target) +
                              " < input dim " + std::to_string(x.size()));
  std::vector<double> out(d_target, 0.0);
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

Matrix pad_columns(const Matrix& m, std::size_t d_target) {
  if (m.cols > d_target)
    throw TargetTooSmallError("pad: target dim too small");
  if (m.cols == d_target) return m;
  Matrix out(m.rows, d_target, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

PairSet load_csv_pairs(const std::string& path0, const std::string& path1) {
  CsvTable t0 = read_csv(path0);
  CsvTable t1 = read_csv(path1);
  if (t0.values.rows != t1.values.rows)
    throw LengthMismatchError(
        "row count mismatch: " + path0 + " has " +
        std::to_string(t0.values.rows) + ", " + path1 + " has " +
        std::to_string(t1.values.rows));
  PairSet out;
  out.x0 = std::move(t0.values);
  out.x1 = std::move(t1.values);
  return out;
}

}  // namespace bridgemi
