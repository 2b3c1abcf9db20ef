#include "bridgemi/linalg.hpp"

#include <cmath>

#include "bridgemi/errors.hpp"

namespace bridgemi {

Matrix cholesky(const Matrix& a) {
  if (a.rows != a.cols) throw ShapeMismatchError("cholesky: matrix not square");
  const std::size_t n = a.rows;
  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-10 * std::max(scale, 1.0))
        throw Error("cholesky: matrix not symmetric");

  // Plain left-looking factorization; gives direct access to the failing
  // pivot. Dimensions here never exceed a few hundred.
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0))
      throw NotPositiveDefiniteError("cholesky: pivot <= 0 at index " +
                                     std::to_string(j));
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

double logdet_spd(const Matrix& a) {
  Matrix l;
  try {
    l = cholesky(a);
  } catch (const NotPositiveDefiniteError&) {
    throw SingularCovarianceError("logdet: matrix not positive definite");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) s += std::log(l(i, i));
  return 2.0 * s;
}

void affine_from_factor(const Matrix& chol_lower, std::span<const double> shift,
                        std::span<const double> z, std::span<double> out) {
  const std::size_t n = chol_lower.rows;
  for (std::size_t i = 0; i < n; ++i) {
    double s = shift.empty() ? 0.0 : shift[i];
    for (std::size_t k = 0; k <= i; ++k) s += chol_lower(i, k) * z[k];
    out[i] = s;
  }
}

}  // namespace bridgemi
