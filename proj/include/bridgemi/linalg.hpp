#pragma once

#include "bridgemi/matrix.hpp"

namespace bridgemi {

// Lower-triangular L with L L^T = a. Requires a symmetric within 1e-10
// relative; throws NotPositiveDefiniteError on a non-positive pivot.
Matrix cholesky(const Matrix& a);

// log det of an SPD matrix via its Cholesky factor.
double logdet_spd(const Matrix& a);

// y = L z + shift for standard-normal z, given the lower factor L.
void affine_from_factor(const Matrix& chol_lower, std::span<const double> shift,
                        std::span<const double> z, std::span<double> out);

}  // namespace bridgemi
