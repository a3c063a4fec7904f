#pragma once

#include "qumode/fock.hpp"

namespace qumode::linalg {

/// max |(A - A^dagger)_ij|
double hermiticity_defect(const Matrix& a);

/// max |(U^dagger U - I)_ij|
double unitarity_defect(const Matrix& u);

/// Ascending eigenvalues of a Hermitian matrix (lower triangle is read).
RealVector hermitian_eigenvalues(const Matrix& h);

/// exp(-i H t) for Hermitian H, via H = V diag(lambda) V^dagger.
Matrix hermitian_exponential(const Matrix& h, double t);

/// exp(G) for anti-Hermitian G, computed as exp(-i H) with H = iG.
Matrix exp_anti_hermitian(const Matrix& generator);

/// U^power by repeated squaring.
Matrix matrix_power(const Matrix& u, unsigned long long power);

}  // namespace qumode::linalg
