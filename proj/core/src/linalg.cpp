#include "qumode/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "qumode/errors.hpp"

namespace qumode::linalg {

double hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("hermiticity_defect: matrix is not square");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) throw DomainError("unitarity_defect: matrix is not square");
  if (u.size() == 0) return 0.0;
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

Matrix hermitian_exponential(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  const Matrix& v = solver.eigenvectors();
  Vector phases(h.rows());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -solver.eigenvalues()(k) * t));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

Matrix exp_anti_hermitian(const Matrix& generator) {
  const Matrix h = Complex(0.0, 1.0) * generator;
  return hermitian_exponential(h, 1.0);
}

Matrix matrix_power(const Matrix& u, unsigned long long power) {
  Matrix result = Matrix::Identity(u.rows(), u.cols());
  Matrix base = u;
  while (power > 0) {
    if (power & 1ULL) result = result * base;
    power >>= 1;
    if (power > 0) base = base * base;
  }
  return result;
}

}  // namespace qumode::linalg
