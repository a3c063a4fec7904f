#pragma once

// Test-only reference computations. Nothing here calls into the library's
// eigensolver-based paths, so they can serve as independent oracles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qumode::testing {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// exp(A) by scaling and squaring around a truncated Taylor series.
inline Matrix taylor_exp(const Matrix& a, int terms = 50) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const Matrix x = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k < terms; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// exp(-i H t) psi through the Taylor oracle.
inline Vector taylor_propagate(const Matrix& h, double t, const Vector& psi) {
  return taylor_exp(Complex(0.0, -t) * h) * psi;
}

inline Matrix random_hermitian(int k, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return 0.5 * (m + m.adjoint());
}

inline Vector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Plain ladder matrix written out independently of the library.
inline Matrix ladder(int d) {
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Perfect matchings of a 0/1 graph by listing every pairing of 0..n-1
/// (recursive pair-off without memoization).
inline std::uint64_t brute_force_matchings(const Eigen::MatrixXd& a, std::vector<int> free) {
  if (free.empty()) return 1;
  const int first = free.front();
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < free.size(); ++k) {
    if (a(first, free[k]) == 0.0) continue;
    std::vector<int> rest;
    for (std::size_t r = 1; r < free.size(); ++r) {
      if (r != k) rest.push_back(free[r]);
    }
    total += brute_force_matchings(a, rest);
  }
  return total;
}

inline Eigen::MatrixXd random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) a(i, j) = a(j, i) = 1.0;
    }
  }
  return a;
}

}  // namespace qumode::testing
