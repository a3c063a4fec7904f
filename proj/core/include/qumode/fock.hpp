#pragma once

// Truncated multi-mode Fock space: register, basis indexing, dense operators
// and state vectors, and the elementary bosonic operators.
//
// Conventions (library-wide):
//   * hbar = 1.
//   * Modes are 0-based. Mode 0 is the most significant digit of the flat
//     index, so |n0, n1, ...> maps to sum_j n_j * prod_{k>j} d_k.
//   * Creation drops the amplitude that would leave the top level, so
//     number(reg, j) == creation(reg, j) * annihilation(reg, j) exactly.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qumode {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Per-mode occupation numbers, one entry per mode of a register.
using FockIndex = std::vector<int>;

class QumodeRegister {
 public:
  /// Every cutoff must be >= 1 and the product must fit in std::size_t.
  explicit QumodeRegister(std::vector<int> cutoffs);

  static QumodeRegister single(int cutoff) { return QumodeRegister({cutoff}); }
  static QumodeRegister uniform(std::size_t modes, int cutoff);

  std::size_t num_modes() const { return cutoffs_.size(); }
  int cutoff(std::size_t mode) const;
  std::span<const int> cutoffs() const { return cutoffs_; }
  std::size_t dimension() const { return dimension_; }

  /// Stride of `mode` in the flat index (product of the cutoffs after it).
  std::size_t stride(std::size_t mode) const;

  std::size_t flat_index(const FockIndex& idx) const;
  FockIndex unflatten(std::size_t flat) const;

  friend bool operator==(const QumodeRegister&, const QumodeRegister&) = default;

 private:
  std::vector<int> cutoffs_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 1;
};

inline std::size_t flat_index(const FockIndex& idx, const QumodeRegister& reg) {
  return reg.flat_index(idx);
}

/// Dense complex matrix on the flattened basis of a register.
class Operator {
 public:
  Operator(QumodeRegister reg, Matrix entries);

  static Operator identity(const QumodeRegister& reg);
  static Operator zero(const QumodeRegister& reg);

  const QumodeRegister& reg() const { return reg_; }
  const Matrix& matrix() const { return entries_; }
  std::size_t dimension() const { return reg_.dimension(); }

  Complex element(const FockIndex& row, const FockIndex& col) const;
  Operator adjoint() const;

  /// max |(A - A^dagger)_ij|
  double hermiticity_defect() const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex scale);

 private:
  QumodeRegister reg_;
  Matrix entries_;
};

Operator operator+(Operator lhs, const Operator& rhs);
Operator operator-(Operator lhs, const Operator& rhs);
Operator operator*(const Operator& lhs, const Operator& rhs);
Operator operator*(Complex scale, Operator op);

class StateVector {
 public:
  StateVector(QumodeRegister reg, Vector amplitudes);

  /// The Fock basis state |idx>.
  static StateVector basis(const QumodeRegister& reg, const FockIndex& idx);

  const QumodeRegister& reg() const { return reg_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return reg_.dimension(); }

  Complex amplitude(const FockIndex& idx) const;
  double norm() const { return amplitudes_.norm(); }

  /// Rescales to unit norm; throws DomainError on the zero vector.
  StateVector& normalize();

  /// |amplitude|^2 per flat index.
  RealVector probabilities() const;

  /// <psi|A|psi>
  Complex expectation(const Operator& op) const;

 private:
  QumodeRegister reg_;
  Vector amplitudes_;
};

StateVector operator*(const Operator& op, const StateVector& psi);

// Elementary operators. All throw DomainError for an invalid mode.
Operator annihilation(const QumodeRegister& reg, std::size_t mode);
Operator creation(const QumodeRegister& reg, std::size_t mode);
Operator number(const QumodeRegister& reg, std::size_t mode);

struct Quadratures {
  Operator position;
  Operator momentum;
};

/// x = sqrt(1/2)(a^dagger + a), p = i sqrt(1/2)(a^dagger - a).
Quadratures quadratures(const QumodeRegister& reg, std::size_t mode);

/// AB - BA. Throws DomainError when the registers differ.
Operator commutator(const Operator& a, const Operator& b);

/// Lifts a matrix acting on `modes` (first listed mode most significant) to
/// the full register; identity on every other mode.
Operator embed(const Matrix& local, const QumodeRegister& reg,
               std::span<const std::size_t> modes);

/// Per-mode single-mode matrices (cutoff x cutoff).
Matrix single_mode_annihilation(int cutoff);
Matrix single_mode_creation(int cutoff);
Matrix single_mode_number(int cutoff);

/// Hermiticity tolerance used by evolve and other Hermitian contracts.
inline constexpr double kHermitianTolerance = 1e-9;

/// exp(-i H t) psi by spectral decomposition of H.
/// Throws ContractViolation if H deviates from Hermitian by more than 1e-9.
StateVector evolve(const Operator& hamiltonian, double time, const StateVector& psi);

/// Diagonalizes a Hermitian operator once and propagates to many times.
class Propagator {
 public:
  explicit Propagator(const Operator& hamiltonian);

  StateVector operator()(double time, const StateVector& psi) const;
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  QumodeRegister reg_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

/// Probability in the top two Fock levels of each mode (level d-1 only when
/// d < 2). Used to monitor truncation error.
std::vector<double> top_level_population(const StateVector& psi);

}  // namespace qumode
