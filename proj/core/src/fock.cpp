#include "qumode/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qumode/errors.hpp"
#include "qumode/linalg.hpp"

namespace qumode {

// ---------------------------------------------------------------------------
// QumodeRegister

QumodeRegister::QumodeRegister(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) throw DomainError("QumodeRegister: at least one mode is required");
  strides_.assign(cutoffs_.size(), 1);
  dimension_ = 1;
  for (std::size_t j = cutoffs_.size(); j-- > 0;) {
    if (cutoffs_[j] < 1) {
      throw DomainError("QumodeRegister: cutoff of mode " + std::to_string(j) + " must be >= 1");
    }
    strides_[j] = dimension_;
    const auto d = static_cast<std::size_t>(cutoffs_[j]);
    if (dimension_ > std::numeric_limits<std::size_t>::max() / d) {
      throw DomainError("QumodeRegister: total dimension overflows");
    }
    dimension_ *= d;
  }
}

QumodeRegister QumodeRegister::uniform(std::size_t modes, int cutoff) {
  return QumodeRegister(std::vector<int>(modes, cutoff));
}

int QumodeRegister::cutoff(std::size_t mode) const {
  if (mode >= cutoffs_.size()) {
    throw DomainError("mode " + std::to_string(mode) + " out of range for a " +
                      std::to_string(cutoffs_.size()) + "-mode register");
  }
  return cutoffs_[mode];
}

std::size_t QumodeRegister::stride(std::size_t mode) const {
  cutoff(mode);
  return strides_[mode];
}

std::size_t QumodeRegister::flat_index(const FockIndex& idx) const {
  if (idx.size() != cutoffs_.size()) {
    throw DomainError("FockIndex has " + std::to_string(idx.size()) + " entries, register has " +
                      std::to_string(cutoffs_.size()) + " modes");
  }
  std::size_t flat = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < 0 || idx[j] >= cutoffs_[j]) {
      throw DomainError("occupation " + std::to_string(idx[j]) + " of mode " + std::to_string(j) +
                        " outside 0.." + std::to_string(cutoffs_[j] - 1));
    }
    flat += static_cast<std::size_t>(idx[j]) * strides_[j];
  }
  return flat;
}

FockIndex QumodeRegister::unflatten(std::size_t flat) const {
  if (flat >= dimension_) {
    throw DomainError("flat index " + std::to_string(flat) + " out of range");
  }
  FockIndex idx(cutoffs_.size());
  for (std::size_t j = 0; j < cutoffs_.size(); ++j) {
    idx[j] = static_cast<int>(flat / strides_[j]);
    flat %= strides_[j];
  }
  return idx;
}

// ---------------------------------------------------------------------------
// Operator

namespace {

void require_same_register(const QumodeRegister& a, const QumodeRegister& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": operands act on different registers");
}

}  // namespace

Operator::Operator(QumodeRegister reg, Matrix entries)
    : reg_(std::move(reg)), entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(reg_.dimension());
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw DomainError("Operator: matrix is " + std::to_string(entries_.rows()) + "x" +
                      std::to_string(entries_.cols()) + ", register dimension is " +
                      std::to_string(dim));
  }
}

Operator Operator::identity(const QumodeRegister& reg) {
  const auto dim = static_cast<Eigen::Index>(reg.dimension());
  return Operator(reg, Matrix::Identity(dim, dim));
}

Operator Operator::zero(const QumodeRegister& reg) {
  const auto dim = static_cast<Eigen::Index>(reg.dimension());
  return Operator(reg, Matrix::Zero(dim, dim));
}

Complex Operator::element(const FockIndex& row, const FockIndex& col) const {
  return entries_(static_cast<Eigen::Index>(reg_.flat_index(row)),
                  static_cast<Eigen::Index>(reg_.flat_index(col)));
}

Operator Operator::adjoint() const { return Operator(reg_, entries_.adjoint()); }

double Operator::hermiticity_defect() const { return linalg::hermiticity_defect(entries_); }

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_register(reg_, rhs.reg_, "operator+");
  entries_ += rhs.entries_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_register(reg_, rhs.reg_, "operator-");
  entries_ -= rhs.entries_;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  entries_ *= scale;
  return *this;
}

Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_register(lhs.reg(), rhs.reg(), "operator*");
  return Operator(lhs.reg(), lhs.matrix() * rhs.matrix());
}

Operator operator*(Complex scale, Operator op) { return op *= scale; }

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(QumodeRegister reg, Vector amplitudes)
    : reg_(std::move(reg)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(reg_.dimension())) {
    throw DomainError("StateVector: length " + std::to_string(amplitudes_.size()) +
                      " does not match register dimension " + std::to_string(reg_.dimension()));
  }
}

StateVector StateVector::basis(const QumodeRegister& reg, const FockIndex& idx) {
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(reg.dimension()));
  amps(static_cast<Eigen::Index>(reg.flat_index(idx))) = 1.0;
  return StateVector(reg, std::move(amps));
}

Complex StateVector::amplitude(const FockIndex& idx) const {
  return amplitudes_(static_cast<Eigen::Index>(reg_.flat_index(idx)));
}

StateVector& StateVector::normalize() {
  const double n = amplitudes_.norm();
  if (n == 0.0 || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite state");
  amplitudes_ /= n;
  return *this;
}

RealVector StateVector::probabilities() const { return amplitudes_.cwiseAbs2(); }

Complex StateVector::expectation(const Operator& op) const {
  require_same_register(reg_, op.reg(), "expectation");
  return amplitudes_.dot(op.matrix() * amplitudes_);
}

StateVector operator*(const Operator& op, const StateVector& psi) {
  require_same_register(op.reg(), psi.reg(), "apply");
  return StateVector(op.reg(), op.matrix() * psi.amplitudes());
}

// ---------------------------------------------------------------------------
// Elementary operators

Matrix single_mode_annihilation(int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix single_mode_creation(int cutoff) { return single_mode_annihilation(cutoff).adjoint(); }

Matrix single_mode_number(int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  Matrix n = Matrix::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

Operator embed(const Matrix& local, const QumodeRegister& reg, std::span<const std::size_t> modes) {
  if (modes.empty()) throw DomainError("embed: no modes given");
  std::size_t local_dim = 1;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    local_dim *= static_cast<std::size_t>(reg.cutoff(modes[i]));
    for (std::size_t k = 0; k < i; ++k) {
      if (modes[k] == modes[i]) throw DomainError("embed: modes must be distinct");
    }
  }
  if (local.rows() != static_cast<Eigen::Index>(local_dim) || local.cols() != local.rows()) {
    throw DomainError("embed: local matrix does not match the product of mode cutoffs");
  }

  // Local strides: first listed mode is the most significant digit.
  std::vector<std::size_t> local_strides(modes.size(), 1);
  for (std::size_t i = modes.size() - 1; i-- > 0;) {
    local_strides[i] = local_strides[i + 1] * static_cast<std::size_t>(reg.cutoff(modes[i + 1]));
  }

  const std::size_t dim = reg.dimension();
  Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t local_col = 0;
    std::size_t base = col;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      const std::size_t s = reg.stride(modes[i]);
      const std::size_t digit = (col / s) % static_cast<std::size_t>(reg.cutoff(modes[i]));
      local_col += digit * local_strides[i];
      base -= digit * s;
    }
    for (std::size_t local_row = 0; local_row < local_dim; ++local_row) {
      const Complex value = local(static_cast<Eigen::Index>(local_row),
                                  static_cast<Eigen::Index>(local_col));
      if (value == Complex(0.0)) continue;
      std::size_t row = base;
      for (std::size_t i = 0; i < modes.size(); ++i) {
        const std::size_t digit =
            (local_row / local_strides[i]) % static_cast<std::size_t>(reg.cutoff(modes[i]));
        row += digit * reg.stride(modes[i]);
      }
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
    }
  }
  return Operator(reg, std::move(full));
}

namespace {

Operator embed_single(const Matrix& local, const QumodeRegister& reg, std::size_t mode) {
  const std::size_t modes[] = {mode};
  return embed(local, reg, modes);
}

}  // namespace

Operator annihilation(const QumodeRegister& reg, std::size_t mode) {
  return embed_single(single_mode_annihilation(reg.cutoff(mode)), reg, mode);
}

Operator creation(const QumodeRegister& reg, std::size_t mode) {
  return embed_single(single_mode_creation(reg.cutoff(mode)), reg, mode);
}

Operator number(const QumodeRegister& reg, std::size_t mode) {
  return embed_single(single_mode_number(reg.cutoff(mode)), reg, mode);
}

Quadratures quadratures(const QumodeRegister& reg, std::size_t mode) {
  const Matrix a = single_mode_annihilation(reg.cutoff(mode));
  const Matrix ad = a.adjoint();
  const double scale = std::sqrt(0.5);
  const Matrix x = scale * (ad + a);
  const Matrix p = Complex(0.0, scale) * (ad - a);
  return {embed_single(x, reg, mode), embed_single(p, reg, mode)};
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Time evolution

Propagator::Propagator(const Operator& hamiltonian) : reg_(hamiltonian.reg()) {
  const double defect = hamiltonian.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    throw ContractViolation("Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian.matrix());
  if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

StateVector Propagator::operator()(double time, const StateVector& psi) const {
  require_same_register(reg_, psi.reg(), "evolve");
  Vector coeffs = eigenvectors_.adjoint() * psi.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(Complex(0.0, -eigenvalues_(k) * time));
  }
  return StateVector(reg_, eigenvectors_ * coeffs);
}

StateVector evolve(const Operator& hamiltonian, double time, const StateVector& psi) {
  return Propagator(hamiltonian)(time, psi);
}

std::vector<double> top_level_population(const StateVector& psi) {
  const QumodeRegister& reg = psi.reg();
  std::vector<double> leak(reg.num_modes(), 0.0);
  const RealVector probs = psi.probabilities();
  for (std::size_t flat = 0; flat < reg.dimension(); ++flat) {
    const double p = probs(static_cast<Eigen::Index>(flat));
    if (p == 0.0) continue;
    for (std::size_t j = 0; j < reg.num_modes(); ++j) {
      const int d = reg.cutoff(j);
      const int n = static_cast<int>((flat / reg.stride(j)) % static_cast<std::size_t>(d));
      if (n >= d - 2) leak[j] += p;
    }
  }
  return leak;
}

}  // namespace qumode
