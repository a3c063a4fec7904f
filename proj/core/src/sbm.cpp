#include "qumode/sbm.hpp"

#include <cmath>
#include <string>

#include "qumode/errors.hpp"
#include "qumode/linalg.hpp"

namespace qumode {

namespace {

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

void validate_hamiltonian(const DenseHamiltonian& h) {
  if (h.entries.rows() != h.entries.cols() || h.entries.rows() < 1) {
    throw DomainError("Hamiltonian must be a non-empty square matrix");
  }
  const double defect = linalg::hermiticity_defect(h.entries);
  if (defect > kSbmHermitianTolerance) {
    throw ContractViolation("Hamiltonian is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

void require_cutoff(int k, int cutoff) {
  if (cutoff < minimum_sbm_cutoff(k)) {
    throw DomainError("SBM mapping of a " + std::to_string(k) + "x" + std::to_string(k) +
                      " matrix needs cutoff >= " + std::to_string(minimum_sbm_cutoff(k)) +
                      ", got " + std::to_string(cutoff));
  }
}

}  // namespace

DenseHamiltonian fmo_hamiltonian() {
  Matrix h(4, 4);
  h << 310.0, -97.9, 5.5, -5.8,
       -97.9, 230.0, 30.1, 7.3,
       5.5, 30.1, 0.0, -58.8,
       -5.8, 7.3, -58.8, 180.0;
  return {h, "1/cm"};
}

DenseHamiltonian to_angular_frequency(const DenseHamiltonian& h) {
  if (h.units != "1/cm") return h;
  return {h.entries * kWavenumberToRadPerPs, "rad/ps"};
}

Operator sbm_projector(int n, int m, int k, int cutoff) {
  if (k < 1) throw DomainError("SBM mapping needs k >= 1");
  if (n < 0 || n >= k || m < 0 || m >= k) {
    throw DomainError("projector indices (" + std::to_string(n) + ", " + std::to_string(m) +
                      ") outside 0.." + std::to_string(k - 1));
  }
  require_cutoff(k, cutoff);

  const Matrix a = single_mode_annihilation(cutoff);
  const Matrix ad = a.adjoint();
  Matrix shift = Matrix::Identity(cutoff, cutoff);
  for (int level = 0; level < cutoff; ++level) shift(level, level) = static_cast<double>(k - 1 - level);
  const Matrix gamma = shift * a;

  const Matrix product = linalg::matrix_power(ad, static_cast<unsigned>(n)) *
                         linalg::matrix_power(gamma, static_cast<unsigned>(k - 1)) *
                         linalg::matrix_power(ad, static_cast<unsigned>(k - 1 - m));
  const double scale =
      std::sqrt(factorial(m) / factorial(n)) / (factorial(k - 1) * factorial(k - 1));
  return Operator(QumodeRegister::single(cutoff), scale * product);
}

Operator map_hamiltonian(const DenseHamiltonian& h, int cutoff) {
  validate_hamiltonian(h);
  const int k = h.size();
  require_cutoff(k, cutoff);
  Operator total = Operator::zero(QumodeRegister::single(cutoff));
  for (int n = 0; n < k; ++n) {
    for (int m = 0; m < k; ++m) {
      const Complex coeff = h.entries(n, m);
      if (coeff == Complex(0.0)) continue;
      total += coeff * sbm_projector(n, m, k, cutoff);
    }
  }
  return total;
}

Matrix restrict_to_levels(const Operator& op, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > op.dimension()) {
    throw DomainError("restrict_to_levels: k out of range");
  }
  return op.matrix().topLeftCorner(k, k);
}

Operator project_to_levels(const Operator& op, int k) {
  const auto dim = static_cast<Eigen::Index>(op.dimension());
  Matrix projected = Matrix::Zero(dim, dim);
  projected.topLeftCorner(k, k) = restrict_to_levels(op, k);
  return Operator(op.reg(), std::move(projected));
}

PopulationTrajectory sbm_evolve(const DenseHamiltonian& h, const Vector& psi0,
                                std::span<const double> times, int cutoff) {
  const int k = h.size();
  if (psi0.size() != k) {
    throw DomainError("initial state has " + std::to_string(psi0.size()) + " entries, expected " +
                      std::to_string(k));
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-9) throw DomainError("initial state is not normalized");

  const Operator projected = project_to_levels(map_hamiltonian(h, cutoff), k);
  const Propagator propagate(projected);

  Vector embedded = Vector::Zero(cutoff);
  embedded.head(k) = psi0;
  const StateVector start(projected.reg(), std::move(embedded));

  PopulationTrajectory out{std::vector<double>(times.begin(), times.end()),
                           RealMatrix::Zero(static_cast<Eigen::Index>(times.size()), k)};
  for (std::size_t i = 0; i < times.size(); ++i) {
    const StateVector psi = propagate(times[i], start);
    out.populations.row(static_cast<Eigen::Index>(i)) =
        psi.amplitudes().head(k).cwiseAbs2().transpose();
  }
  return out;
}

Operator snail_hamiltonian(const SnailParams& p) {
  if (p.cutoff < 3) throw DomainError("SNAIL Hamiltonian needs cutoff >= 3");
  const Matrix a = single_mode_annihilation(p.cutoff);
  const Matrix x = a + a.adjoint();
  const Matrix h = p.omega * single_mode_number(p.cutoff) + p.g3 * (x * x * x);
  return Operator(QumodeRegister::single(p.cutoff), h);
}

}  // namespace qumode
