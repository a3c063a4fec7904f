#include "qumode/gates.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qumode/errors.hpp"
#include "qumode/linalg.hpp"

namespace qumode {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
}

void require_finite(Complex value, const char* name) {
  require_finite(value.real(), name);
  require_finite(value.imag(), name);
}

Operator single_mode_gate(const Matrix& local, const QumodeRegister& reg, std::size_t mode) {
  const std::size_t modes[] = {mode};
  return embed(local, reg, modes);
}

struct GateBuilder {
  const QumodeRegister& reg;

  Operator operator()(const Displacement& g) const {
    require_finite(g.alpha, "displacement alpha");
    const int d = reg.cutoff(g.mode);
    const Matrix a = single_mode_annihilation(d);
    const Matrix generator = g.alpha * a.adjoint() - std::conj(g.alpha) * a;
    return single_mode_gate(linalg::exp_anti_hermitian(generator), reg, g.mode);
  }

  Operator operator()(const Rotation& g) const {
    require_finite(g.phi, "rotation phi");
    const int d = reg.cutoff(g.mode);
    Matrix r = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) r(n, n) = std::exp(Complex(0.0, n * g.phi));
    return single_mode_gate(r, reg, g.mode);
  }

  Operator operator()(const Squeezing& g) const {
    require_finite(g.z, "squeezing z");
    const int d = reg.cutoff(g.mode);
    const Matrix a = single_mode_annihilation(d);
    const Matrix a2 = a * a;
    const Matrix generator = 0.5 * (std::conj(g.z) * a2 - g.z * a2.adjoint());
    return single_mode_gate(linalg::exp_anti_hermitian(generator), reg, g.mode);
  }

  Operator operator()(const Beamsplitter& g) const {
    return beamsplitter_action(g.theta, g.phi, reg, g.mode_j, g.mode_k);
  }
};

}  // namespace

Operator beamsplitter_action(double theta, double phi, const QumodeRegister& reg,
                             std::size_t mode_j, std::size_t mode_k) {
  require_finite(theta, "beamsplitter theta");
  require_finite(phi, "beamsplitter phi");
  if (mode_j == mode_k) throw DomainError("beamsplitter requires two distinct modes");
  reg.cutoff(mode_j);
  reg.cutoff(mode_k);

  // Generator on the two-mode subspace (mode_j most significant), then lifted.
  const int dj = reg.cutoff(mode_j);
  const int dk = reg.cutoff(mode_k);
  const Matrix aj = single_mode_annihilation(dj);
  const Matrix ak = single_mode_annihilation(dk);
  const Matrix ij = Matrix::Identity(dj, dj);
  const Matrix ik = Matrix::Identity(dk, dk);
  const Matrix aj2 = Eigen::kroneckerProduct(aj, ik).eval();
  const Matrix ak2 = Eigen::kroneckerProduct(ij, ak).eval();
  const Complex phase = std::exp(Complex(0.0, phi));
  const Matrix generator =
      theta * (phase * aj2.adjoint() * ak2 - std::conj(phase) * aj2 * ak2.adjoint());
  const std::size_t modes[] = {mode_j, mode_k};
  return embed(linalg::exp_anti_hermitian(generator), reg, modes);
}

Operator gate_matrix(const GateSpec& gate, const QumodeRegister& reg) {
  return std::visit(GateBuilder{reg}, gate);
}

Operator compose_circuit(std::span<const GateSpec> gates, const QumodeRegister& reg) {
  Operator total = Operator::identity(reg);
  for (const GateSpec& g : gates) total = gate_matrix(g, reg) * total;
  return total;
}

CircuitResult apply_circuit(std::span<const GateSpec> gates, const StateVector& psi,
                            double leak_threshold) {
  StateVector state = psi;
  for (const GateSpec& g : gates) state = gate_matrix(g, psi.reg()) * state;
  std::vector<double> leak = top_level_population(state);
  bool warn = false;
  for (double p : leak) warn = warn || p > leak_threshold;
  return {std::move(state), std::move(leak), warn};
}

double interior_unitarity_defect(const Operator& u, std::span<const std::size_t> modes) {
  const QumodeRegister& reg = u.reg();
  std::vector<Eigen::Index> interior;
  for (std::size_t flat = 0; flat < reg.dimension(); ++flat) {
    bool inside = true;
    for (std::size_t mode : modes) {
      const int d = reg.cutoff(mode);
      const int n = static_cast<int>((flat / reg.stride(mode)) % static_cast<std::size_t>(d));
      inside = inside && n < d - 2;
    }
    if (inside) interior.push_back(static_cast<Eigen::Index>(flat));
  }
  const Matrix gram = u.matrix().adjoint() * u.matrix();
  double worst = 0.0;
  for (Eigen::Index r : interior) {
    for (Eigen::Index c : interior) {
      const Complex expected = r == c ? Complex(1.0) : Complex(0.0);
      worst = std::max(worst, std::abs(gram(r, c) - expected));
    }
  }
  return worst;
}

}  // namespace qumode
