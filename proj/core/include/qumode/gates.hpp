#pragma once

// Gaussian unitaries on the truncated Fock basis:
//   D_j(alpha)      = exp(alpha a_j^dagger - alpha^* a_j)
//   R_j(phi)        = exp(i phi n_j)
//   S_j(z)          = exp[(z^* a_j^2 - z a_j^dagger^2) / 2]
//   BS_jk(theta,phi)= exp[theta (e^{i phi} a_j^dagger a_k - e^{-i phi} a_j a_k^dagger)]
//
// Each generator is formed from the truncated ladder matrices, which keeps it
// exactly anti-Hermitian, and exponentiated through the spectral decomposition
// of iG. The resulting matrix is unitary on the truncated space; it differs
// from the infinite-dimensional gate only near the cutoff.

#include <span>
#include <variant>
#include <vector>

#include "qumode/fock.hpp"

namespace qumode {

struct Displacement {
  std::size_t mode = 0;
  Complex alpha{};
};

struct Rotation {
  std::size_t mode = 0;
  double phi = 0.0;
};

/// z = r e^{i theta}.
struct Squeezing {
  std::size_t mode = 0;
  Complex z{};
};

struct Beamsplitter {
  std::size_t mode_j = 0;
  std::size_t mode_k = 1;
  double theta = 0.0;
  double phi = 0.0;
};

using GateSpec = std::variant<Displacement, Rotation, Squeezing, Beamsplitter>;

/// Throws DomainError for invalid modes or non-finite parameters.
Operator gate_matrix(const GateSpec& gate, const QumodeRegister& reg);

Operator beamsplitter_action(double theta, double phi, const QumodeRegister& reg,
                             std::size_t mode_j, std::size_t mode_k);

/// Time-ordered product: the first gate acts first (rightmost factor).
Operator compose_circuit(std::span<const GateSpec> gates, const QumodeRegister& reg);

inline constexpr double kDefaultLeakThreshold = 1e-6;

struct CircuitResult {
  StateVector state;
  /// Probability in the top two levels of each mode after the circuit.
  std::vector<double> top_level_population;
  bool truncation_warning = false;
};

/// Applies the circuit to `psi` and reports the truncation diagnostic.
CircuitResult apply_circuit(std::span<const GateSpec> gates, const StateVector& psi,
                            double leak_threshold = kDefaultLeakThreshold);

/// max |(U^dagger U - I)| restricted to basis states whose occupations in
/// `modes` are all < d - 2.
double interior_unitarity_defect(const Operator& u, std::span<const std::size_t> modes);

}  // namespace qumode
