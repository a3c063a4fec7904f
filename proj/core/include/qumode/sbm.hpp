#pragma once

// Single-bosonic-mode (SBM) mapping of a k x k Hamiltonian onto one qumode.
//
//   H_sbm = sum_{n,m} H_nm P_nm
//   P_nm  = sqrt(m!/n!) / ((k-1)!)^2 * (a^dagger)^n Gamma_k^{k-1} (a^dagger)^{k-1-m}
//   Gamma_k = ((k-1) - n) a
//
// (a^dagger)^{k-1-m} lifts |m> to |k-1>, Gamma_k^{k-1} walks it down to |0>
// and vanishes on every other level below 2k-1, and (a^dagger)^n lands on
// |n>. The intermediate products reach level 2(k-1), so the qumode must keep
// at least 2k-1 levels. Outside levels 0..k-1 H_sbm is not Hermitian; time
// evolution projects it onto the computational subspace first.

#include <span>
#include <string>
#include <vector>

#include "qumode/fock.hpp"

namespace qumode {

struct DenseHamiltonian {
  Matrix entries;
  std::string units = "dimensionless";

  int size() const { return static_cast<int>(entries.rows()); }
};

inline constexpr double kSbmHermitianTolerance = 1e-10;

/// 2*pi*c in rad/ps per cm^-1.
inline constexpr double kWavenumberToRadPerPs = 2.0 * 3.14159265358979323846 * 2.99792458e-2;

/// Four-site FMO exciton Hamiltonian, in cm^-1.
DenseHamiltonian fmo_hamiltonian();

/// Converts "1/cm" entries to rad/ps; other units are returned unchanged.
DenseHamiltonian to_angular_frequency(const DenseHamiltonian& h);

/// Smallest cutoff for which the projector products are exact: 2k - 1.
inline int minimum_sbm_cutoff(int k) { return 2 * k - 1; }

Operator sbm_projector(int n, int m, int k, int cutoff);

/// Throws ContractViolation for non-Hermitian H, DomainError for a small cutoff.
Operator map_hamiltonian(const DenseHamiltonian& h, int cutoff);

/// Upper-left k x k block.
Matrix restrict_to_levels(const Operator& op, int k);

/// P op P with P the projector on levels 0..k-1, on the full qumode space.
Operator project_to_levels(const Operator& op, int k);

struct PopulationTrajectory {
  std::vector<double> times;
  /// populations(t, level)
  RealMatrix populations;
};

/// Embeds psi0 into levels 0..k-1 and propagates under the projected H_sbm.
/// Throws DomainError if psi0 is not normalized within 1e-9.
PopulationTrajectory sbm_evolve(const DenseHamiltonian& h, const Vector& psi0,
                                std::span<const double> times, int cutoff);

struct SnailParams {
  double omega = 1.0;
  double g3 = 0.0;
  int cutoff = 3;
};

/// omega n + g3 (a + a^dagger)^3.
Operator snail_hamiltonian(const SnailParams& p);

}  // namespace qumode
