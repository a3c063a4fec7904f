#pragma once

// Qudit quantum phase estimation on truncated qumodes.
//
// Each qudit is a qumode with cutoff exactly d. The register holds t qudits
// followed by one target qudit carrying an eigenstate of U. Register qudit q
// (q = 0 is leftmost) controls U^{d^{t-1-q}}, so outcome digits read
// big-endian: the first digit is the most significant base-d digit of phi.

#include <cstdint>
#include <string>
#include <vector>

#include "qumode/fock.hpp"

namespace qumode {

/// F_jk = omega^{jk} / sqrt(d), omega = exp(2 pi i / d). d = 2 is Hadamard.
Matrix qudit_fourier(int d);

/// sum_c |c><c| (x) U^{c d^j} on control (x) target, control most significant.
/// Throws ContractViolation if U is not unitary within 1e-9.
Matrix controlled_power(const Matrix& u, int j, int d);

struct QpeSpec {
  int d = 2;
  int t = 1;
  Matrix unitary;
  Vector eigenstate;
};

struct QpeResult {
  /// Probability of each outcome a = sum_q digit_q d^{t-1-q}, length d^t.
  std::vector<double> distribution;
  /// State norm after preparation, each controlled power, and the inverse
  /// Fourier transform.
  std::vector<double> stage_norms;
  std::size_t modal_outcome = 0;
  /// modal_outcome / d^t
  double phase_estimate = 0.0;
};

/// Validates the QpeSpec (unitarity within 1e-9, eigenvector within 1e-8) and
/// returns the exact outcome distribution.
QpeResult run_qpe(const QpeSpec& spec);

/// Eigenphase phi in [0, 1) with U psi = exp(2 pi i phi) psi.
double eigenphase(const Matrix& u, const Vector& psi);

/// Base-d digits of an outcome, most significant first, e.g. "021".
std::string outcome_digits(std::size_t outcome, int d, int t);

/// Multinomial draw of `shots` outcomes, deterministic for a given seed.
/// Throws DomainError unless dist is non-negative and sums to 1 within 1e-9.
std::vector<std::uint64_t> sample_readout(const std::vector<double>& dist, std::uint64_t shots,
                                          std::uint64_t seed);

}  // namespace qumode
