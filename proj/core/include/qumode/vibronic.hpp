#pragma once

// Two-mode Franck-Condon factors through the Doktorov operator.
//
// The Duschinsky relation between initial and final normal modes is encoded
// as U_Dok = D1(alpha1) D2(alpha2) BS(theta, phi) S1(z1) S2(z2): the squeezers
// act first, then the beamsplitter, then the displacements. A Franck-Condon
// factor is the probability of measuring |n, m> after preparing |n', m'> and
// applying U_Dok, i.e. |<measured|U_Dok|prepared>|^2.

#include "qumode/fock.hpp"
#include "qumode/spectrum.hpp"

namespace qumode {

struct DoktorovSpec {
  Complex alpha1{};
  Complex alpha2{};
  Complex z1{};
  Complex z2{};
  double theta_bs = 0.0;
  double phi_bs = 0.0;
};

/// Requires a two-mode register.
Operator doktorov_operator(const DoktorovSpec& spec, const QumodeRegister& reg);

double franck_condon_factor(const Operator& u, const FockIndex& prepared,
                            const FockIndex& measured);

/// FCFs for every measured (n, m) with n, m <= maxq; weights(n, m).
struct FcfTable {
  FockIndex prepared;
  RealMatrix weights;

  int maxq() const { return static_cast<int>(weights.rows()) - 1; }
  double sum() const { return weights.sum(); }
};

FcfTable fcf_table(const Operator& u, const FockIndex& prepared, int maxq);

/// One line per table entry at e00 + n*omega1 + m*omega2, sorted by energy.
Spectrum stick_spectrum(const FcfTable& table, double omega1, double omega2, double e00);

}  // namespace qumode
