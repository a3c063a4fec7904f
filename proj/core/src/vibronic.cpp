#include "qumode/vibronic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qumode/errors.hpp"
#include "qumode/gates.hpp"

namespace qumode {

Operator doktorov_operator(const DoktorovSpec& spec, const QumodeRegister& reg) {
  if (reg.num_modes() != 2) {
    throw DomainError("Doktorov operator needs a two-mode register, got " +
                      std::to_string(reg.num_modes()) + " modes");
  }
  // Listed in time order; compose_circuit puts the first gate rightmost.
  const GateSpec gates[] = {
      Squeezing{1, spec.z2},
      Squeezing{0, spec.z1},
      Beamsplitter{0, 1, spec.theta_bs, spec.phi_bs},
      Displacement{1, spec.alpha2},
      Displacement{0, spec.alpha1},
  };
  return compose_circuit(gates, reg);
}

double franck_condon_factor(const Operator& u, const FockIndex& prepared,
                            const FockIndex& measured) {
  return std::norm(u.element(measured, prepared));
}

FcfTable fcf_table(const Operator& u, const FockIndex& prepared, int maxq) {
  const QumodeRegister& reg = u.reg();
  if (reg.num_modes() != 2) throw DomainError("fcf_table needs a two-mode register");
  if (maxq < 0 || maxq >= reg.cutoff(0) || maxq >= reg.cutoff(1)) {
    throw DomainError("fcf_table: maxq " + std::to_string(maxq) +
                      " must be below every per-mode cutoff");
  }
  const auto col = static_cast<Eigen::Index>(reg.flat_index(prepared));
  FcfTable table{prepared, RealMatrix::Zero(maxq + 1, maxq + 1)};
  for (int n = 0; n <= maxq; ++n) {
    for (int m = 0; m <= maxq; ++m) {
      const auto row = static_cast<Eigen::Index>(reg.flat_index({n, m}));
      table.weights(n, m) = std::norm(u.matrix()(row, col));
    }
  }
  return table;
}

Spectrum stick_spectrum(const FcfTable& table, double omega1, double omega2, double e00) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) {
    throw DomainError("stick_spectrum: mode frequencies must be positive");
  }
  if (!std::isfinite(e00)) throw DomainError("stick_spectrum: e00 must be finite");
  Spectrum spectrum;
  const int maxq = table.maxq();
  spectrum.lines.reserve(static_cast<std::size_t>((maxq + 1) * (maxq + 1)));
  for (int n = 0; n <= maxq; ++n) {
    for (int m = 0; m <= maxq; ++m) {
      spectrum.lines.push_back({e00 + n * omega1 + m * omega2, table.weights(n, m)});
    }
  }
  std::stable_sort(spectrum.lines.begin(), spectrum.lines.end(),
                   [](const SpectralLine& a, const SpectralLine& b) { return a.energy < b.energy; });
  return spectrum;
}

}  // namespace qumode
