#pragma once

// Driven Kerr oscillator H = K [n(n-1) - xi (a^dagger^2 + a^2)] and the
// chemical double-well Hamiltonian p^2/2m + k4 x^4 - k2 x^2 + k1 x.
//
// The Kerr Hamiltonian only couples Fock levels of equal parity, so it
// block-diagonalizes into even and odd sectors. Below the excited-state
// quantum phase transition (ESQPT) even/odd levels cluster in pairs
// ("spectral kissing"); the density of states peaks at the critical energy.
//
// Note n(n-1) - xi(a^dagger^2 + a^2) = (a^dagger^2 - xi)(a^2 - xi) - xi^2, so
// the ground even/odd pair (cat states |+-sqrt(xi)>) is exactly degenerate
// for every xi; only the excited pairs carry a drive-dependent gap.

#include <optional>
#include <span>
#include <vector>

#include "qumode/fock.hpp"
#include "qumode/spectrum.hpp"

namespace qumode {

struct KerrCatParams {
  double kerr = 1.0;
  double xi = 0.0;
  int cutoff = 80;
};

struct DoubleWellParams {
  double k4 = 1.0;
  double k2 = 0.0;
  double k1 = 0.0;
  double mass = 1.0;
  int cutoff = 80;
};

enum class Parity { kEven, kOdd };

const char* to_string(Parity p);

Operator kerrcat_hamiltonian(const KerrCatParams& p);

/// (-1)^n on a single mode.
Operator parity_operator(int cutoff);

struct ParityBlocks {
  Matrix even;  // levels 0, 2, 4, ...
  Matrix odd;   // levels 1, 3, 5, ...
};

/// Throws ContractViolation if H couples the two sectors beyond 1e-9.
ParityBlocks parity_split(const Operator& h);

struct Level {
  double energy = 0.0;  // excitation energy E - E0
  Parity parity = Parity::kEven;
};

struct SweepPoint {
  double xi = 0.0;
  double ground_energy = 0.0;
  std::vector<Level> levels;  // sorted, levels[0].energy == 0
};

struct SpectrumSweep {
  double kerr = 1.0;
  int cutoff = 0;
  std::vector<SweepPoint> points;
};

/// Lowest eigenvalues with parity labels at one xi (no convergence check).
SweepPoint kerrcat_levels(double kerr, double xi, int cutoff, int n_levels);

/// Per-xi lowest n_levels excitation energies. Each point is recomputed at
/// cutoff + 10; a shift larger than 1e-8 * max(1, |E|) throws
/// ConvergenceError naming the offending xi. Grid points run on up to
/// `threads` worker threads; results do not depend on the thread count.
SpectrumSweep excitation_sweep(double kerr, std::span<const double> xi_grid, int cutoff,
                               int n_levels, int threads = 1);

struct PairGap {
  double energy = 0.0;  // mean excitation energy of the pair
  double gap = 0.0;     // upper minus lower
};

/// Consecutive level pairs (0,1), (2,3), ... per sweep point.
/// Throws DomainError if a point has an odd number of levels.
std::vector<std::vector<PairGap>> pair_gaps(const SpectrumSweep& sweep);

struct DosOptions {
  /// Fraction of the (ascending) spectrum that is histogrammed; the top is
  /// dropped because it is polluted by truncation.
  double fraction = 0.8;
  /// Explicit energy window; overrides `fraction` when set.
  std::optional<std::pair<double, double>> window;
};

/// Normalized histogram (weights sum to 1) of the eigenvalues of H;
/// energies are bin centers. Requires bins >= 10.
Spectrum density_of_states(const Operator& h, int bins, const DosOptions& options = {});

struct DosPeak {
  std::size_t bin = 0;
  double energy = 0.0;
  bool unique = false;
};

/// Highest bin; the ESQPT critical-energy estimate is its center.
DosPeak dos_peak(const Spectrum& dos);

Operator doublewell_hamiltonian(const DoubleWellParams& p);

void write_sweep_csv(std::ostream& out, const SpectrumSweep& sweep);

}  // namespace qumode
