#include "qumode/kerrcat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>

#include "qumode/errors.hpp"
#include "qumode/linalg.hpp"

namespace qumode {

const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

Operator kerrcat_hamiltonian(const KerrCatParams& p) {
  if (p.cutoff < 4) throw DomainError("Kerr-cat Hamiltonian needs cutoff >= 4");
  if (!std::isfinite(p.xi) || !std::isfinite(p.kerr)) throw DomainError("Kerr-cat parameters must be finite");
  const Matrix a = single_mode_annihilation(p.cutoff);
  const Matrix a2 = a * a;
  Matrix h = -p.xi * (a2.adjoint() + a2);
  for (int n = 0; n < p.cutoff; ++n) h(n, n) += static_cast<double>(n) * (n - 1);
  return Operator(QumodeRegister::single(p.cutoff), p.kerr * h);
}

Operator parity_operator(int cutoff) {
  Matrix p = Matrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return Operator(QumodeRegister::single(cutoff), std::move(p));
}

ParityBlocks parity_split(const Operator& h) {
  if (h.reg().num_modes() != 1) throw DomainError("parity_split expects a single-mode operator");
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  const Matrix& m = h.matrix();
  double leak = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((r + c) % 2 == 1) leak = std::max(leak, std::abs(m(r, c)));
    }
  }
  if (leak > 1e-9) {
    throw ContractViolation("operator mixes parity sectors (max coupling " + std::to_string(leak) + ")");
  }
  const Eigen::Index n_even = (dim + 1) / 2;
  const Eigen::Index n_odd = dim / 2;
  ParityBlocks blocks{Matrix(n_even, n_even), Matrix(n_odd, n_odd)};
  for (Eigen::Index r = 0; r < n_even; ++r)
    for (Eigen::Index c = 0; c < n_even; ++c) blocks.even(r, c) = m(2 * r, 2 * c);
  for (Eigen::Index r = 0; r < n_odd; ++r)
    for (Eigen::Index c = 0; c < n_odd; ++c) blocks.odd(r, c) = m(2 * r + 1, 2 * c + 1);
  return blocks;
}

SweepPoint kerrcat_levels(double kerr, double xi, int cutoff, int n_levels) {
  if (n_levels < 1 || n_levels > cutoff) {
    throw DomainError("n_levels must lie in 1..cutoff");
  }
  const ParityBlocks blocks = parity_split(kerrcat_hamiltonian({kerr, xi, cutoff}));

  struct Labeled {
    double energy;
    Parity parity;
  };
  std::vector<Labeled> all;
  all.reserve(static_cast<std::size_t>(cutoff));
  for (double e : linalg::hermitian_eigenvalues(blocks.even)) all.push_back({e, Parity::kEven});
  if (blocks.odd.size() > 0) {
    for (double e : linalg::hermitian_eigenvalues(blocks.odd)) all.push_back({e, Parity::kOdd});
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Labeled& a, const Labeled& b) { return a.energy < b.energy; });

  SweepPoint point{xi, all.front().energy, {}};
  point.levels.reserve(static_cast<std::size_t>(n_levels));
  for (int i = 0; i < n_levels; ++i) {
    point.levels.push_back({all[static_cast<std::size_t>(i)].energy - point.ground_energy,
                            all[static_cast<std::size_t>(i)].parity});
  }
  return point;
}

namespace {

SweepPoint converged_point(double kerr, double xi, int cutoff, int n_levels) {
  SweepPoint point = kerrcat_levels(kerr, xi, cutoff, n_levels);
  const SweepPoint check = kerrcat_levels(kerr, xi, cutoff + 10, n_levels);
  for (std::size_t i = 0; i < point.levels.size(); ++i) {
    const double e = point.levels[i].energy + point.ground_energy;
    const double e_ref = check.levels[i].energy + check.ground_energy;
    if (std::abs(e - e_ref) > 1e-8 * std::max(1.0, std::abs(e))) {
      throw ConvergenceError("level " + std::to_string(i) + " not converged at xi=" +
                             format_real(xi) + " with cutoff " + std::to_string(cutoff) +
                             " (shift " + format_real(std::abs(e - e_ref)) + " at cutoff+10)");
    }
  }
  return point;
}

}  // namespace

SpectrumSweep excitation_sweep(double kerr, std::span<const double> xi_grid, int cutoff,
                               int n_levels, int threads) {
  SpectrumSweep sweep{kerr, cutoff, std::vector<SweepPoint>(xi_grid.size())};
  std::vector<std::exception_ptr> errors(xi_grid.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < xi_grid.size(); i = next++) {
      try {
        sweep.points[i] = converged_point(kerr, xi_grid[i], cutoff, n_levels);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), xi_grid.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  // Report the first failing grid point, independent of scheduling.
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return sweep;
}

std::vector<std::vector<PairGap>> pair_gaps(const SpectrumSweep& sweep) {
  std::vector<std::vector<PairGap>> out;
  out.reserve(sweep.points.size());
  for (const SweepPoint& point : sweep.points) {
    if (point.levels.size() % 2 != 0) {
      throw DomainError("pair_gaps needs an even number of levels per point");
    }
    std::vector<PairGap> gaps;
    for (std::size_t i = 0; i + 1 < point.levels.size(); i += 2) {
      const double lo = point.levels[i].energy;
      const double hi = point.levels[i + 1].energy;
      gaps.push_back({0.5 * (lo + hi), hi - lo});
    }
    out.push_back(std::move(gaps));
  }
  return out;
}

Spectrum density_of_states(const Operator& h, int bins, const DosOptions& options) {
  if (bins < 10) throw DomainError("density_of_states needs at least 10 bins");
  const RealVector eigenvalues = linalg::hermitian_eigenvalues(h.matrix());

  std::vector<double> selected;
  double lo = 0.0;
  double hi = 0.0;
  if (options.window) {
    std::tie(lo, hi) = *options.window;
    if (!(hi > lo)) throw DomainError("density_of_states: empty energy window");
    for (double e : eigenvalues) {
      if (e >= lo && e <= hi) selected.push_back(e);
    }
  } else {
    if (!(options.fraction > 0.0 && options.fraction <= 1.0)) {
      throw DomainError("density_of_states: fraction must lie in (0, 1]");
    }
    const auto count = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::floor(options.fraction * static_cast<double>(eigenvalues.size()))));
    selected.assign(eigenvalues.data(), eigenvalues.data() + count);
    lo = selected.front();
    hi = selected.back();
  }

  const double width = hi > lo ? (hi - lo) / bins : 1.0;
  if (!(hi > lo)) lo -= 0.5 * width * bins;
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (double e : selected) {
    auto b = static_cast<long>(std::floor((e - lo) / width));
    b = std::clamp<long>(b, 0, bins - 1);
    counts[static_cast<std::size_t>(b)] += 1.0;
  }

  Spectrum dos;
  dos.lines.reserve(counts.size());
  const double total = static_cast<double>(selected.size());
  for (int b = 0; b < bins; ++b) {
    const double weight = total > 0.0 ? counts[static_cast<std::size_t>(b)] / total : 0.0;
    dos.lines.push_back({lo + (b + 0.5) * width, weight});
  }
  return dos;
}

DosPeak dos_peak(const Spectrum& dos) {
  if (dos.lines.empty()) throw DomainError("dos_peak: empty histogram");
  DosPeak peak;
  double best = -1.0;
  int ties = 0;
  for (std::size_t b = 0; b < dos.lines.size(); ++b) {
    const double w = dos.lines[b].weight;
    if (w > best) {
      best = w;
      peak.bin = b;
      peak.energy = dos.lines[b].energy;
      ties = 1;
    } else if (w == best) {
      ++ties;
    }
  }
  peak.unique = ties == 1;
  return peak;
}

Operator doublewell_hamiltonian(const DoubleWellParams& p) {
  // k4 = 0 is accepted for the harmonic limit (k2 < 0).
  if (!(p.k4 >= 0.0) || !std::isfinite(p.k4) || !std::isfinite(p.k2) || !std::isfinite(p.k1)) {
    throw DomainError("double well needs finite coefficients with k4 >= 0");
  }
  if (!(p.mass > 0.0)) throw DomainError("double well needs a positive mass");
  if (p.cutoff < 2) throw DomainError("double well needs cutoff >= 2");
  const QumodeRegister reg = QumodeRegister::single(p.cutoff);
  const Quadratures q = quadratures(reg, 0);
  const Matrix& x = q.position.matrix();
  const Matrix& pm = q.momentum.matrix();
  const Matrix x2 = x * x;
  const Matrix h = pm * pm / (2.0 * p.mass) + p.k4 * (x2 * x2) - p.k2 * x2 + p.k1 * x;
  return Operator(reg, h);
}

void write_sweep_csv(std::ostream& out, const SpectrumSweep& sweep) {
  out << "xi,level_index,parity,excitation_energy\n";
  for (const SweepPoint& point : sweep.points) {
    for (std::size_t i = 0; i < point.levels.size(); ++i) {
      out << format_real(point.xi) << ',' << i << ',' << to_string(point.levels[i].parity) << ','
          << format_real(point.levels[i].energy) << '\n';
    }
  }
}

}  // namespace qumode
