// Acceptance suite: one PASS/FAIL line per criterion, exit status = number of
// failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lab.hpp"
#include "oracles.hpp"
#include "qumode/gates.hpp"
#include "qumode/graph.hpp"
#include "qumode/kerrcat.hpp"
#include "qumode/linalg.hpp"
#include "qumode/qpe.hpp"
#include "qumode/sbm.hpp"
#include "qumode/vibronic.hpp"

using namespace qumode;
using qumode::testing::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [failed]");
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string list(const std::vector<double>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + sci(xs[i]);
  return out + ")";
}

// 1. Fock algebra.
Verdict fock_algebra() {
  Verdict v;
  double commutator_off_top = 0.0;
  double top_entry_error = 0.0;
  double number_error = 0.0;
  for (int d = 2; d <= 12; ++d) {
    const QumodeRegister reg = QumodeRegister::single(d);
    Matrix c = commutator(annihilation(reg, 0), creation(reg, 0)).matrix() - Matrix::Identity(d, d);
    top_entry_error = std::max(top_entry_error, std::abs(c(d - 1, d - 1) - Complex(-d)));
    c(d - 1, d - 1) = 0.0;
    commutator_off_top = std::max(commutator_off_top, max_abs(c));
    const Matrix product = creation(reg, 0).matrix() * annihilation(reg, 0).matrix();
    number_error = std::max(number_error, max_abs(number(reg, 0).matrix() - product));
  }
  v.require(commutator_off_top <= 1e-12, "[a,a+]-I off top entry max " + sci(commutator_off_top));
  v.require(top_entry_error <= 1e-12, "top entry = -d within " + sci(top_entry_error));
  v.require(number_error <= 1e-12, "|n - a+a| max " + sci(number_error) + " (sqrt rounding)");
  return v;
}

// 2. Gaussian gates.
Verdict gaussian_gates() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const QumodeRegister one = QumodeRegister::single(16);
  const QumodeRegister two({16, 16});
  const std::size_t mode0[] = {0};
  const std::size_t both[] = {0, 1};
  double worst = 0.0;
  for (int g = 0; g < 100; ++g) {
    double defect = 0.0;
    switch (g % 4) {
      case 0:
        defect = interior_unitarity_defect(gate_matrix(Displacement{0, std::polar(unit(rng), angle(rng))}, one), mode0);
        break;
      case 1:
        defect = interior_unitarity_defect(gate_matrix(Squeezing{0, std::polar(unit(rng), angle(rng))}, one), mode0);
        break;
      case 2:
        defect = interior_unitarity_defect(gate_matrix(Rotation{0, angle(rng)}, one), mode0);
        break;
      default:
        defect = interior_unitarity_defect(gate_matrix(Beamsplitter{0, 1, unit(rng), angle(rng)}, two), both);
        break;
    }
    worst = std::max(worst, defect);
  }
  v.require(worst < 1e-7, "100 random gates at d=16, worst interior defect " + sci(worst));

  std::vector<double> err30, err16;
  for (double r : {0.1, 0.5, 1.0}) {
    const double exact = 1.0 / std::cosh(r);
    err30.push_back(std::abs(std::norm(gate_matrix(Squeezing{0, r}, QumodeRegister::single(30)).element({0}, {0})) - exact));
    err16.push_back(std::abs(std::norm(gate_matrix(Squeezing{0, r}, one).element({0}, {0})) - exact));
  }
  v.require(*std::max_element(err30.begin(), err30.end()) <= 1e-6,
            "squeezed-vacuum overlap error at d=30 " + list(err30) + ", at d=16 " + list(err16));
  return v;
}

// 3. Franck-Condon factors.
Verdict franck_condon() {
  Verdict v;
  const QumodeRegister reg({16, 16});
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    DoktorovSpec spec;
    spec.alpha1 = alpha;
    const Operator u = doktorov_operator(spec, reg);
    for (int n = 0; n <= 6; ++n) {
      const double poisson = std::exp(-alpha * alpha) * std::pow(alpha, 2 * n) / qumode::testing::factorial(n);
      worst = std::max(worst, std::abs(franck_condon_factor(u, {0, 0}, {n, 0}) - poisson));
    }
  }
  v.require(worst <= 1e-6, "Poisson FCF max error " + sci(worst));

  // Parameter set of the h2o-illustrative demo.
  const DoktorovSpec demo{Complex(0.55), Complex(-0.3), Complex(0.18), Complex(-0.12), 0.25, 0.0};
  const double leak = 1.0 - fcf_table(doktorov_operator(demo, reg), {0, 0}, 15).sum();
  v.require(leak < 1e-4, "sum-rule leak at d=16 " + sci(leak));
  return v;
}

// 4. SBM mapping.
Verdict sbm_mapping() {
  Verdict v;
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 4;
    const Matrix h = qumode::testing::random_hermitian(k, rng);
    worst = std::max(worst, max_abs(restrict_to_levels(map_hamiltonian({h, ""}, minimum_sbm_cutoff(k)), k) - h));
  }
  v.require(worst <= 1e-9, "200 random H, k=2..5, max entry error " + sci(worst));

  Matrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  const Matrix restricted = restrict_to_levels(map_hamiltonian({z, ""}, 3), 2);
  const Matrix a = qumode::testing::ladder(3);
  const Matrix closed = (Matrix::Identity(3, 3) - 2.0 * a.adjoint() * a).topLeftCorner(2, 2);
  const double z_error = max_abs(restricted - z);
  const double closed_error = max_abs(restricted - closed);
  v.require(z_error <= 1e-12 && closed_error <= 1e-12,
            "Pauli-Z restriction vs diag(1,-1) " + sci(z_error) + ", vs 1-2n " + sci(closed_error));
  return v;
}

// 5. FMO dynamics.
Verdict fmo_dynamics() {
  Verdict v;
  const DenseHamiltonian h = to_angular_frequency(fmo_hamiltonian());
  std::vector<double> times;
  for (int i = 0; i < 100; ++i) times.push_back(i / 99.0);
  Vector psi0 = Vector::Zero(4);
  psi0(0) = 1.0;
  const PopulationTrajectory traj = sbm_evolve(h, psi0, times, minimum_sbm_cutoff(4));

  Eigen::SelfAdjointEigenSolver<Matrix> direct(h.entries);
  const Matrix& vecs = direct.eigenvectors();
  double worst = 0.0;
  double drift = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Eigen::Index row = static_cast<Eigen::Index>(i);
    Vector phases(4);
    for (int j = 0; j < 4; ++j) phases(j) = std::exp(Complex(0.0, -direct.eigenvalues()(j) * times[i]));
    const Vector psi = vecs * phases.asDiagonal() * vecs.adjoint() * psi0;
    for (int s = 0; s < 4; ++s) worst = std::max(worst, std::abs(traj.populations(row, s) - std::norm(psi(s))));
    drift = std::max(drift, std::abs(traj.populations.row(row).sum() - 1.0));
  }
  v.require(worst <= 1e-8, "100 points over 1 ps vs direct diagonalization " + sci(worst));
  v.require(drift <= 1e-8, "population sum drift " + sci(drift));
  return v;
}

// 6. Kerr-cat spectrum.
Verdict kerr_cat() {
  Verdict v;
  const RealVector undriven = linalg::hermitian_eigenvalues(kerrcat_hamiltonian({1.0, 0.0, 80}).matrix());
  std::vector<double> expected;
  for (int n = 0; n < 80; ++n) expected.push_back(n * (n - 1.0));
  std::sort(expected.begin(), expected.end());
  double zero_drive = 0.0;
  for (int n = 0; n < 80; ++n) zero_drive = std::max(zero_drive, std::abs(undriven(n) - expected[static_cast<std::size_t>(n)]));
  v.require(zero_drive <= 1e-10, "xi=0 spectrum vs n(n-1) " + sci(zero_drive));

  const double grid[] = {0.5, 1.0, 2.0, 4.0};
  const auto gaps = pair_gaps(excitation_sweep(1.0, grid, 80, 4));
  std::vector<double> lowest, excited;
  for (const auto& point : gaps) {
    // Gaps below the eigensolver resolution are zero.
    lowest.push_back(point[0].gap < 1e-9 ? 0.0 : point[0].gap);
    excited.push_back(point[1].gap);
  }
  bool strictly = true;
  for (std::size_t i = 1; i < lowest.size(); ++i) strictly = strictly && lowest[i] < lowest[i - 1];
  v.require(strictly, "lowest even-odd pair gap strictly decreasing " + list(lowest) +
                          " (ground doublet is exactly degenerate; next pair " + list(excited) + ")");

  const Operator h5 = kerrcat_hamiltonian({1.0, 5.0, 120});
  const Spectrum dos = density_of_states(h5, 60);
  const DosPeak peak = dos_peak(dos);
  const bool interior = peak.bin > 0 && peak.bin + 1 < dos.lines.size();
  v.require(peak.unique && interior, "xi=5 DOS maximum bin " + std::to_string(peak.bin) + " of " +
                                         std::to_string(dos.lines.size()) + (peak.unique ? " (unique)" : " (tied)") +
                                         " at E=" + sci(peak.energy));
  return v;
}

// 7. Double well.
Verdict double_well() {
  Verdict v;
  const RealVector harmonic = linalg::hermitian_eigenvalues(doublewell_hamiltonian({0.0, -0.5, 0.0, 1.0, 60}).matrix());
  double worst = 0.0;
  for (int n = 0; n <= 9; ++n) worst = std::max(worst, std::abs(harmonic(n) - (n + 0.5)));
  v.require(worst <= 1e-6, "harmonic limit max error " + sci(worst));

  auto ratio = [](double k2) {
    const RealVector e = linalg::hermitian_eigenvalues(doublewell_hamiltonian({1.0, k2, 0.0, 1.0, 80}).matrix());
    return (e(1) - e(0)) / (e(2) - e(1));
  };
  const double deep = ratio(4.0);
  v.require(deep < 1e-2, "deep well k4=1 k2=4 doublet ratio " + sci(deep) + " (k2=6 gives " + sci(ratio(6.0)) + ")");
  return v;
}

// 8. Hafnian.
Verdict hafnian_counts() {
  Verdict v;
  std::mt19937_64 rng(8);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const Eigen::MatrixXd a = qumode::testing::random_graph(n, 0.5, rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const std::uint64_t brute = n % 2 ? 0 : qumode::testing::brute_force_matchings(a, all);
    if (hafnian(a) != static_cast<double>(brute)) ++mismatches;
    if (perfect_matching_count(GraphAdjacency(a)) != brute) ++mismatches;
  }
  v.require(mismatches == 0, "100 random graphs n<=10, mismatches " + std::to_string(mismatches));
  Eigen::MatrixXd k6 = Eigen::MatrixXd::Ones(6, 6);
  k6.diagonal().setZero();
  v.require(hafnian(k6) == 15.0, "haf(K6) = " + sci(hafnian(k6)));
  return v;
}

// 9. Qudit phase estimation.
Verdict phase_estimation() {
  Verdict v;
  auto spec_for = [](int d, int t, double phi) {
    QpeSpec s;
    s.d = d;
    s.t = t;
    s.unitary = Matrix::Identity(d, d);
    s.unitary(1, 1) = std::exp(Complex(0.0, 2 * kPi * phi));
    s.eigenstate = Vector::Zero(d);
    s.eigenstate(1) = 1.0;
    return s;
  };
  double worst = 0.0;
  int cases = 0;
  for (int d : {2, 3, 4}) {
    for (int t = 1; t <= 3; ++t) {
      const int n = static_cast<int>(std::pow(d, t));
      for (int a = 0; a < n; ++a) {
        const QpeResult r = run_qpe(spec_for(d, t, static_cast<double>(a) / n));
        worst = std::max(worst, std::abs(r.distribution[static_cast<std::size_t>(a)] - 1.0));
        if (r.modal_outcome != static_cast<std::size_t>(a)) worst = 1.0;
        ++cases;
      }
    }
  }
  v.require(worst <= 1e-9, std::to_string(cases) + " representable phases, max |P-1| " + sci(worst));
  const QpeResult r = run_qpe(spec_for(2, 3, 0.2));
  const double p = r.distribution[r.modal_outcome];
  v.require(p >= 4.0 / (kPi * kPi), "phi=0.2 modal outcome " + std::to_string(r.modal_outcome) + " p=" + sci(p) +
                                        " vs 4/pi^2=" + sci(4.0 / (kPi * kPi)));
  return v;
}

// 10. CLI demos.
Verdict cli_demos() {
  Verdict v;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "qumode_acceptance";
  fs::remove_all(root);
  int failures = 0;
  std::ostringstream sink;
  for (const char* run_name : {"first", "second"}) {
    const fs::path dir = root / run_name;
    if (lab::demos_command(dir, sink, sink) != lab::kExitOk) ++failures;
    for (const lab::Demo& d : lab::demos()) {
      const fs::path config = dir / (std::string(d.name) + ".json");
      std::ostringstream out;
      if (lab::validate_command(config, out, sink) != lab::kExitOk || out.str().find("error") != std::string::npos) {
        ++failures;
      }
      if (lab::run_command(config, sink, sink) != lab::kExitOk) ++failures;
    }
  }
  v.require(failures == 0, std::to_string(lab::demos().size()) + " demos validate and run, failures " +
                               std::to_string(failures));
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  int files = 0;
  int differing = 0;
  for (const auto& entry : fs::directory_iterator(root / "first")) {
    ++files;
    const fs::path twin = root / "second" / entry.path().filename();
    if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) ++differing;
  }
  v.require(differing == 0 && files > 0,
            "rerun byte-identical, " + std::to_string(files) + " files, " + std::to_string(differing) + " differ");
  fs::remove_all(root);
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fock algebra", 1.0, fock_algebra},
      {2, "Gaussian gates", 10.0, gaussian_gates},
      {3, "FCF oracle equivalence", 10.0, franck_condon},
      {4, "SBM mapping", 30.0, sbm_mapping},
      {5, "FMO dynamics", 5.0, fmo_dynamics},
      {6, "Kerr-cat", 60.0, kerr_cat},
      {7, "Double well", 10.0, double_well},
      {8, "Hafnian", 10.0, hafnian_counts},
      {9, "Qudit QPE", 10.0, phase_estimation},
      {10, "CLI demos", 120.0, cli_demos},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_s;
    const bool pass = v.pass && in_budget;
    failed += !pass;
    std::printf("%s  %2d  %-24s %6.2f s / %g s%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds, c.budget_s,
                in_budget ? "" : " [over budget]", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
