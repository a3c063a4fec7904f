#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lab.hpp"
#include "qumode/errors.hpp"
#include "qumode/graph.hpp"
#include "qumode/linalg.hpp"

namespace qumode::lab {

using nlohmann::json;

namespace {

template <class Write>
void write_file(const std::filesystem::path& path, Write&& write) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

std::string run(const ExperimentConfig& c, const VibronicParams& p) {
  const QumodeRegister reg({p.cutoff, p.cutoff});
  const Operator u = doktorov_operator(p.spec, reg);
  const FcfTable table = fcf_table(u, p.prepared, p.maxq);
  const Spectrum sticks = stick_spectrum(table, p.omega1, p.omega2, p.e00);
  write_file(c.output, [&](std::ostream& out) { write_spectrum_csv(out, sticks); });

  const std::vector<double> top = top_level_population(u * StateVector::basis(reg, p.prepared));
  const double worst = *std::max_element(top.begin(), top.end());
  std::string summary = "fcf sum " + format_real(table.sum()) + ", leak " + format_real(1.0 - table.sum()) +
                        ", top-level population " + format_real(worst);
  if (worst > 1e-6) summary += " (WARNING: raise the cutoff)";
  return summary;
}

std::string run(const ExperimentConfig& c, const SbmEvolveParams& p) {
  const PopulationTrajectory traj = sbm_evolve(p.hamiltonian, p.initial, p.times, p.cutoff);
  const Eigen::Index k = traj.populations.cols();
  double drift = 0.0;
  write_file(c.output, [&](std::ostream& out) {
    out << "time";
    for (Eigen::Index s = 1; s <= k; ++s) out << ",pop_" << s;
    out << '\n';
    for (Eigen::Index i = 0; i < traj.populations.rows(); ++i) {
      out << format_real(traj.times[static_cast<std::size_t>(i)]);
      for (Eigen::Index s = 0; s < k; ++s) out << ',' << format_real(traj.populations(i, s));
      out << '\n';
      drift = std::max(drift, std::abs(traj.populations.row(i).sum() - 1.0));
    }
  });
  return std::to_string(traj.populations.rows()) + " time points, cutoff " + std::to_string(p.cutoff) +
         ", max population drift " + format_real(drift);
}

std::string run(const ExperimentConfig& c, const KerrSweepParams& p) {
  const SpectrumSweep sweep = excitation_sweep(p.kerr, p.xi_grid, p.cutoff, p.levels, c.threads);
  write_file(c.output, [&](std::ostream& out) { write_sweep_csv(out, sweep); });
  std::string summary = std::to_string(sweep.points.size()) + " drive values, cutoff " + std::to_string(p.cutoff) +
                        " (converged at cutoff+10)";
  if (p.dos) {
    DosOptions options;
    options.fraction = p.dos->fraction;
    const Operator h = kerrcat_hamiltonian({p.kerr, p.dos->xi, p.dos->cutoff});
    const Spectrum dos = density_of_states(h, p.dos->bins, options);
    write_file(p.dos->output, [&](std::ostream& out) { write_spectrum_csv(out, dos, "density"); });
    const DosPeak peak = dos_peak(dos);
    summary += "; dos peak at E=" + format_real(peak.energy) + (peak.unique ? "" : " (not unique)") +
               " written to " + p.dos->output.filename().string();
  }
  return summary;
}

std::string run(const ExperimentConfig& c, const DoubleWellRunParams& p) {
  const QumodeRegister reg = QumodeRegister::single(p.well.cutoff);
  const Operator h = doublewell_hamiltonian(p.well);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  const Operator x = quadratures(reg, 0).position;
  const RealVector& e = solver.eigenvalues();
  write_file(c.output, [&](std::ostream& out) {
    out << "level_index,energy,position_expectation\n";
    for (int n = 0; n < p.levels; ++n) {
      const StateVector psi(reg, solver.eigenvectors().col(n));
      double mean_x = psi.expectation(x).real();
      if (std::abs(mean_x) < 1e-12) mean_x = 0.0;
      out << n << ',' << format_real(e(n)) << ',' << format_real(mean_x) << '\n';
    }
  });
  std::string summary = "ground energy " + format_real(e(0));
  if (e.size() >= 3) {
    summary += ", doublet ratio (E1-E0)/(E2-E1) " + format_real((e(1) - e(0)) / (e(2) - e(1)));
  }
  return summary;
}

std::string run(const ExperimentConfig& c, const HafnianParams& p) {
  const GraphAdjacency g(p.adjacency);
  json doc;
  doc["hafnian"] = hafnian(p.adjacency);
  if (g.is_binary() && g.vertices() <= kMaxEnumerationDimension) {
    doc["matchings"] = perfect_matching_count(g);
  } else {
    doc["matchings"] = nullptr;
  }
  write_json(c.output, doc);
  return std::to_string(g.vertices()) + " vertices, hafnian " + format_real(doc["hafnian"].get<double>());
}

std::string run(const ExperimentConfig& c, const QpeRunParams& p) {
  const QpeResult r = run_qpe(p.spec);
  json doc;
  doc["distribution"] = r.distribution;
  doc["modal_outcome"] = outcome_digits(r.modal_outcome, p.spec.d, p.spec.t);
  doc["phase_estimate"] = r.phase_estimate;
  if (p.shots > 0) {
    doc["shots"] = p.shots;
    doc["seed"] = p.seed;
    doc["counts"] = sample_readout(r.distribution, p.shots, p.seed);
  }
  write_json(c.output, doc);
  return "modal outcome " + doc["modal_outcome"].get<std::string>() + " (p=" +
         format_real(r.distribution[r.modal_outcome]) + "), phase estimate " + format_real(r.phase_estimate) +
         ", exact phase " + format_real(eigenphase(p.spec.unitary, p.spec.eigenstate));
}

void print_diagnostics(std::span<const Diagnostic> diags, std::ostream& out) {
  for (const Diagnostic& d : diags) out << to_string(d) << '\n';
}

}  // namespace

std::string run_experiment(const ExperimentConfig& config) {
  const std::string detail = std::visit([&](const auto& p) { return run(config, p); }, config.params);
  return config.experiment + ": wrote " + config.output.string() + " (" + detail + ")";
}

std::string demo_description(const Demo& demo) {
  const json doc = json::parse(demo.json);
  return doc.value("description", "");
}

int validate_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  try {
    const ParsedConfig parsed = load_config(config);
    print_diagnostics(parsed.diagnostics, out);
    if (parsed.diagnostics.empty()) out << config.string() << ": ok\n";
    return has_errors(parsed.diagnostics) ? kExitValidation : kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int run_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  try {
    const ParsedConfig parsed = load_config(config);
    print_diagnostics(parsed.diagnostics, err);
    if (!parsed.config) return kExitValidation;
    out << run_experiment(*parsed.config) << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::logic_error& e) {
    // DomainError and ContractViolation: inputs the validator could not rule out.
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

int demos_command(const std::optional<std::filesystem::path>& write_dir, std::ostream& out, std::ostream& err) {
  std::size_t width = 0;
  for (const Demo& d : demos()) width = std::max(width, d.name.size());
  for (const Demo& d : demos()) {
    if (!write_dir) {
      out << d.name << std::string(width + 2 - d.name.size(), ' ') << demo_description(d) << '\n';
      continue;
    }
    const std::filesystem::path path = *write_dir / (std::string(d.name) + ".json");
    try {
      write_file(path, [&](std::ostream& o) { o << d.json; });
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kExitIo;
    }
    out << path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace qumode::lab
