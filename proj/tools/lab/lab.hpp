#pragma once
// Config-driven experiment runner behind the `qumode-lab` executable.
//
// A config is one JSON object:
//   { "experiment": "...", "output": "file", "params": {...},
//     "description": "...", "threads": 1 }
// Relative paths (output files, edge lists) resolve against the directory
// holding the config.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qumode/kerrcat.hpp"
#include "qumode/qpe.hpp"
#include "qumode/sbm.hpp"
#include "qumode/vibronic.hpp"

namespace qumode::lab {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitConvergence = 2,
  kExitIo = 3,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Diagnostic {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  std::string field;
  std::string message;
};

/// "error: params.cutoff: must be >= 1"
std::string to_string(const Diagnostic& d);
bool has_errors(std::span<const Diagnostic> diagnostics);

struct VibronicParams {
  DoktorovSpec spec;
  int cutoff = 0;
  FockIndex prepared;
  int maxq = 0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double e00 = 0.0;
};

struct SbmEvolveParams {
  DenseHamiltonian hamiltonian;  // already in angular-frequency units
  Vector initial;
  std::vector<double> times;
  int cutoff = 0;
};

struct DosParams {
  double xi = 0.0;
  int bins = 60;
  int cutoff = 0;
  double fraction = 0.8;
  std::filesystem::path output;
};

struct KerrSweepParams {
  double kerr = 1.0;
  std::vector<double> xi_grid;
  int cutoff = 80;
  int levels = 20;
  std::optional<DosParams> dos;
};

struct DoubleWellRunParams {
  DoubleWellParams well;
  int levels = 10;
};

struct HafnianParams {
  Eigen::MatrixXd adjacency;
};

struct QpeRunParams {
  QpeSpec spec;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

using ExperimentParams = std::variant<VibronicParams, SbmEvolveParams, KerrSweepParams,
                                      DoubleWellRunParams, HafnianParams, QpeRunParams>;

struct ExperimentConfig {
  std::string experiment;
  std::string description;
  std::filesystem::path output;  // resolved against the config directory
  int threads = 1;
  ExperimentParams params;
};

struct ParsedConfig {
  std::optional<ExperimentConfig> config;  // empty when any error was found
  std::vector<Diagnostic> diagnostics;
};

/// Parses and validates without running. Throws IoError when a referenced
/// data file cannot be read.
ParsedConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);

/// Reads and parses a config file. Throws IoError if it cannot be read.
ParsedConfig load_config(const std::filesystem::path& path);

/// Runs a validated experiment and returns the one-line summary. Throws
/// ConvergenceError, IoError, or the core library's DomainError and
/// ContractViolation.
std::string run_experiment(const ExperimentConfig& config);

struct Demo {
  std::string_view name;
  std::string_view json;
};

std::span<const Demo> demos();
std::string demo_description(const Demo& demo);

/// Command entry points; return the process exit code.
int validate_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int run_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int demos_command(const std::optional<std::filesystem::path>& write_dir, std::ostream& out,
                  std::ostream& err);

}  // namespace qumode::lab
