#include <iostream>

#include "CLI11.hpp"
#include "lab.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qumode-lab: run qumode experiments from JSON configs"};
  app.require_subcommand(1);

  std::string run_path;
  CLI::App* run = app.add_subcommand("run", "Validate and run one experiment config");
  run->add_option("config", run_path, "Path to a JSON config")->required();

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Report config problems without running");
  validate->add_option("config", validate_path, "Path to a JSON config")->required();

  std::string write_dir;
  CLI::App* demos = app.add_subcommand("demos", "List the bundled demo configs");
  demos->add_option("--write", write_dir, "Write every demo config into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : qumode::lab::kExitValidation;
  }

  if (*run) return qumode::lab::run_command(run_path, std::cout, std::cerr);
  if (*validate) return qumode::lab::validate_command(validate_path, std::cout, std::cerr);
  std::optional<std::filesystem::path> dir;
  if (!write_dir.empty()) dir = write_dir;
  return qumode::lab::demos_command(dir, std::cout, std::cerr);
}
