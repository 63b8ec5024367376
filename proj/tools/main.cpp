#include "braidcl/errors.hpp"
#include "braidcl/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  every check passed\n"
    "  1  some check failed (with --strict, also when a check was skipped)\n"
    "  2  configuration error: unreadable file, malformed JSON or scalar, index out of range,\n"
    "     singular braid, missing isotropic_split for spinor, invalid flag value\n"
    "  3  prerequisite failure: braid equation, involutivity, ψ-symmetry of F, form compatibility,\n"
    "     invalid isotropic split, or a truncated algebra under --strict spinor\n"
    "  4  resource cap: a required computation exceeds the truncation degree or work budget";

bool write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    if (!out.flush()) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  if (in) buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of braided Clifford algebras and their braided group structure"};
  app.footer(kExitCodes);

  std::string command_name;
  std::string config_path;
  braidcl::RunOptions options;
  std::string output;
  int cap = 0;
  int bound = 0;
  app.add_option("command", command_name, "check | dims | build | axioms | double | spinor")
      ->required()
      ->check(CLI::IsMember({"check", "dims", "build", "axioms", "double", "spinor"}));
  app.add_option("config", config_path, "JSON configuration file")->required();
  auto* cap_opt = app.add_option("--cap", cap, "truncation degree, overriding the configuration");
  auto* bound_opt = app.add_option("--sigma-n-bound", bound, "largest |n| sampled for σ_n, overriding the configuration");
  app.add_flag("--strict", options.strict, "treat skipped checks as failures and refuse truncated spinor modules");
  app.add_flag("--oracle", options.oracle, "cross-check every antisymmetrizer up to the cap against the n!-term sum");
  app.add_option("--output", output, "write the report here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : braidcl::exit_code::config_error;
  }
  if (*cap_opt) options.cap = cap;
  if (*bound_opt) options.sigma_n_bound = bound;
  const braidcl::Command command = *braidcl::parse_command(command_name);

  braidcl::RunResult result;
  try {
    result = braidcl::run(braidcl::load_config(config_path), command, options);
  } catch (const braidcl::ConfigError& e) {
    result = braidcl::config_failure(read_file(config_path), command, e.what());
  }

  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  for (const auto& r : result.records) {
    if (r.failed()) std::cerr << "FAIL " << r.name << (r.witness ? " @ " + *r.witness : "") << "\n";
  }

  if (output.empty()) {
    std::cout << result.report;
  } else if (!write_atomically(output, result.report)) {
    std::cerr << "error: cannot write " << output << "\n";
    return braidcl::exit_code::config_error;
  }
  return result.exit_code;
}
