#pragma once

#include "braidcl/config.hpp"
#include "braidcl/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidcl {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { check, dims, build, axioms, double_, spinor };

std::optional<Command> parse_command(std::string_view name);
std::string to_string(Command c);

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int check_failure = 1;
inline constexpr int config_error = 2;
inline constexpr int prerequisite = 3;
inline constexpr int resource_cap = 4;
}  // namespace exit_code

/// Command-line overrides applied on top of the configuration.
struct RunOptions {
  std::optional<int> cap;
  std::optional<int> sigma_n_bound;
  /// Treat skipped checks as failures; refuse truncated spinor modules.
  bool strict = false;
  /// Cross-check every antisymmetrizer up to the cap against the n!-term sum.
  bool oracle = false;
  /// Doubled algebras with more than this many words in a degree trigger a warning.
  Index double_warning_words = Index{1} << 16;
};

struct RunResult {
  int exit_code = exit_code::success;
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;
  /// Set when the run stopped before its checks completed.
  std::string error;
  /// The JSON report; identical across runs apart from the trailing timing field.
  std::string report;
};

RunResult run(const Config& config, Command command, const RunOptions& options = {});

/// Report for a configuration that failed to load.
RunResult config_failure(const std::string& source, Command command, const std::string& message);

/// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// The report with its timing field removed.
std::string without_timing(const std::string& report);

}  // namespace braidcl
