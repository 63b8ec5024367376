#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace braidcl {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One named verification result. Composite checks carry their sub-identities in parts.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  std::string detail;
  /// Total input degrees on which every input was evaluated.
  std::vector<int> degrees_covered;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::vector<CheckRecord> parts;

  bool failed() const { return status == CheckStatus::fail; }
  /// Marks a record that could not be evaluated on some inputs.
  bool partial() const { return skipped > 0 || status == CheckStatus::skipped; }
};

/// Builds a record from its parts: fails if any part fails, is skipped if every part is.
CheckRecord combine(std::string name, std::vector<CheckRecord> parts);
/// Joins factor renderings with " ⊗ ", parenthesizing multi-term factors.
std::string join_factors(const std::vector<std::string>& factors);

/// A record for a single yes/no fact.
CheckRecord single(std::string name, bool passed, std::string witness = {}, std::string detail = {});

/// Accumulates per-input outcomes of one identity.
class CheckTally {
 public:
  explicit CheckTally(std::string name) { record_.name = std::move(name); }
  void pass(int degree);
  void fail(int degree, std::string witness, std::string detail = {});
  void skip(int degree);
  CheckRecord finish();

 private:
  CheckRecord record_;
  std::vector<int> seen_;
  std::vector<int> skipped_degrees_;
};

}  // namespace braidcl
