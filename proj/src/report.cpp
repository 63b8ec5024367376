#include "braidcl/report.hpp"

#include <algorithm>

namespace braidcl {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

CheckRecord combine(std::string name, std::vector<CheckRecord> parts) {
  CheckRecord out;
  out.name = std::move(name);
  bool any_evaluated = false;
  for (const auto& p : parts) {
    out.evaluated += p.evaluated;
    out.skipped += p.skipped;
    if (p.status != CheckStatus::skipped) any_evaluated = true;
    if (p.failed() && out.status != CheckStatus::fail) {
      out.status = CheckStatus::fail;
      out.witness = p.witness;
      out.detail = p.name + (p.detail.empty() ? "" : ": " + p.detail);
    }
    for (int d : p.degrees_covered) {
      if (std::find(out.degrees_covered.begin(), out.degrees_covered.end(), d) == out.degrees_covered.end()) {
        out.degrees_covered.push_back(d);
      }
    }
  }
  std::sort(out.degrees_covered.begin(), out.degrees_covered.end());
  if (out.status != CheckStatus::fail && !any_evaluated) out.status = CheckStatus::skipped;
  if (out.status != CheckStatus::fail && out.skipped > 0) out.detail = "skipped: would exceed truncation degree on some inputs";
  out.parts = std::move(parts);
  return out;
}

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " ⊗ ";
    const bool compound = factors[i].find(' ') != std::string::npos;
    out += compound ? "(" + factors[i] + ")" : factors[i];
  }
  return out;
}

CheckRecord single(std::string name, bool passed, std::string witness, std::string detail) {
  CheckRecord out;
  out.name = std::move(name);
  out.status = passed ? CheckStatus::pass : CheckStatus::fail;
  out.evaluated = 1;
  if (!passed && !witness.empty()) out.witness = std::move(witness);
  out.detail = std::move(detail);
  return out;
}

void CheckTally::pass(int degree) {
  ++record_.evaluated;
  if (std::find(seen_.begin(), seen_.end(), degree) == seen_.end()) seen_.push_back(degree);
}

void CheckTally::fail(int degree, std::string witness, std::string detail) {
  pass(degree);
  if (record_.status != CheckStatus::fail) {
    record_.status = CheckStatus::fail;
    record_.witness = std::move(witness);
    record_.detail = std::move(detail);
  }
}

void CheckTally::skip(int degree) {
  ++record_.skipped;
  if (std::find(skipped_degrees_.begin(), skipped_degrees_.end(), degree) == skipped_degrees_.end()) {
    skipped_degrees_.push_back(degree);
  }
}

CheckRecord CheckTally::finish() {
  for (int d : seen_) {
    if (std::find(skipped_degrees_.begin(), skipped_degrees_.end(), d) == skipped_degrees_.end()) {
      record_.degrees_covered.push_back(d);
    }
  }
  std::sort(record_.degrees_covered.begin(), record_.degrees_covered.end());
  if (record_.status != CheckStatus::fail) {
    if (record_.evaluated == 0) record_.status = CheckStatus::skipped;
    if (record_.skipped > 0) record_.detail = "skipped: would exceed truncation degree on some inputs";
  }
  return std::move(record_);
}

}  // namespace braidcl
