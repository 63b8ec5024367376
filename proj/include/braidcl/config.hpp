#pragma once

#include "braidcl/clifford.hpp"
#include "braidcl/spinor.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidcl {

/// ψ(e_i⊗e_j) += value·(e_k⊗e_l). Indices are zero-based once loaded.
struct BraidEntry {
  int i = 0, j = 0, k = 0, l = 0;
  Scalar value;
};

/// F(e_i, e_j) += value.
struct FormEntry {
  int i = 0, j = 0;
  Scalar value;
};

struct Config {
  int dimension = 0;
  std::vector<BraidEntry> braid;
  std::vector<FormEntry> form;
  int cap = 6;
  int sigma_n_bound = 2;
  std::optional<IsotropicSplit> split;
  /// The raw input, for digests.
  std::string source;
};

/// Parses the JSON configuration format. Throws ParseError, IndexOutOfRange or NonInvertibleBraid,
/// each naming the offending field.
Config parse_config(std::string_view text);
/// Reads and parses a file; unreadable files raise ParseError.
Config load_config(const std::filesystem::path& path);

/// The braid matrix, column i·d+j holding ψ(e_i⊗e_j).
ExactMatrix braid_matrix(const Config& config);
BraidOperator make_braid(const Config& config);
QuadraticForm make_form(const Config& config);

/// Canonical JSON text of the configuration: fixed key order, one-based indices, canonical scalars.
std::string canonical_config(const Config& config);

}  // namespace braidcl
