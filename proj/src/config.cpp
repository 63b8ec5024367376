#include "braidcl/config.hpp"

#include "braidcl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace braidcl {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"dimension", "braid", "form", "cap", "sigma_n_bound", "isotropic_split"};

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message);
}

int read_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) fail(field, "integer out of range");
  return static_cast<int>(x);
}

int read_index(const json& v, const std::string& field, int dim) {
  const int i = read_int(v, field);
  if (i < 1 || i > dim) {
    throw IndexOutOfRange(field + ": index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  }
  return i - 1;
}

Scalar read_scalar(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a scalar string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

const json& tuple(const json& entries, std::size_t n, std::size_t arity, const std::string& name) {
  const json& e = entries[n];
  if (!e.is_array() || e.size() != arity) {
    fail(name + "[" + std::to_string(n) + "]", "expected an array of " + std::to_string(arity) + " items");
  }
  return e;
}

std::vector<int> read_indices(const json& v, const std::string& field, int dim) {
  if (!v.is_array()) fail(field, "expected an array of indices");
  std::vector<int> out;
  for (std::size_t n = 0; n < v.size(); ++n) out.push_back(read_index(v[n], field + "[" + std::to_string(n) + "]", dim));
  return out;
}

}  // namespace

Config parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
      if (text[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
  if (!root.is_object()) fail("(root)", "expected an object");
  for (const auto& [key, value] : root.items()) {
    if (!kKeys.count(key)) fail(key, "unknown field");
  }

  Config c;
  c.source = std::string(text);
  if (!root.contains("dimension")) fail("dimension", "missing");
  c.dimension = read_int(root["dimension"], "dimension");
  if (c.dimension < 1 || c.dimension > 64) fail("dimension", "must lie in 1..64");
  const int d = c.dimension;

  if (!root.contains("braid")) fail("braid", "missing");
  const json& braid = root["braid"];
  if (!braid.is_array()) fail("braid", "expected an array of [i, j, k, l, scalar] entries");
  for (std::size_t n = 0; n < braid.size(); ++n) {
    const json& e = tuple(braid, n, 5, "braid");
    const std::string at = "braid[" + std::to_string(n) + "]";
    BraidEntry b;
    b.i = read_index(e[0], at + "[0]", d);
    b.j = read_index(e[1], at + "[1]", d);
    b.k = read_index(e[2], at + "[2]", d);
    b.l = read_index(e[3], at + "[3]", d);
    b.value = read_scalar(e[4], at + "[4]");
    c.braid.push_back(b);
  }

  if (root.contains("form")) {
    const json& form = root["form"];
    if (!form.is_array()) fail("form", "expected an array of [i, j, scalar] entries");
    for (std::size_t n = 0; n < form.size(); ++n) {
      const json& e = tuple(form, n, 3, "form");
      const std::string at = "form[" + std::to_string(n) + "]";
      FormEntry f;
      f.i = read_index(e[0], at + "[0]", d);
      f.j = read_index(e[1], at + "[1]", d);
      f.value = read_scalar(e[2], at + "[2]");
      c.form.push_back(f);
    }
  }
  if (root.contains("cap")) {
    c.cap = read_int(root["cap"], "cap");
    if (c.cap < 1) fail("cap", "must be at least 1");
  }
  if (root.contains("sigma_n_bound")) {
    c.sigma_n_bound = read_int(root["sigma_n_bound"], "sigma_n_bound");
    if (c.sigma_n_bound < 0) fail("sigma_n_bound", "must be non-negative");
  }
  if (root.contains("isotropic_split")) {
    const json& s = root["isotropic_split"];
    if (!s.is_object() || !s.contains("minus") || !s.contains("plus") || s.size() != 2) {
      fail("isotropic_split", "expected an object with exactly the fields minus and plus");
    }
    c.split = IsotropicSplit{read_indices(s["minus"], "isotropic_split.minus", d),
                             read_indices(s["plus"], "isotropic_split.plus", d)};
  }

  const auto n = static_cast<std::size_t>(d * d);
  if (rank(braid_matrix(c)) != n) throw NonInvertibleBraid("braid: the entries define a singular matrix");
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const IndexOutOfRange& e) {
    throw IndexOutOfRange(path.string() + ": " + e.what());
  } catch (const NonInvertibleBraid& e) {
    throw NonInvertibleBraid(path.string() + ": " + e.what());
  }
}

ExactMatrix braid_matrix(const Config& config) {
  const int d = config.dimension;
  const auto n = static_cast<std::size_t>(d * d);
  ExactMatrix m(n, n);
  for (const auto& e : config.braid) {
    const auto row = static_cast<std::size_t>(e.k * d + e.l);
    const auto col = static_cast<std::size_t>(e.i * d + e.j);
    m.set(row, col, m.at(row, col) + e.value);
  }
  return m;
}

BraidOperator make_braid(const Config& config) { return BraidOperator(config.dimension, braid_matrix(config)); }

QuadraticForm make_form(const Config& config) {
  const auto d = static_cast<std::size_t>(config.dimension);
  std::vector<std::vector<Scalar>> entries(d, std::vector<Scalar>(d));
  for (const auto& e : config.form) {
    entries[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] += e.value;
  }
  return QuadraticForm(std::move(entries));
}

std::string canonical_config(const Config& config) {
  nlohmann::ordered_json out;
  out["dimension"] = config.dimension;
  auto braid = nlohmann::ordered_json::array();
  for (const auto& e : config.braid) {
    braid.push_back({e.i + 1, e.j + 1, e.k + 1, e.l + 1, format_scalar(e.value)});
  }
  out["braid"] = braid;
  auto form = nlohmann::ordered_json::array();
  for (const auto& e : config.form) form.push_back({e.i + 1, e.j + 1, format_scalar(e.value)});
  out["form"] = form;
  out["cap"] = config.cap;
  out["sigma_n_bound"] = config.sigma_n_bound;
  if (config.split) {
    auto shift = [](std::vector<int> v) {
      for (int& x : v) ++x;
      return v;
    };
    out["isotropic_split"] = {{"minus", shift(config.split->minus)}, {"plus", shift(config.split->plus)}};
  }
  return out.dump();
}

}  // namespace braidcl
