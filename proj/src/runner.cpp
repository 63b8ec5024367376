#include "braidcl/runner.hpp"

#include "braidcl/double.hpp"
#include "braidcl/errors.hpp"
#include "braidcl/group.hpp"
#include "braidcl/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace braidcl {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::check, "check"},   {Command::dims, "dims"},          {Command::build, "build"},
    {Command::axioms, "axioms"}, {Command::double_, "double"}, {Command::spinor, "spinor"},
};

ojson terms(const SparseVec& v) {
  std::vector<std::pair<Index, Scalar>> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ojson out = ojson::array();
  for (const auto& [i, c] : sorted) out.push_back({i, format_scalar(c)});
  return out;
}

ojson to_json(const CheckRecord& r) {
  ojson out;
  out["name"] = r.name;
  out["status"] = to_string(r.status);
  if (r.witness) out["witness"] = *r.witness;
  if (!r.detail.empty()) out["detail"] = r.detail;
  out["degrees_covered"] = r.degrees_covered;
  out["evaluated"] = r.evaluated;
  out["skipped"] = r.skipped;
  if (!r.parts.empty()) {
    ojson parts = ojson::array();
    for (const auto& p : r.parts) parts.push_back(to_json(p));
    out["parts"] = parts;
  }
  return out;
}

ojson dims_table(const ExteriorAlgebra& ext) {
  const auto finite = ext.finite_degree();
  const int last = finite ? *finite : ext.cap();
  ojson table = ojson::array();
  for (int n = 0; n <= last; ++n) table.push_back({{"degree", n}, {"dim", ext.degree_dim(n)}});
  return table;
}

ojson basis_table(const CliffordAlgebra& cl) {
  ojson out = ojson::array();
  for (std::size_t g = 0; g < cl.size(); ++g) {
    out.push_back({{"index", g}, {"degree", cl.degree_of(g)}, {"element", cl.render_basis(g)}});
  }
  return out;
}

ojson product_table(const CliffordAlgebra& cl) {
  ojson out = ojson::array();
  for (std::size_t a = 0; a < cl.size(); ++a) {
    for (std::size_t b = 0; b < cl.size(); ++b) {
      if (!cl.within(cl.degree_of(a) + cl.degree_of(b))) continue;
      out.push_back({{"left", a}, {"right", b}, {"product", terms(cl.structure(a, b))}});
    }
  }
  return out;
}

ojson spinor_section(const SpinorModule& sm) {
  const CliffordAlgebra& cl = sm.algebra();
  ojson basis = ojson::array();
  for (std::size_t s = 0; s < sm.dim(); ++s) basis.push_back(sm.render_spinor(s));
  ojson generators = ojson::array();
  for (std::size_t g = cl.offset(1); g < cl.size() && cl.degree_of(g) == 1; ++g) {
    ojson images = ojson::array();
    for (std::size_t s = 0; s < sm.dim(); ++s) {
      images.push_back(sm.action_defined(g, s) ? terms(sm.act(g, s)) : ojson(nullptr));
    }
    generators.push_back({{"element", cl.render_basis(g)}, {"images", images}});
  }
  ojson out;
  out["dimension"] = sm.dim();
  out["finite"] = sm.finite();
  out["basis"] = basis;
  out["generators"] = generators;
  return out;
}

struct Failure {
  int code;
  const char* kind;
};

Failure classify(const Error& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return {exit_code::config_error, "config"};
  if (dynamic_cast<const NotInvolutive*>(&e) || dynamic_cast<const FormNotPsiSymmetric*>(&e) ||
      dynamic_cast<const FormNotCompatible*>(&e) || dynamic_cast<const BraidEquationViolated*>(&e) ||
      dynamic_cast<const SplitInvalid*>(&e) || dynamic_cast<const NotFiniteDimensional*>(&e)) {
    return {exit_code::prerequisite, "prerequisite"};
  }
  if (dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const ResourceLimit*>(&e) ||
      dynamic_cast<const BoundExceeded*>(&e)) {
    return {exit_code::resource_cap, "resource"};
  }
  return {exit_code::check_failure, "internal"};
}

void execute(const Config& cfg, Command command, const RunOptions& options, RunResult& result, ojson& sections) {
  const BraidOperator psi = make_braid(cfg);
  const QuadraticForm form = make_form(cfg);
  auto append = [&](std::vector<CheckRecord> more) {
    for (auto& r : more) result.records.push_back(std::move(r));
  };
  if (command == Command::check) {
    append(verify_inputs(psi, form));
    return;
  }
  if (command == Command::spinor && !cfg.split) throw ParseError("isotropic_split: required by the spinor command");

  ExteriorOptions eo;
  eo.cap = cfg.cap;
  eo.oracle = options.oracle;
  ExteriorAlgebra ext(psi, eo);
  sections["dims"] = dims_table(ext);
  const auto finite = ext.finite_degree();
  sections["finite_degree"] = finite ? ojson(*finite) : ojson(nullptr);
  const int oracle_degree = options.oracle ? cfg.cap : 4;
  if (command == Command::dims) {
    if (options.oracle) append(verify_exterior(ext, oracle_degree));
    return;
  }

  CliffordAlgebra cl(ext, form);
  if (command == Command::build) {
    append(verify_exterior(ext, oracle_degree));
    append(verify_clifford(cl));
    sections["basis"] = basis_table(cl);
    sections["products"] = product_table(cl);
    return;
  }
  if (command == Command::spinor) {
    SpinorOptions so;
    so.strict = options.strict;
    const SpinorModule sm(cl, *cfg.split, so);
    if (!sm.finite()) {
      result.warnings.push_back("the algebra is truncated at degree " + std::to_string(cfg.cap) +
                                "; spinor results are verified up to that degree only");
    }
    append(verify_spinor(sm));
    sections["spinor"] = spinor_section(sm);
    return;
  }

  GroupOptions go;
  go.sigma_n_bound = cfg.sigma_n_bound;
  const GroupStructure gs(cl, go);
  if (command == Command::axioms) {
    append(verify_axioms(gs));
    return;
  }
  const Index words = power(2 * cfg.dimension, cfg.cap);
  if (words > options.double_warning_words) {
    result.warnings.push_back("the doubled algebra needs " + std::to_string(words) + " words in degree " +
                              std::to_string(cfg.cap) + "; a lower --cap keeps the doubling suite fast");
  }
  const DoubledAlgebra da(cl);
  append(verify_doubling(da, gs));
  sections["doubled"] = {{"dimension", da.big().dim()}, {"size", da.big().size()}};
}

/// Prerequisite diagnosis: which input property failed.
std::vector<CheckRecord> diagnose(const Config& cfg, Command command) {
  std::vector<CheckRecord> out;
  try {
    const BraidOperator psi = make_braid(cfg);
    const QuadraticForm form = make_form(cfg);
    out = verify_inputs(psi, form);
    if (command == Command::spinor && cfg.split && psi.satisfies_braid()) {
      ExteriorOptions eo;
      eo.cap = cfg.cap;
      const CliffordAlgebra cl(ExteriorAlgebra(psi, eo), form);
      const CheckOutcome split = validate_isotropic_split(cl, *cfg.split);
      out.push_back(single("isotropic split", split.passed, render_word(split.witness), split.detail));
    }
  } catch (const Error&) {
  }
  return out;
}

std::string assemble(const std::string& source, const std::string& config_echo, Command command,
                     const RunOptions& options, const Config* effective, RunResult& result, const ojson& sections,
                     const char* error_kind, double seconds) {
  ojson report;
  report["tool"] = "braidcl";
  report["version"] = kToolVersion;
  report["command"] = to_string(command);
  report["input_digest"] = "fnv1a64:" + fnv1a_hex(source);
  report["config"] = config_echo.empty() ? ojson(nullptr) : ojson::parse(config_echo);
  ojson opts;
  opts["cap"] = effective ? ojson(effective->cap) : ojson(nullptr);
  opts["sigma_n_bound"] = effective ? ojson(effective->sigma_n_bound) : ojson(nullptr);
  opts["strict"] = options.strict;
  opts["oracle"] = options.oracle;
  report["options"] = opts;
  const bool failed = std::any_of(result.records.begin(), result.records.end(), [](const auto& r) { return r.failed(); });
  report["status"] = !result.error.empty() ? "error" : failed ? "fail" : "pass";
  report["exit_code"] = result.exit_code;
  if (!result.error.empty()) report["error"] = {{"kind", error_kind}, {"message", result.error}};
  report["warnings"] = result.warnings;
  ojson records = ojson::array();
  for (const auto& r : result.records) records.push_back(to_json(r));
  report["records"] = records;
  for (const auto& [key, value] : sections.items()) report[key] = value;
  report["report_digest"] = "fnv1a64:" + fnv1a_hex(report.dump());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  report["timing"] = {{"seconds", std::stod(buf)}};
  return report.dump(2) + "\n";
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  return std::nullopt;
}

std::string to_string(Command c) {
  for (const auto& [k, n] : kCommands) {
    if (k == c) return n;
  }
  return "unknown";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string without_timing(const std::string& report) {
  ojson j = ojson::parse(report);
  j.erase("timing");
  return j.dump(2) + "\n";
}

RunResult run(const Config& config, Command command, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  ojson sections = ojson::object();
  Config cfg = config;
  const char* kind = "";
  try {
    if (options.cap) {
      if (*options.cap < 1) throw ParseError("--cap: must be at least 1");
      cfg.cap = *options.cap;
    }
    if (options.sigma_n_bound) {
      if (*options.sigma_n_bound < 0) throw ParseError("--sigma-n-bound: must be non-negative");
      cfg.sigma_n_bound = *options.sigma_n_bound;
    }
    execute(cfg, command, options, result, sections);
    const bool failed = std::any_of(result.records.begin(), result.records.end(), [](const auto& r) { return r.failed(); });
    const bool partial = std::any_of(result.records.begin(), result.records.end(), [](const auto& r) { return r.partial(); });
    result.exit_code = failed || (options.strict && partial) ? exit_code::check_failure : exit_code::success;
  } catch (const Error& e) {
    const Failure f = classify(e);
    result.exit_code = f.code;
    kind = f.kind;
    result.error = e.what();
    result.records = f.code == exit_code::prerequisite ? diagnose(cfg, command) : std::vector<CheckRecord>{};
    sections = ojson::object();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.report = assemble(config.source, canonical_config(config), command, options, &cfg, result, sections, kind, seconds);
  return result;
}

RunResult config_failure(const std::string& source, Command command, const std::string& message) {
  RunResult result;
  result.exit_code = exit_code::config_error;
  result.error = message;
  result.report = assemble(source, {}, command, {}, nullptr, result, ojson::object(), "config", 0.0);
  return result;
}

}  // namespace braidcl
