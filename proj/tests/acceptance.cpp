// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.
#include "braidcl/config.hpp"
#include "braidcl/double.hpp"
#include "braidcl/errors.hpp"
#include "braidcl/group.hpp"
#include "braidcl/runner.hpp"
#include "braidcl/spinor.hpp"
#include "braidcl/suites.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace braidcl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects the reasons a criterion failed; an empty list means it passed.
struct Verdict {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const CheckRecord* find(const std::vector<CheckRecord>& records, const std::string& prefix) {
  for (const auto& r : records) {
    if (r.name.rfind(prefix, 0) == 0) return &r;
  }
  return nullptr;
}

void require_clean(Verdict& v, const std::vector<CheckRecord>& records, const std::string& where) {
  for (const auto& r : records) {
    v.require(!r.failed(), where + ": " + r.name + (r.witness ? " @ " + *r.witness : ""));
  }
}

std::size_t partial_count(const std::vector<CheckRecord>& records) {
  std::size_t n = 0;
  for (const auto& r : records) n += r.partial();
  return n;
}

CliffordAlgebra make_algebra(const fixtures::Setup& s, int cap, CliffordOptions co = {}, ExteriorOptions eo = {}) {
  eo.cap = cap;
  return CliffordAlgebra(ExteriorAlgebra(s.psi, eo), s.form, co);
}

fixtures::Setup zero_form(const fixtures::Setup& s) { return {s.name, s.psi, QuadraticForm(s.psi.dim())}; }

Verdict classical_clifford() {
  Verdict v;
  double d4_seconds = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto start = Clock::now();
    const fixtures::Setup s = fixtures::cl(d);
    const CliffordAlgebra cl = make_algebra(s, 8);
    const std::string tag = "Cl(" + std::to_string(d) + ")";
    v.require(cl.size() == (std::size_t{1} << d), tag + ": dimension " + std::to_string(cl.size()));
    const std::vector<Scalar> q(static_cast<std::size_t>(d), Scalar(1));
    auto blade = [&](unsigned b) {
      const auto letters = oracles::blade_letters(b);
      return cl.monomial(static_cast<int>(letters.size()), word_index(letters, d));
    };
    for (unsigned a = 0; a < (1u << d); ++a) {
      for (unsigned b = 0; b < (1u << d); ++b) {
        const auto expected = oracles::blade_product(a, b, q);
        v.require(cl.multiply(blade(a), blade(b)) == blade(expected.blade) * expected.coefficient,
                  tag + ": blade product " + std::to_string(a) + "·" + std::to_string(b));
      }
    }
    const auto records = verify_axioms(GroupStructure(cl));
    v.require(records.size() == 14, tag + ": axiom report has " + std::to_string(records.size()) + " records");
    require_clean(v, records, tag);
    for (const auto& r : records) v.require(r.status != CheckStatus::skipped, tag + ": skipped " + r.name);
    if (d == 4) d4_seconds = seconds_since(start);
  }
  v.require(d4_seconds < 60, "Cl(4) at cap 8 took " + std::to_string(d4_seconds) + " s");
  std::ostringstream out;
  out << "Cl(1..4) dims 2,4,8,16, blade table exact, axioms (a)-(n) pass; Cl(4) cap 8 in " << d4_seconds << " s";
  v.summary = out.str();
  return v;
}

Verdict weyl_inclusion() {
  Verdict v;
  const auto start = Clock::now();
  const CliffordAlgebra cl = make_algebra(fixtures::e2(), 6);
  const SparseVec& p = cl.monomial(1, 0);
  const SparseVec& q = cl.monomial(1, 1);
  v.require(cl.multiply(p, q) - cl.multiply(q, p) == SparseVec::unit(0), "p∘q - q∘p != 1");
  const auto records = verify_axioms(GroupStructure(cl));
  require_clean(v, records, "Weyl");
  const double elapsed = seconds_since(start);
  v.require(elapsed < 30, "took " + std::to_string(elapsed) + " s");
  std::ostringstream out;
  out << "p∘q - q∘p = 1; axioms pass at cap 6 with " << partial_count(records) << " records reporting skipped blocks, in "
      << elapsed << " s";
  v.summary = out.str();
  return v;
}

Verdict two_constructions() {
  Verdict v;
  std::size_t evaluated = 0;
  for (const auto& s : fixtures::standard_five()) {
    const auto records = verify_clifford(make_algebra(s, 6));
    const CheckRecord* r = find(records, "Chevalley product equals the λ_F-quotient product");
    v.require(r != nullptr, s.name + ": record missing");
    if (!r) continue;
    v.require(r->status == CheckStatus::pass && r->evaluated > 0, s.name + ": " + (r->witness ? *r->witness : r->detail));
    evaluated += r->evaluated;
  }
  v.summary = "Chevalley and quotient products agree on E1, E2, E3, Cl(3), mixed (" + std::to_string(evaluated) + " basis pairs)";
  return v;
}

Verdict antisymmetrizers() {
  Verdict v;
  for (const auto& psi : fixtures::test_braids()) {
    ExteriorOptions o;
    o.cap = 4;
    const ExteriorAlgebra ext(psi, o);
    for (int n = 0; n <= 4; ++n) {
      v.require(ext.antisymmetrizer(n) == ext.antisymmetrizer_direct(n), "A_" + std::to_string(n) + " mismatch");
    }
  }
  const std::vector<std::vector<Scalar>> eps = {{1, 1}, {1, 1}};
  ExteriorOptions flip_o;
  flip_o.cap = 4;
  const ExteriorAlgebra flip(BraidOperator::flip(2), flip_o);
  for (int n = 0; n <= 4; ++n) v.require(flip.antisymmetrizer(n) == oracles::diagonal_antisymmetrizer(eps, n), "flip oracle");

  ExteriorOptions o;
  o.cap = 6;
  auto start = Clock::now();
  const ExteriorAlgebra weyl(BraidOperator::flip(2, -1), o);
  const ExactMatrix& factorized = weyl.antisymmetrizer(6);
  const double fast = seconds_since(start);
  start = Clock::now();
  const ExactMatrix direct = weyl.antisymmetrizer_direct(6);
  const double slow = seconds_since(start);
  v.require(factorized == direct, "A_6 factorized != direct");
  v.require(fast < 5, "factorized A_6 took " + std::to_string(fast) + " s");
  v.require(slow >= 10 * fast, "direct/factorized ratio only " + std::to_string(slow / fast));
  std::ostringstream out;
  out << "A_n exact for n <= 4 on " << fixtures::test_braids().size() << " braids; A_6 (d=2) factorized " << fast
      << " s, direct " << slow << " s, ratio " << slow / fast;
  v.summary = out.str();
  return v;
}

Verdict doubling() {
  Verdict v;
  const auto start = Clock::now();
  for (const auto& s : fixtures::standard_five()) {
    const CliffordAlgebra base = make_algebra(s, 4);
    const auto records = verify_doubling(DoubledAlgebra(base), GroupStructure(base));
    for (const std::string name : {"Δ* = ℓ_Fφ", "ℓ+(x)ℓ-(y)", "E(Δx, Δy) = F(x, y)"}) {
      const CheckRecord* r = find(records, name);
      v.require(r && r->status == CheckStatus::pass, s.name + ": " + name);
    }
    require_clean(v, records, s.name);
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60, "took " + std::to_string(elapsed) + " s");
  v.summary = "Δ* = ℓ_Fφ, mixed relation and E(Δx,Δy) = F(x,y) exact on five configurations at cap 4 in " +
              std::to_string(elapsed) + " s";
  return v;
}

Verdict form_independence() {
  Verdict v;
  std::size_t compared = 0;
  for (const auto& s : fixtures::standard_five()) {
    const CliffordAlgebra with = make_algebra(s, 4), without = make_algebra(zero_form(s), 4);
    const GroupStructure gw(with), g0(without);
    const DoubledAlgebra dw(with), d0(without);
    v.require(with.size() == without.size(), s.name + ": basis sizes differ");
    if (with.size() != without.size()) continue;
    for (std::size_t a = 0; a < with.size(); ++a) {
      v.require(gw.coproduct(a) == g0.coproduct(a), s.name + ": φ differs at " + with.render_basis(a));
      v.require(gw.counit(a) == g0.counit(a), s.name + ": ε differs at " + with.render_basis(a));
      v.require(dw.delta_star(a) == d0.delta_star(a), s.name + ": Δ* differs at " + with.render_basis(a));
      ++compared;
    }
  }
  v.summary = "φ, ε and Δ* identical with F and F = 0 on " + std::to_string(compared) + " basis elements";
  return v;
}

Verdict spinor() {
  Verdict v;
  const auto start = Clock::now();
  struct Case {
    fixtures::Setup setup;
    IsotropicSplit split;
    int cap;
    std::size_t dim_s, dim_a;
  };
  for (const Case& c : {Case{fixtures::e3(), {{0}, {1}}, 4, 2, 4}, Case{fixtures::hyperbolic4(), {{0, 1}, {2, 3}}, 6, 4, 16}}) {
    const CliffordAlgebra cl = make_algebra(c.setup, c.cap);
    const SpinorModule sm(cl, c.split);
    v.require(sm.finite(), c.setup.name + ": module truncated");
    v.require(sm.dim() == c.dim_s, c.setup.name + ": dim S = " + std::to_string(sm.dim()));
    v.require(cl.size() == c.dim_a, c.setup.name + ": dim A_F = " + std::to_string(cl.size()));
    v.require(cl.size() == sm.dim() * sm.dim(), c.setup.name + ": dim A_F != (dim S)²");
    const auto records = verify_spinor(sm);
    for (const std::string name : {"ρ is faithful", "commutant of ρ(A_F) is one-dimensional", "dim A_F = (dim S)²"}) {
      const CheckRecord* r = find(records, name);
      v.require(r && r->status == CheckStatus::pass, c.setup.name + ": " + name);
    }
    require_clean(v, records, c.setup.name);
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60, "took " + std::to_string(elapsed) + " s");
  v.summary = "E3: dim S 2, faithful, commutant 1, 4 = 2²; hyperbolic4: dim S 4, dim A_F 16; in " + std::to_string(elapsed) + " s";
  return v;
}

Verdict fault_injection() {
  Verdict v;
  const fixtures::Setup e3 = fixtures::e3();
  std::vector<std::string> caught;
  auto expect_failure = [&](const std::string& fault, const std::vector<CheckRecord>& records, const std::string& check) {
    const CheckRecord* r = find(records, check);
    const bool ok = r && r->failed() && r->witness;
    v.require(ok, fault + " not caught by " + check);
    if (ok) caught.push_back(fault + " -> " + r->name.substr(0, r->name.find(' ')));
  };
  {
    GroupOptions o;
    o.flip_sigma_sign = true;
    expect_failure("σ_F sign", verify_axioms(GroupStructure(make_algebra(e3, 4), o)), "(c)");
  }
  {
    DoubleOptions o;
    o.full_mixed_form = true;
    const CliffordAlgebra base = make_algebra(e3, 4);
    expect_failure("E mixed term", verify_doubling(DoubledAlgebra(base, o), GroupStructure(base)), "Δ* = ℓ_Fφ");
  }
  {
    GroupOptions o;
    o.kappa_generator_sign = true;
    expect_failure("κ sign", verify_axioms(GroupStructure(make_algebra(e3, 4), o)), "(b)");
  }
  {
    GroupOptions o;
    o.epsilon_on_degree_one = true;
    expect_failure("ε on degree 1", verify_axioms(GroupStructure(make_algebra(e3, 4), o)), "(e)");
  }
  {
    ExteriorOptions o;
    o.cap = 4;
    o.swap_partial_antisymmetrizers = true;
    expect_failure("A_nk/B_nk swap", verify_exterior(ExteriorAlgebra(e3.psi, o)), "antisymmetrizer shuffle decompositions");
  }
  {
    CliffordOptions o;
    o.drop_leibniz_sign = true;
    expect_failure("Leibniz sign", verify_clifford(make_algebra(e3, 4, o)), "Chevalley product equals the λ_F-quotient product");
  }
  v.summary = std::to_string(caught.size()) + "/6 faults caught with witnesses";
  return v;
}

Verdict determinism() {
  Verdict v;
  const Config c = load_config(std::filesystem::path(BRAIDCL_CONFIG_DIR) / "e3.json");
  const RunResult a = run(c, Command::axioms), b = run(c, Command::axioms);
  v.require(a.exit_code == exit_code::success, "axioms exit code " + std::to_string(a.exit_code));
  v.require(without_timing(a.report) == without_timing(b.report), "reports differ");
  v.require(a.report.find("\"timing\"") != std::string::npos, "timing field missing");
  v.summary = "two E3 axioms reports byte-identical without timing (" + std::to_string(a.report.size()) + " bytes)";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"classical Clifford reproduction", classical_clifford},
      {"Weyl inclusion", weyl_inclusion},
      {"two-construction equivalence", two_constructions},
      {"antisymmetrizer factorization", antisymmetrizers},
      {"doubling", doubling},
      {"F-independence", form_independence},
      {"spinor representation", spinor},
      {"fault-injection sensitivity", fault_injection},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = v.problems.empty();
    failures += !ok;
    std::printf("%s criterion %zu (%s): %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.summary.c_str());
    for (std::size_t k = 0; k < v.problems.size() && k < 10; ++k) std::printf("    %s\n", v.problems[k].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
