#include "braidcl/suites.hpp"

#include "braidcl/errors.hpp"

#include <algorithm>
#include <string>

namespace braidcl {

namespace {

CheckRecord from_outcome(std::string name, const CheckOutcome& o) {
  return single(std::move(name), o.passed, render_word(o.witness), o.detail);
}

/// First column on which two equally shaped matrices differ.
std::optional<std::size_t> first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!(a.column(c) == b.column(c))) return c;
  }
  return std::nullopt;
}

std::string render_homogeneous(int dim, int n, const SparseVec& v) {
  const std::string s = TensorElement::homogeneous(dim, n, v).render();
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::vector<CheckRecord> verify_inputs(const BraidOperator& psi, const QuadraticForm& form) {
  std::vector<CheckRecord> out;
  out.push_back(from_outcome("braid equation", psi.braid_check()));
  {
    const std::size_t n = static_cast<std::size_t>(psi.dim() * psi.dim());
    const std::size_t r = rank(psi.matrix());
    out.push_back(single("ψ is invertible", r == n, {}, "rank " + std::to_string(r) + " of " + std::to_string(n)));
  }
  out.push_back(from_outcome("ψ is involutive", psi.involutive_check()));
  if (form.dim() != psi.dim()) {
    out.push_back(single("form compatibility", false, {}, "form and braid act on spaces of different dimension"));
    return out;
  }
  out.push_back(from_outcome("form compatibility (F⊗id)(id⊗ψ) = (id⊗F)(ψ⊗id)", check_form_compatibility(psi, form)));
  out.push_back(from_outcome("F is ψ-symmetric", check_psi_symmetric(psi, form)));
  return out;
}

std::vector<CheckRecord> verify_exterior(const ExteriorAlgebra& ext, int oracle_degree) {
  const int d = ext.dim();
  const int top = ext.top_degree();
  std::vector<CheckRecord> out;
  {
    CheckTally tally("factorized A_n equals the n!-term sum");
    for (int n = 0; n <= std::min(oracle_degree, ext.cap()); ++n) {
      if (power(d, n) > ext.options().work_budget) {
        tally.skip(n);
        continue;
      }
      const ExactMatrix direct = ext.antisymmetrizer_direct(n);
      if (auto c = first_difference(ext.antisymmetrizer(n), direct)) {
        tally.fail(n, render_word(word_letters(*c, n, d)));
      } else {
        tally.pass(n);
      }
    }
    out.push_back(tally.finish());
  }
  {
    CheckTally left("A_{n+k} = (A_n⊗A_k)A_{nk}");
    CheckTally right("A_{n+k} = B_{nk}(A_n⊗A_k)");
    for (int total = 2; total <= std::min(oracle_degree + 1, ext.cap()); ++total) {
      if (power(d, total) > 4096) break;
      for (int n = 1; n < total; ++n) {
        const int k = total - n;
        const auto [a, b] = ext.partial_antisym(n, k);
        const ExactMatrix blocks = kron(ext.antisymmetrizer(n), ext.antisymmetrizer(k));
        const ExactMatrix& full = ext.antisymmetrizer(total);
        if (auto c = first_difference(blocks * a, full)) {
          left.fail(total, render_word(word_letters(*c, total, d)), "n=" + std::to_string(n));
        } else {
          left.pass(total);
        }
        if (auto c = first_difference(b * blocks, full)) {
          right.fail(total, render_word(word_letters(*c, total, d)), "n=" + std::to_string(n));
        } else {
          right.pass(total);
        }
      }
    }
    out.push_back(combine("antisymmetrizer shuffle decompositions", {left.finish(), right.finish()}));
  }
  {
    CheckTally closed("θ∧η lies in W^∧");
    CheckTally assoc("(θ∧η)∧ζ = θ∧(η∧ζ)");
    for (int n = 0; n <= top; ++n) {
      for (int k = 0; n + k <= top; ++k) {
        for (const auto& a : ext.basis(n)) {
          for (const auto& b : ext.basis(k)) {
            const std::string pair = render_homogeneous(d, n, a) + " ⊗ " + render_homogeneous(d, k, b);
            const SparseVec ab = ext.wedge_homogeneous(n, a, k, b);
            if (ext.coordinates(n + k, ab)) {
              closed.pass(n + k);
            } else {
              closed.fail(n + k, pair);
            }
            for (int m = 0; n + k + m <= top; ++m) {
              for (const auto& c : ext.basis(m)) {
                const SparseVec lhs = ext.wedge_homogeneous(n + k, ab, m, c);
                const SparseVec rhs = ext.wedge_homogeneous(n, a, k + m, ext.wedge_homogeneous(k, b, m, c));
                if (lhs == rhs) {
                  assoc.pass(n + k + m);
                } else {
                  assoc.fail(n + k + m, pair + " ⊗ " + render_homogeneous(d, m, c));
                }
              }
            }
          }
        }
      }
    }
    out.push_back(closed.finish());
    out.push_back(assoc.finish());
  }
  return out;
}

std::vector<CheckRecord> verify_clifford(const CliffordAlgebra& cl) {
  const std::size_t n = cl.size();
  const int d = cl.dim();
  std::vector<CheckRecord> out;
  auto pair_name = [&](std::size_t a, std::size_t b) { return join_factors({cl.render_basis(a), cl.render_basis(b)}); };
  {
    CheckTally tally("Chevalley product equals the λ_F-quotient product");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const int deg = cl.degree_of(a) + cl.degree_of(b);
        if (!cl.within(deg)) {
          tally.skip(deg);
          continue;
        }
        try {
          if (cl.structure(a, b) == cl.quotient_product(a, b)) {
            tally.pass(deg);
          } else {
            tally.fail(deg, pair_name(a, b));
          }
        } catch (const CapExceeded&) {
          tally.skip(deg);
        } catch (const Error& e) {
          tally.fail(deg, pair_name(a, b), e.what());
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    CheckTally tally("∘ is associative");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const int deg = cl.degree_of(a) + cl.degree_of(b) + cl.degree_of(c);
          if (!cl.within(deg)) {
            tally.skip(deg);
            continue;
          }
          try {
            const SparseVec lhs = cl.multiply(cl.structure(a, b), SparseVec::unit(c));
            const SparseVec rhs = cl.multiply(SparseVec::unit(a), cl.structure(b, c));
            if (lhs == rhs) {
              tally.pass(deg);
            } else {
              tally.fail(deg, join_factors({cl.render_basis(a), cl.render_basis(b), cl.render_basis(c)}));
            }
          } catch (const CapExceeded&) {
            tally.skip(deg);
          } catch (const Error& e) {
            tally.fail(deg, join_factors({cl.render_basis(a), cl.render_basis(b), cl.render_basis(c)}), e.what());
          }
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    CheckTally tally("1 is a two-sided unit");
    for (std::size_t a = 0; a < n; ++a) {
      try {
        const SparseVec e = SparseVec::unit(a);
        if (cl.structure(0, a) == e && cl.structure(a, 0) == e) {
          tally.pass(cl.degree_of(a));
        } else {
          tally.fail(cl.degree_of(a), cl.render_basis(a));
        }
      } catch (const Error& e) {
        tally.fail(cl.degree_of(a), cl.render_basis(a), e.what());
      }
    }
    out.push_back(tally.finish());
  }
  if (cl.braid().involutive()) {
    // x∘y + Σ y_k∘x_k = F(x,y) + F(ψ(x⊗y)) with Σ y_k⊗x_k = ψ(x⊗y).
    CheckTally tally("x∘y + ∘ψ(x⊗y) = F(x⊗y) + F(ψ(x⊗y))");
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        try {
          const SparseVec& xy = cl.monomial(2, static_cast<Index>(x * d + y));
          Accumulator lhs;
          lhs.add(xy);
          for (const auto& [idx, c] : cl.braid().image(x, y)) lhs.add(cl.monomial(2, idx), c);
          const Scalar f = cl.form()(x, y) + cl.form().evaluate(cl.braid().image(x, y));
          const SparseVec expected = f.is_zero() ? SparseVec{} : SparseVec::unit(0, f);
          if (lhs.take() == expected) {
            tally.pass(2);
          } else {
            tally.fail(2, render_word({x}) + " ⊗ " + render_word({y}));
          }
        } catch (const CapExceeded&) {
          tally.skip(2);
        } catch (const Error& e) {
          tally.fail(2, render_word({x}) + " ⊗ " + render_word({y}), e.what());
        }
      }
    }
    out.push_back(tally.finish());
  } else {
    CheckRecord skipped;
    skipped.name = "x∘y + ∘ψ(x⊗y) = F(x⊗y) + F(ψ(x⊗y))";
    skipped.status = CheckStatus::skipped;
    skipped.detail = "skipped: ψ is not involutive";
    out.push_back(std::move(skipped));
  }
  return out;
}

}  // namespace braidcl
