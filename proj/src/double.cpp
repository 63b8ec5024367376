#include "braidcl/double.hpp"

#include "braidcl/errors.hpp"

#include <string>

namespace braidcl {

namespace {

ExteriorAlgebra doubled_exterior(const CliffordAlgebra& base) {
  return ExteriorAlgebra(doubled_braid(base.braid()), base.exterior().options());
}

std::string letter_name(int letter, int d) {
  return (letter < d ? "(" : "(0,") + render_word({letter % d}) + (letter < d ? ",0)" : ")");
}

}  // namespace

BraidOperator doubled_braid(const BraidOperator& psi) {
  const int d = psi.dim();
  const int n = 2 * d;
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const int sp = p / d;
      const int sq = q / d;
      Accumulator acc;
      for (const auto& [idx, c] : psi.image(p % d, q % d)) {
        const Index k = idx / static_cast<Index>(d) + static_cast<Index>(sq * d);
        const Index l = idx % static_cast<Index>(d) + static_cast<Index>(sp * d);
        acc.add(k * static_cast<Index>(n) + l, c);
      }
      cols.push_back(acc.take());
    }
  }
  return BraidOperator(n, ExactMatrix::from_columns(static_cast<std::size_t>(n * n), std::move(cols)));
}

QuadraticForm doubled_form(const QuadraticForm& form, const DoubleOptions& options) {
  const int d = form.dim();
  const Scalar mixed = options.full_mixed_form ? Scalar(-1) : Scalar(-1, 2);
  QuadraticForm out(2 * d);
  for (int p = 0; p < 2 * d; ++p) {
    for (int q = 0; q < 2 * d; ++q) {
      const Scalar& f = form(p % d, q % d);
      out.set(p, q, p / d == q / d ? f : f * mixed);
    }
  }
  return out;
}

DoubledAlgebra::DoubledAlgebra(const CliffordAlgebra& base, DoubleOptions options)
    : base_(base), big_(doubled_exterior(base), doubled_form(base.form(), options)), options_(options) {}

SparseVec DoubledAlgebra::relabel(std::size_t a, int shift) const {
  const int d = base_.dim();
  TensorElement out(2 * d);
  const ExteriorElement element = base_.basis_element(a);
  for (const auto& [n, v] : element.tensor.components()) {
    Accumulator acc;
    for (const auto& [w, c] : v) {
      std::vector<int> letters = word_letters(w, n, d);
      for (int& l : letters) l += shift;
      acc.add(word_index(letters, 2 * d), c);
    }
    out.add(n, acc.take());
  }
  return big_.to_global(ExteriorElement{out});
}

SparseVec DoubledAlgebra::embed(std::size_t a, int sign) const {
  return relabel(a, sign < 0 ? 0 : base_.dim());
}

SparseVec DoubledAlgebra::delta_exterior(std::size_t a) const {
  const int d = base_.dim();
  TensorElement out(2 * d);
  const ExteriorElement element = base_.basis_element(a);
  for (const auto& [n, v] : element.tensor.components()) {
    Accumulator acc;
    for (const auto& [w, c] : v) {
      const std::vector<int> letters = word_letters(w, n, d);
      for (Index mask = 0; mask < (Index{1} << n); ++mask) {
        std::vector<int> big_letters = letters;
        for (int i = 0; i < n; ++i) {
          if ((mask >> i) & 1) big_letters[static_cast<std::size_t>(i)] += d;
        }
        acc.add(word_index(big_letters, 2 * d), c);
      }
    }
    out.add(n, acc.take());
  }
  return big_.to_global(ExteriorElement{out});
}

SparseVec DoubledAlgebra::delta_star_word(int n, Index word) const {
  if (!big_.within(n)) throw CapExceeded("Δ* beyond the doubled truncation degree");
  const int d = base_.dim();
  const std::vector<int> letters = word_letters(word, n, d);
  Accumulator acc;
  for (Index mask = 0; mask < (Index{1} << n); ++mask) {
    std::vector<int> big_letters = letters;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) big_letters[static_cast<std::size_t>(i)] += d;
    }
    acc.add(big_.monomial(n, word_index(big_letters, 2 * d)));
  }
  return acc.take();
}

SparseVec DoubledAlgebra::delta_star(std::size_t a) const {
  Accumulator acc;
  for (const auto& [n, v] : base_.generator_expansion(a).components()) {
    for (const auto& [w, c] : v) acc.add(delta_star_word(n, w), c);
  }
  return acc.take();
}

SparseVec DoubledAlgebra::ell(std::size_t a, std::size_t b) const {
  return big_.multiply(embed(a, -1), embed(b, 1));
}

SparseVec DoubledAlgebra::ell(const SparseVec& pairs) const {
  Accumulator acc;
  const std::size_t n = base_.size();
  for (const auto& [idx, c] : pairs) acc.add(ell(idx / n, idx % n), c);
  return acc.take();
}

std::vector<CheckRecord> verify_doubling(const DoubledAlgebra& da, const GroupStructure& gs) {
  const CliffordAlgebra& base = da.base();
  const CliffordAlgebra& big = da.big();
  const int d = base.dim();
  const std::size_t n = base.size();
  std::vector<CheckRecord> out;

  {
    const BraidOperator& big_psi = big.braid();
    std::vector<CheckRecord> parts;
    parts.push_back(single("Ψ satisfies the braid equation", big_psi.satisfies_braid(),
                           render_word(big_psi.braid_check().witness)));
    if (base.braid().involutive()) {
      parts.push_back(
          single("Ψ is involutive", big_psi.involutive(), render_word(big_psi.involutive_check().witness)));
    }
    const auto compat = check_form_compatibility(big_psi, big.form());
    parts.push_back(single("(Ψ, E) compatible", compat.passed, render_word(compat.witness)));
    out.push_back(combine("doubled braid Ψ and form E", std::move(parts)));
  }
  {
    CheckTally tally("E(Δx, Δy) = F(x, y)");
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        Scalar e;
        for (int p : {x, x + d}) {
          for (int q : {y, y + d}) e += big.form()(p, q);
        }
        if (e == base.form()(x, y)) {
          tally.pass(2);
        } else {
          tally.fail(2, render_word({x}) + " ⊗ " + render_word({y}), "E = " + e.str());
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    // Evaluated on ∘-monomials of words, where Δ* is the product of Δ over the letters.
    CheckTally tally("Δ* = ℓ_Fφ");
    for (int deg = 0; deg <= base.exterior().cap(); ++deg) {
      if (!base.within(deg) || !big.within(deg)) break;
      for (Index w = 0; w < power(d, deg); ++w) {
        Accumulator pairs;
        for (const auto& [a, c] : base.monomial(deg, w)) pairs.add(gs.coproduct(static_cast<std::size_t>(a)), c);
        if (da.delta_star_word(deg, w) == da.ell(pairs.take())) {
          tally.pass(deg);
        } else {
          tally.fail(deg, render_word(word_letters(w, deg, d)));
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    CheckTally hom("Δ*(a∘b) = Δ*(a)∘Δ*(b)");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const int deg = base.degree_of(a) + base.degree_of(b);
        if (!base.within(deg) || !big.within(deg)) {
          hom.skip(deg);
          continue;
        }
        try {
          Accumulator lhs;
          for (const auto& [c, s] : base.structure(a, b)) lhs.add(da.delta_star(c), s);
          if (lhs.take() == big.multiply(da.delta_star(a), da.delta_star(b))) {
            hom.pass(deg);
          } else {
            hom.fail(deg, join_factors({base.render_basis(a), base.render_basis(b)}));
          }
        } catch (const CapExceeded&) {
          hom.skip(deg);
        }
      }
    }
    out.push_back(hom.finish());
  }
  {
    CheckTally tally("Δ* is the exterior map induced by Δ");
    for (std::size_t a = 0; a < n; ++a) {
      const int deg = base.degree_of(a);
      try {
        if (da.delta_star(a) == da.delta_exterior(a)) {
          tally.pass(deg);
        } else {
          tally.fail(deg, base.render_basis(a));
        }
      } catch (const CapExceeded&) {
        tally.skip(deg);
      }
    }
    out.push_back(tally.finish());
  }
  {
    CheckTally minus("ℓ- is an algebra map");
    CheckTally plus("ℓ+ is an algebra map");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const int deg = base.degree_of(a) + base.degree_of(b);
        for (int sign : {-1, 1}) {
          CheckTally& tally = sign < 0 ? minus : plus;
          if (!base.within(deg) || !big.within(deg)) {
            tally.skip(deg);
            continue;
          }
          Accumulator lhs;
          for (const auto& [c, s] : base.structure(a, b)) lhs.add(da.embed(c, sign), s);
          if (lhs.take() == big.multiply(da.embed(a, sign), da.embed(b, sign))) {
            tally.pass(deg);
          } else {
            tally.fail(deg, join_factors({base.render_basis(a), base.render_basis(b)}));
          }
        }
      }
    }
    out.push_back(combine("ℓ± embeddings", {minus.finish(), plus.finish()}));
  }
  {
    CheckTally tally("ℓ+(x)ℓ-(y) = -Σ ℓ-(y_k)ℓ+(x_k) - F(x,y)1");
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        const SparseVec left = big.multiply(da.embed(gs.generator(x), 1), da.embed(gs.generator(y), -1));
        Accumulator rhs;
        for (const auto& [idx, c] : base.braid().image(x, y)) {
          const int yk = static_cast<int>(idx / static_cast<Index>(d));
          const int xk = static_cast<int>(idx % static_cast<Index>(d));
          rhs.add(big.multiply(da.embed(gs.generator(yk), -1), da.embed(gs.generator(xk), 1)), -c);
        }
        rhs.add(0, -base.form()(x, y));
        if (left == rhs.take()) {
          tally.pass(2);
        } else {
          tally.fail(2, letter_name(x + d, d) + " ⊗ " + letter_name(y, d));
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (big.within(base.degree_of(a) + base.degree_of(b))) pairs.emplace_back(a, b);
      }
    }
    EchelonBasis image;
    for (const auto& [a, b] : pairs) image.insert(da.ell(a, b));
    const bool ok = image.rank() == pairs.size() && image.rank() == big.size();
    out.push_back(single("ℓ_F is a linear bijection", ok, {},
                         "rank " + std::to_string(image.rank()) + ", pairs " + std::to_string(pairs.size()) +
                             ", doubled dimension " + std::to_string(big.size())));
  }
  {
    CheckTally tally("ℓ_F((a⊗b)(c⊗d)) = ℓ_F(a⊗b)ℓ_F(c⊗d)");
    for (Index t = 0; t < static_cast<Index>(n * n * n * n); ++t) {
      const int deg = gs.tuple_degree(t, 4);
      if (!big.within(deg) || !base.within(deg)) continue;
      const Index ab = t / static_cast<Index>(n * n);
      const Index cd = t % static_cast<Index>(n * n);
      try {
        const SparseVec lhs = da.ell(gs.tensor_square_product(SparseVec::unit(ab), SparseVec::unit(cd)));
        const SparseVec rhs = big.multiply(da.ell(ab / n, ab % n), da.ell(cd / n, cd % n));
        if (lhs == rhs) {
          tally.pass(deg);
        } else {
          tally.fail(deg, gs.render_tuple(t, 4));
        }
      } catch (const CapExceeded&) {
        tally.skip(deg);
      }
    }
    out.push_back(tally.finish());
  }
  {
    const DoubledAlgebra zero(CliffordAlgebra(base.exterior(), QuadraticForm::zero(d)), da.options());
    CheckTally tally("Δ* is F-independent");
    for (std::size_t a = 0; a < n; ++a) {
      const int deg = base.degree_of(a);
      try {
        if (da.delta_star(a) == zero.delta_star(a)) {
          tally.pass(deg);
        } else {
          tally.fail(deg, base.render_basis(a));
        }
      } catch (const CapExceeded&) {
        tally.skip(deg);
      }
    }
    out.push_back(tally.finish());
  }
  return out;
}

}  // namespace braidcl
