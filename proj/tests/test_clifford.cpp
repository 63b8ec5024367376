#include "braidcl/errors.hpp"
#include "braidcl/suites.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace braidcl;
using fixtures::ScalarGen;
using namespace oracles;

namespace {

ExteriorElement generator(int d, int letter, const Scalar& c = 1) { return {TensorElement::word(d, {letter}, c)}; }
ExteriorElement unit(int d, const Scalar& c = 1) { return {TensorElement::scalar(d, c)}; }

/// Flattens a tensor over degrees 0..max into one coordinate vector.
SparseVec flatten(const TensorElement& t, int max_degree) {
  Accumulator acc;
  Index offset = 0;
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& [i, c] : t.component(n)) acc.add(offset + i, c);
    offset += power(t.dim(), n);
  }
  return acc.take();
}

}  // namespace

TEST(Form, CompatibilityExamples) {
  EXPECT_TRUE(check_form_compatibility(BraidOperator::flip(2), QuadraticForm({{1, 2}, {2, 5}})));
  EXPECT_TRUE(check_form_compatibility(BraidOperator::flip(2, -1), QuadraticForm({{1, 2}, {7, 5}})));
  const auto bad = check_form_compatibility(BraidOperator::diagonal({{1, 2}, {Scalar(1, 2), 1}}), QuadraticForm({{0, 1}, {0, 0}}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.witness.size(), 3u);
  EXPECT_THROW(fixtures::algebra({"bad", BraidOperator::diagonal({{1, 2}, {Scalar(1, 2), 1}}), QuadraticForm({{0, 1}, {0, 0}})}, 3),
               FormNotCompatible);
}

TEST(Form, SymmetryExamples) {
  EXPECT_TRUE(check_psi_symmetric(BraidOperator::flip(2), QuadraticForm({{1, 2}, {2, 5}})));
  EXPECT_TRUE(check_psi_symmetric(fixtures::e2().psi, fixtures::e2().form));
  EXPECT_FALSE(check_psi_symmetric(BraidOperator::flip(2), QuadraticForm({{0, 1}, {0, 0}})));
  EXPECT_EQ(symmetrize_form(BraidOperator::flip(2), QuadraticForm({{0, 1}, {0, 0}})),
            QuadraticForm({{0, Scalar(1, 2)}, {Scalar(1, 2), 0}}));
  EXPECT_EQ(symmetrize_form(fixtures::e3().psi, fixtures::e3().form), fixtures::e3().form);
  EXPECT_TRUE(symmetrize_form(BraidOperator::flip(2, -1), QuadraticForm({{1, 2}, {2, 5}})).is_zero());
  EXPECT_THROW(symmetrize_form(fixtures::hecke(), QuadraticForm(2)), NotInvolutive);
}

TEST(Clifford, ContractionExamples) {
  const CliffordAlgebra e1 = fixtures::algebra(fixtures::e1(), 4);
  const SparseVec x = SparseVec::unit(0);
  EXPECT_TRUE(e1.contract(x, unit(1)).tensor.is_zero());
  EXPECT_EQ(e1.contract(x, generator(1, 0)), unit(1, 3));

  const CliffordAlgebra e3 = fixtures::algebra(fixtures::e3(), 4);
  const ExteriorElement wedge = e3.exterior().wedge(generator(2, 0), generator(2, 1));
  EXPECT_EQ(e3.contract(SparseVec::unit(1), wedge), generator(2, 1));
  EXPECT_EQ(e3.contract(SparseVec::unit(0), wedge), generator(2, 0, -1));
}

TEST(Clifford, MultiAndRelativeContraction) {
  const CliffordAlgebra cl = fixtures::algebra(fixtures::cl(2), 4);
  const ExteriorElement theta = cl.exterior().wedge(generator(2, 0), generator(2, 1));
  EXPECT_EQ(cl.multi_contract(TensorElement::scalar(2, 5), theta), ExteriorElement{theta.tensor * Scalar(5)});
  EXPECT_EQ(cl.multi_contract(TensorElement::word(2, {1}), theta), cl.contract(SparseVec::unit(1), theta));
  const TensorElement sym = TensorElement::word(2, {0, 1}) + TensorElement::word(2, {1, 0});
  for (const auto& u : {TensorElement::word(2, {0, 0}), sym}) {
    for (std::size_t g = 0; g < cl.size(); ++g) EXPECT_TRUE(cl.multi_contract(u, cl.basis_element(g)).tensor.is_zero());
  }
  for (std::size_t g = 0; g < cl.size(); ++g) {
    const ExteriorElement eta = cl.basis_element(g);
    for (int letter = 0; letter < 2; ++letter) {
      EXPECT_EQ(cl.relative_contract(generator(2, letter), eta, 1), cl.contract(SparseVec::unit(static_cast<Index>(letter)), eta));
    }
    if (cl.degree_of(g) >= 1) {
      EXPECT_TRUE(cl.relative_contract(eta, unit(2), 1).tensor.is_zero());
    }
  }
}

TEST(Clifford, ProductExamples) {
  const CliffordAlgebra e1 = fixtures::algebra(fixtures::e1(), 4);
  EXPECT_EQ(e1.product(generator(1, 0), generator(1, 0)), unit(1, 3));

  const CliffordAlgebra e2 = fixtures::algebra(fixtures::e2(), 4);
  const ExteriorElement p = generator(2, 0), q = generator(2, 1);
  EXPECT_EQ(e2.exterior().wedge(p, q), e2.exterior().wedge(q, p));
  ExteriorElement comm{e2.product(p, q).tensor - e2.product(q, p).tensor};
  EXPECT_EQ(comm, unit(2));

  const CliffordAlgebra e3 = fixtures::algebra(fixtures::e3(), 4);
  const ExteriorElement m = generator(2, 0), pl = generator(2, 1);
  EXPECT_EQ(ExteriorElement{e3.product(m, pl).tensor + e3.product(pl, m).tensor}, unit(2, 2));
  EXPECT_TRUE(e3.product(m, m).tensor.is_zero());
}

TEST(Clifford, LambdaExamples) {
  const CliffordAlgebra e1 = fixtures::algebra(fixtures::e1(), 4);
  const TensorElement x = TensorElement::word(1, {0});
  EXPECT_EQ(e1.lambda(TensorElement::scalar(1, 1)), TensorElement::scalar(1, 1));
  EXPECT_EQ(e1.lambda(x), x);
  EXPECT_EQ(e1.lambda(TensorElement::word(1, {0, 0})), TensorElement::word(1, {0, 0}) + TensorElement::scalar(1, 3));
  EXPECT_EQ(e1.tensor_product(x, x), TensorElement::word(1, {0, 0}) + TensorElement::scalar(1, 3));
  EXPECT_EQ(e1.tensor_product(TensorElement::scalar(1, 1), x), x);

  const CliffordAlgebra flat = fixtures::algebra({"flat", BraidOperator::flip(2), QuadraticForm(2)}, 4);
  const TensorElement t = TensorElement::word(2, {0, 1, 1}) - TensorElement::word(2, {1, 0}) * Scalar(2);
  EXPECT_EQ(flat.lambda(t), t);
  EXPECT_EQ(flat.tensor_product(TensorElement::word(2, {1}), t),
            TensorElement::word(2, {1, 0, 1, 1}) - TensorElement::word(2, {1, 1, 0}) * Scalar(2));
}

TEST(CliffordProperty, LambdaIsInvertible) {
  ScalarGen g(13);
  for (const auto& s : {fixtures::e2(), fixtures::e3(), fixtures::mixed()}) {
    const CliffordAlgebra cl = fixtures::algebra(s, 4);
    for (int t = 0; t < 20; ++t) {
      TensorElement u(cl.dim());
      for (int k = 0; k < 3; ++k) {
        const int n = g.below(5);
        u.add(n, SparseVec::unit(static_cast<Index>(g.below(static_cast<int>(power(cl.dim(), n)))), g()));
      }
      EXPECT_EQ(cl.lambda_inverse(cl.lambda(u)), u);
      EXPECT_EQ(cl.lambda(cl.lambda_inverse(u)), u);
    }
  }
}

TEST(Clifford, IdealGenerators) {
  const CliffordAlgebra e2 = fixtures::algebra(fixtures::e2(), 3);
  EchelonBasis ideal;
  for (const auto& t : e2.ideal_basis(2)) ideal.insert(flatten(t, 2));
  const TensorElement q = TensorElement::word(2, {0, 1}) - TensorElement::word(2, {1, 0}) - TensorElement::scalar(2, 1);
  EXPECT_TRUE(ideal.contains(flatten(q, 2)));
  EXPECT_FALSE(ideal.contains(flatten(TensorElement::word(2, {0, 1}) - TensorElement::word(2, {1, 0}), 2)));

  const CliffordAlgebra e1 = fixtures::algebra(fixtures::e1(), 3);
  const auto gens = e1.q_generators();
  ASSERT_EQ(gens.size(), 1u);
  const TensorElement expected = TensorElement::word(1, {0, 0}) - TensorElement::scalar(1, 3);
  EXPECT_TRUE(gens[0] == expected || gens[0] == expected * Scalar(-1) ||
              flatten(gens[0], 2) == flatten(expected, 2) * gens[0].coefficient({0, 0}));

  const CliffordAlgebra flat = fixtures::algebra({"flat", BraidOperator::flip(2), QuadraticForm(2)}, 3);
  EchelonBasis ker;
  for (const auto& k : kernel_basis(flat.exterior().antisymmetrizer(2))) ker.insert(k);
  EchelonBasis flat_ideal;
  for (const auto& t : flat.ideal_basis(2)) flat_ideal.insert(t.component(2));
  EXPECT_EQ(ker.rows(), flat_ideal.rows());
}

TEST(CliffordProperty, MatchesTextbookCliffordAlgebra) {
  ScalarGen g(31);
  for (int d = 1; d <= 3; ++d) {
    for (int t = 0; t < 3; ++t) {
      std::vector<Scalar> q(static_cast<std::size_t>(d));
      for (auto& x : q) x = t == 0 ? Scalar(1) : g(false);
      std::vector<std::vector<Scalar>> f(static_cast<std::size_t>(d), std::vector<Scalar>(static_cast<std::size_t>(d)));
      for (int i = 0; i < d; ++i) f[i][i] = q[static_cast<std::size_t>(i)];
      const CliffordAlgebra cl = fixtures::algebra({"classical", BraidOperator::flip(d), QuadraticForm(f)}, d + 1);
      ASSERT_EQ(cl.size(), std::size_t{1} << d);
      const unsigned blades = 1u << d;
      auto blade = [&](unsigned b) {
        const auto letters = blade_letters(b);
        return cl.monomial(static_cast<int>(letters.size()), word_index(letters, d));
      };
      EchelonBasis span;
      for (unsigned b = 0; b < blades; ++b) EXPECT_TRUE(span.insert(blade(b)));
      for (unsigned a = 0; a < blades; ++a) {
        for (unsigned b = 0; b < blades; ++b) {
          const BladeProduct expected = blade_product(a, b, q);
          EXPECT_EQ(cl.multiply(blade(a), blade(b)), blade(expected.blade) * expected.coefficient) << "d=" << d << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(CliffordProperty, TwoConstructionsAgreeAndProductIsAssociative) {
  ScalarGen g(37);
  std::vector<fixtures::Setup> setups = fixtures::standard_five();
  setups.push_back({"lyubashenko", fixtures::lyubashenko(), QuadraticForm(2)});
  for (const auto& s : setups) {
    const CliffordAlgebra cl = fixtures::algebra(s, 4);
    for (std::size_t a = 0; a < cl.size(); ++a) {
      for (std::size_t b = 0; b < cl.size(); ++b) {
        if (!cl.within(cl.degree_of(a) + cl.degree_of(b))) continue;
        EXPECT_EQ(cl.structure(a, b), cl.quotient_product(a, b)) << s.name;
      }
    }
    for (int t = 0; t < 40; ++t) {
      const std::size_t a = static_cast<std::size_t>(g.below(static_cast<int>(cl.size())));
      const std::size_t b = static_cast<std::size_t>(g.below(static_cast<int>(cl.size())));
      const std::size_t c = static_cast<std::size_t>(g.below(static_cast<int>(cl.size())));
      if (!cl.within(cl.degree_of(a) + cl.degree_of(b) + cl.degree_of(c))) continue;
      const SparseVec x = SparseVec::unit(a, g()), y = SparseVec::unit(b, g()), z = SparseVec::unit(c, g());
      EXPECT_EQ(cl.multiply(cl.multiply(x, y), z), cl.multiply(x, cl.multiply(y, z))) << s.name;
    }
  }
}

TEST(CliffordProperty, CliffordRelationOnGenerators) {
  ScalarGen g(43);
  for (int t = 0; t < 4; ++t) {
    const int d = 2 + t % 2;
    const auto eps = fixtures::random_involutive_eps(g, d);
    // A form compatible with a diagonal braid: F(a, c) may be nonzero only when ε(b, c) = ε(a, b) for all b.
    QuadraticForm f(d);
    for (int a = 0; a < d; ++a) {
      for (int c = 0; c < d; ++c) {
        bool ok = true;
        for (int b = 0; b < d; ++b) ok = ok && eps[b][c] == eps[a][b];
        if (ok) f.set(a, c, g());
      }
    }
    const BraidOperator psi = BraidOperator::diagonal(eps);
    const CliffordAlgebra cl = fixtures::algebra({"random", psi, symmetrize_form(psi, f)}, 3);
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        SparseVec lhs = cl.monomial(2, word_index({x, y}, d));
        for (const auto& [idx, c] : psi.image(x, y)) lhs += cl.monomial(2, idx) * c;
        const Scalar expected = cl.form()(x, y) + cl.form().evaluate(psi.image(x, y));
        EXPECT_EQ(lhs, expected.is_zero() ? SparseVec{} : SparseVec::unit(0, expected));
      }
    }
  }
}

TEST(Clifford, DroppedLeibnizSignIsDetected) {
  ExteriorOptions eo;
  eo.cap = 4;
  CliffordOptions co;
  co.drop_leibniz_sign = true;
  const CliffordAlgebra cl(ExteriorAlgebra(fixtures::e3().psi, eo), fixtures::e3().form, co);
  const auto records = verify_clifford(cl);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records[0].name, "Chevalley product equals the λ_F-quotient product");
  EXPECT_TRUE(records[0].failed());
  EXPECT_TRUE(records[0].witness.has_value());
}

TEST(Clifford, SuitesPassOnStandardConfigurations) {
  for (const auto& s : fixtures::standard_five()) {
    const CliffordAlgebra cl = fixtures::algebra(s, 4);
    for (const auto& r : verify_inputs(s.psi, s.form)) EXPECT_FALSE(r.failed()) << s.name << ": " << r.name;
    for (const auto& r : verify_exterior(cl.exterior())) EXPECT_FALSE(r.failed()) << s.name << ": " << r.name;
    for (const auto& r : verify_clifford(cl)) EXPECT_FALSE(r.failed()) << s.name << ": " << r.name << " " << r.detail;
  }
}
