#include "braidcl/errors.hpp"
#include "braidcl/group.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace braidcl;
using fixtures::ScalarGen;

namespace {

GroupStructure group(const fixtures::Setup& s, int cap, GroupOptions o = {}) {
  return GroupStructure(fixtures::algebra(s, cap), o);
}

SparseVec pair(const GroupStructure& gs, std::size_t a, std::size_t b, const Scalar& c = 1) {
  return SparseVec::unit(gs.pair(a, b), c);
}

SparseVec tensor(const GroupStructure& gs, const SparseVec& u, const SparseVec& v) {
  Accumulator acc;
  for (const auto& [a, x] : u) {
    for (const auto& [b, y] : v) acc.add(gs.pair(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), x * y);
  }
  return acc.take();
}

SparseVec phi(const GroupStructure& gs, const SparseVec& v) {
  Accumulator acc;
  for (const auto& [a, c] : v) acc.add(gs.coproduct(static_cast<std::size_t>(a)), c);
  return acc.take();
}

Scalar epsilon(const GroupStructure& gs, const SparseVec& v) {
  Scalar s;
  for (const auto& [a, c] : v) s += c * gs.counit(static_cast<std::size_t>(a));
  return s;
}

const CheckRecord& find(const std::vector<CheckRecord>& records, char tag) {
  const std::string prefix = std::string("(") + tag + ")";
  for (const auto& r : records) {
    if (r.name.rfind(prefix, 0) == 0) return r;
  }
  throw std::runtime_error("no record " + prefix);
}

}  // namespace

TEST(Group, SigmaExamples) {
  const GroupStructure e1 = group(fixtures::e1(), 4);
  const std::size_t x = e1.generator(0);
  for (std::size_t a = 0; a < e1.size(); ++a) EXPECT_EQ(e1.sigma(0, a), pair(e1, a, 0));
  EXPECT_EQ(e1.sigma(x, x), pair(e1, x, x, -1) + pair(e1, 0, 0, -3));

  const GroupStructure e3 = group(fixtures::e3(), 4);
  const std::size_t m = e3.generator(0), p = e3.generator(1);
  EXPECT_EQ(e3.sigma(m, p), pair(e3, p, m, -1) + pair(e3, 0, 0, -1));
}

TEST(Group, TauExamples) {
  const GroupStructure e2 = group(fixtures::e2(), 4);
  const std::size_t p = e2.generator(0), q = e2.generator(1);
  for (std::size_t a = 0; a < e2.size(); ++a) EXPECT_EQ(e2.tau(0, a), pair(e2, a, 0));
  EXPECT_EQ(e2.tau(p, q), pair(e2, q, p));
  const GroupStructure e3 = group(fixtures::e3(), 4);
  EXPECT_EQ(e3.tau(e3.generator(0), e3.generator(1)), pair(e3, e3.generator(1), e3.generator(0), -1));
}

TEST(Group, SigmaNFamily) {
  const GroupStructure gs = group(fixtures::mixed(), 4);
  for (std::size_t a = 0; a < gs.size(); ++a) {
    for (std::size_t b = 0; b < gs.size(); ++b) {
      if (gs.tuple_degree(gs.pair(a, b), 2) > 4) continue;
      EXPECT_EQ(gs.sigma_n(0, a, b), gs.tau(a, b));
      const SparseVec expected = gs.apply_pairwise(gs.apply_pairwise(gs.tau(a, b), [&](std::size_t u, std::size_t v) -> const SparseVec& {
        return gs.sigma_inverse(u, v);
      }), [&](std::size_t u, std::size_t v) -> const SparseVec& { return gs.tau(u, v); });
      EXPECT_EQ(gs.sigma_n(-1, a, b), expected);
      for (int n = -2; n <= 2; ++n) {
        EXPECT_EQ(gs.sigma_n(n, a, b), gs.sigma_n(n, a, b, true));
        Accumulator twice;
        for (const auto& [idx, c] : gs.sigma_n(n, a, b)) {
          twice.add(gs.sigma_n(n, static_cast<std::size_t>(idx / gs.size()), static_cast<std::size_t>(idx % gs.size())), c);
        }
        EXPECT_EQ(twice.take(), pair(gs, a, b));
      }
    }
  }
  EXPECT_THROW(gs.sigma_n(5, 0, 0), BoundExceeded);
}

TEST(Group, CoproductCounitAntipodeExamples) {
  const GroupStructure e1 = group(fixtures::e1(), 4);
  const std::size_t x = e1.generator(0);
  EXPECT_EQ(e1.coproduct(0), pair(e1, 0, 0));
  EXPECT_EQ(e1.coproduct(x), pair(e1, 0, x) + pair(e1, x, 0));
  const SparseVec xx = e1.algebra().multiply(SparseVec::unit(x), SparseVec::unit(x));
  EXPECT_EQ(xx, SparseVec::unit(0, 3));
  EXPECT_EQ(e1.tensor_square_product(e1.coproduct(x), e1.coproduct(x)), pair(e1, 0, 0, 3));
  EXPECT_EQ(phi(e1, xx), pair(e1, 0, 0, 3));
  EXPECT_EQ(e1.counit(0), Scalar(1));
  EXPECT_EQ(e1.counit(x), Scalar(0));
  EXPECT_EQ(e1.antipode(0), SparseVec::unit(0));
  EXPECT_EQ(e1.antipode(x), SparseVec::unit(x, -1));

  const GroupStructure e2 = group(fixtures::e2(), 4);
  const SparseVec pq = e2.algebra().monomial(2, word_index({0, 1}, 2));
  EXPECT_EQ(epsilon(e2, pq), Scalar(1, 2));
  for (const auto& q : e2.algebra().q_generators()) {
    EXPECT_EQ(epsilon(e2, e2.algebra().class_of(e2.algebra().lambda(q))), Scalar(0));
  }
}

TEST(Group, TensorSquareProductExamples) {
  const GroupStructure e1 = group(fixtures::e1(), 4);
  const std::size_t x = e1.generator(0);
  for (std::size_t c = 0; c < e1.size(); ++c) {
    for (std::size_t d = 0; d < e1.size(); ++d) EXPECT_EQ(e1.tensor_square_product(pair(e1, 0, 0), pair(e1, c, d)), pair(e1, c, d));
  }
  EXPECT_EQ(e1.tensor_square_product(pair(e1, 0, x), pair(e1, x, 0)), e1.sigma(x, x));
  const GroupStructure e3 = group(fixtures::e3(), 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::size_t a = e3.generator(i), b = e3.generator(j);
      const SparseVec ab = e3.algebra().multiply(SparseVec::unit(a), SparseVec::unit(b));
      EXPECT_EQ(e3.tensor_square_product(pair(e3, a, 0), pair(e3, b, 0)), tensor(e3, ab, SparseVec::unit(0)));
    }
  }
}

TEST(GroupProperty, CoproductAndCounitAreMultiplicative) {
  ScalarGen g(53);
  for (const auto& s : {fixtures::e2(), fixtures::e3(), fixtures::mixed(), fixtures::cl(3)}) {
    const GroupStructure gs = group(s, 4);
    const auto& cl = gs.algebra();
    for (int t = 0; t < 25; ++t) {
      const std::size_t a = static_cast<std::size_t>(g.below(static_cast<int>(gs.size())));
      const std::size_t b = static_cast<std::size_t>(g.below(static_cast<int>(gs.size())));
      if (cl.degree_of(a) + cl.degree_of(b) > 4) continue;
      const SparseVec ab = cl.structure(a, b);
      EXPECT_EQ(phi(gs, ab), gs.tensor_square_product(gs.coproduct(a), gs.coproduct(b))) << s.name;
      // ε(a∘b) = (ε⊗ε)στ(a⊗b).
      Scalar twisted;
      for (const auto& [idx, c] : gs.tau(a, b)) {
        for (const auto& [jdx, k] : gs.sigma(static_cast<std::size_t>(idx / gs.size()), static_cast<std::size_t>(idx % gs.size()))) {
          twisted += c * k * gs.counit(static_cast<std::size_t>(jdx / gs.size())) * gs.counit(static_cast<std::size_t>(jdx % gs.size()));
        }
      }
      EXPECT_EQ(epsilon(gs, ab), twisted) << s.name;
    }
  }
}

TEST(GroupProperty, AntipodeAxiom) {
  for (const auto& s : {fixtures::e1(), fixtures::e3(), fixtures::mixed()}) {
    const GroupStructure gs = group(s, 4);
    const auto& cl = gs.algebra();
    for (std::size_t a = 0; a < gs.size(); ++a) {
      Accumulator left, right;
      for (const auto& [idx, c] : gs.coproduct(a)) {
        const std::size_t u = static_cast<std::size_t>(idx / gs.size()), v = static_cast<std::size_t>(idx % gs.size());
        left.add(cl.multiply(SparseVec::unit(u), gs.antipode(v)), c);
        right.add(cl.multiply(gs.antipode(u), SparseVec::unit(v)), c);
      }
      const Scalar e = gs.counit(a);
      const SparseVec expected = e.is_zero() ? SparseVec{} : SparseVec::unit(0, e);
      EXPECT_EQ(left.take(), expected) << s.name;
      EXPECT_EQ(right.take(), expected) << s.name;
    }
  }
}

TEST(GroupProperty, CoproductIsFormIndependent) {
  for (const auto& s : fixtures::standard_five()) {
    const GroupStructure gs = group(s, 4);
    const GroupStructure flat = group({s.name, s.psi, QuadraticForm(s.psi.dim())}, 4);
    ASSERT_EQ(gs.size(), flat.size());
    for (std::size_t a = 0; a < gs.size(); ++a) {
      EXPECT_EQ(gs.coproduct(a), flat.coproduct(a)) << s.name;
      EXPECT_EQ(gs.counit(a), flat.counit(a)) << s.name;
    }
  }
}

TEST(Group, Prerequisites) {
  EXPECT_THROW(GroupStructure(fixtures::algebra({"hecke", fixtures::hecke(), QuadraticForm(2)}, 3)), NotInvolutive);
  EXPECT_THROW(GroupStructure(fixtures::algebra({"asym", BraidOperator::flip(2, -1), QuadraticForm({{0, 1}, {0, 0}})}, 3)),
               FormNotPsiSymmetric);
  GroupOptions o;
  o.sigma_n_bound = -1;
  EXPECT_THROW(group(fixtures::e3(), 3, o), BoundExceeded);
}

TEST(Group, AxiomReportIsCompleteAndPasses) {
  const std::string tags = "abcdefghijklmn";
  for (const auto& s : {fixtures::e1(), fixtures::e3(), fixtures::e2()}) {
    const auto records = verify_axioms(group(s, 4));
    ASSERT_EQ(records.size(), tags.size());
    for (std::size_t i = 0; i < tags.size(); ++i) {
      EXPECT_EQ(records[i].name.substr(0, 3), std::string("(") + tags[i] + ")");
      EXPECT_FALSE(records[i].failed()) << s.name << ": " << records[i].name << " " << records[i].detail;
    }
  }
}

TEST(Group, SeededFaultsAreDetected) {
  GroupOptions sigma;
  sigma.flip_sigma_sign = true;
  const auto sr = verify_axioms(group(fixtures::e3(), 4, sigma));
  const CheckRecord& c = find(sr, 'c');
  EXPECT_TRUE(c.failed());
  EXPECT_TRUE(c.witness);

  GroupOptions kappa;
  kappa.kappa_generator_sign = true;
  const auto kr = verify_axioms(group(fixtures::e3(), 4, kappa));
  EXPECT_TRUE(find(kr, 'b').failed());
  EXPECT_TRUE(find(kr, 'b').witness);

  GroupOptions eps;
  eps.epsilon_on_degree_one = true;
  const auto er = verify_axioms(group(fixtures::e3(), 4, eps));
  EXPECT_TRUE(find(er, 'e').failed());
  EXPECT_TRUE(find(er, 'e').witness);
}
