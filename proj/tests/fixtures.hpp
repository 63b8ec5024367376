#pragma once

#include "braidcl/clifford.hpp"
#include "braidcl/exterior.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace braidcl;

struct Setup {
  std::string name;
  BraidOperator psi;
  QuadraticForm form;
};

inline QuadraticForm diagonal_form(int d, const Scalar& v = 1) {
  std::vector<std::vector<Scalar>> f(static_cast<std::size_t>(d), std::vector<Scalar>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) f[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v;
  return QuadraticForm(f);
}

/// dim 1, ψ = id, F(x, x) = 3.
inline Setup e1() { return {"E1", BraidOperator::flip(1), QuadraticForm({{Scalar(3)}})}; }
/// Weyl: ψ = -flip, F(p, q) = 1/2, F(q, p) = -1/2.
inline Setup e2() { return {"E2", BraidOperator::flip(2, -1), QuadraticForm({{0, Scalar(1, 2)}, {Scalar(-1, 2), 0}})}; }
/// Hyperbolic plane: ψ = flip, F(e-, e+) = F(e+, e-) = 1, letters 0 = e-, 1 = e+.
inline Setup e3() { return {"E3", BraidOperator::flip(2), QuadraticForm({{0, 1}, {1, 0}})}; }
inline Setup cl(int d) { return {"Cl" + std::to_string(d), BraidOperator::flip(d), diagonal_form(d)}; }
/// Diagonal involutive braid with non-trivial multipliers and a compatible form.
inline Setup mixed() {
  std::vector<std::vector<Scalar>> eps = {{1, 1, 2}, {1, 1, Scalar(1, 2)}, {Scalar(1, 2), 2, -1}};
  return {"mixed", BraidOperator::diagonal(eps), QuadraticForm({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})};
}
/// Two hyperbolic pairs (e1, e3) and (e2, e4).
inline Setup hyperbolic4() {
  QuadraticForm f(4);
  f.set(0, 2, 1);
  f.set(2, 0, 1);
  f.set(1, 3, 1);
  f.set(3, 1, 1);
  return {"hyperbolic4", BraidOperator::flip(4), f};
}

/// Hecke-type braid with q = 2: braid equation holds, not involutive.
inline BraidOperator hecke() {
  ExactMatrix h(4, 4);
  h.set(0, 0, 1);
  h.set(3, 3, 1);
  h.set(2, 1, Scalar(1, 2));
  h.set(1, 2, Scalar(1, 2));
  h.set(2, 2, Scalar(3, 4));
  return BraidOperator(2, h);
}

/// ψ(e_i⊗e_j) = G e_j ⊗ G^{-1} e_i with G = [[1, 1], [0, 1]]: involutive and non-diagonal.
inline BraidOperator lyubashenko() {
  const int g[2][2] = {{1, 1}, {0, 1}};
  const int gi[2][2] = {{1, -1}, {0, 1}};
  ExactMatrix m(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const int v = g[k][j] * gi[l][i];
          if (v) m.set(static_cast<std::size_t>(k * 2 + l), static_cast<std::size_t>(i * 2 + j), v);
        }
      }
    }
  }
  return BraidOperator(2, m);
}

/// The five configurations shared by the equivalence, doubling and F-independence checks.
inline std::vector<Setup> standard_five() { return {e1(), e2(), e3(), cl(3), mixed()}; }

inline CliffordAlgebra algebra(const Setup& s, int cap) {
  ExteriorOptions o;
  o.cap = cap;
  return CliffordAlgebra(ExteriorAlgebra(s.psi, o), s.form);
}

/// Small random Gaussian rationals.
class ScalarGen {
 public:
  explicit ScalarGen(unsigned seed) : rng_(seed) {}
  Scalar operator()(bool complex = true) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5), coin(0, 3);
    Scalar s(num(rng_), den(rng_));
    if (complex && coin(rng_) == 0) s += Scalar(num(rng_), den(rng_)) * parse_scalar("0+1i");
    return s;
  }
  Scalar nonzero() {
    Scalar s;
    while (s.is_zero()) s = (*this)();
    return s;
  }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Random involutive diagonal multipliers: ε_ij ε_ji = 1, ε_ii = ±1.
inline std::vector<std::vector<Scalar>> random_involutive_eps(ScalarGen& g, int d) {
  std::vector<std::vector<Scalar>> eps(static_cast<std::size_t>(d), std::vector<Scalar>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) {
    eps[i][i] = g.below(2) ? 1 : -1;
    for (int j = i + 1; j < d; ++j) {
      eps[i][j] = g.nonzero();
      eps[j][i] = Scalar(1) / eps[i][j];
    }
  }
  return eps;
}

inline SparseVec random_vec(ScalarGen& g, std::size_t size, int terms) {
  Accumulator acc;
  for (int t = 0; t < terms; ++t) acc.add(static_cast<Index>(g.below(static_cast<int>(size))), g());
  return acc.take();
}

/// Involutive and non-involutive braids for the antisymmetrizer checks.
inline std::vector<BraidOperator> test_braids() {
  ScalarGen g(3);
  return {BraidOperator::flip(2),
          BraidOperator::flip(2, -1),
          BraidOperator::flip(3),
          BraidOperator::diagonal(random_involutive_eps(g, 2)),
          BraidOperator::diagonal({{1, 2}, {3, -1}}),
          mixed().psi,
          hecke(),
          lyubashenko()};
}

}  // namespace fixtures
