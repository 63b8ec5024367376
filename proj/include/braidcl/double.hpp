#pragma once

#include "braidcl/group.hpp"

#include <vector>

namespace braidcl {

struct DoubleOptions {
  /// Fault injection: use -F instead of -F/2 on mixed terms of E.
  bool full_mixed_form = false;
};

/// Ψ on (W⊕W)^{⊗2}: ψ on every sector, the two mixed sectors exchanging labels.
/// Letters i < d are (e_i, 0), letters d + i are (0, e_i).
BraidOperator doubled_braid(const BraidOperator& psi);
/// E: F on homogeneous sectors, -F/2 on mixed ones.
QuadraticForm doubled_form(const QuadraticForm& form, const DoubleOptions& options = {});

/// cl(W⊕W, Ψ, E) with the maps Δ*, ℓ-, ℓ+ and ℓ_F out of the base algebra.
class DoubledAlgebra {
 public:
  /// The doubled algebra is truncated at the base cap.
  explicit DoubledAlgebra(const CliffordAlgebra& base, DoubleOptions options = {});

  const CliffordAlgebra& base() const { return base_; }
  const CliffordAlgebra& big() const { return big_; }
  const DoubleOptions& options() const { return options_; }

  /// Δ* on a base basis element through ∘-monomials of Δ(x) = (x, x). Throws CapExceeded.
  SparseVec delta_star(std::size_t a) const;
  /// Δ* on the ∘-monomial of a word: the product of Δ over its letters.
  SparseVec delta_star_word(int n, Index word) const;
  /// Δ* as the exterior map induced by Δ on tensor representatives.
  SparseVec delta_exterior(std::size_t a) const;
  /// ℓ-(a) for sign < 0, ℓ+(a) otherwise.
  SparseVec embed(std::size_t a, int sign) const;
  /// ℓ_F(a⊗b) = ℓ-(a)ℓ+(b).
  SparseVec ell(std::size_t a, std::size_t b) const;
  SparseVec ell(const SparseVec& pairs) const;

 private:
  SparseVec relabel(std::size_t a, int shift) const;

  CliffordAlgebra base_;
  CliffordAlgebra big_;
  DoubleOptions options_;
};

/// Checks of the doubling picture up to the base cap, one record each.
std::vector<CheckRecord> verify_doubling(const DoubledAlgebra& da, const GroupStructure& gs);

}  // namespace braidcl
