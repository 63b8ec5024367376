#pragma once

#include "braidcl/clifford.hpp"
#include "braidcl/report.hpp"

#include <string>
#include <vector>

namespace braidcl {

/// Coordinate split W = W- ⊕ W+, zero-based letter indices.
struct IsotropicSplit {
  std::vector<int> minus;
  std::vector<int> plus;
};

/// F vanishes on W-⊗W- and W+⊗W+, ψ(W_i⊗W_j) ⊆ W_j⊗W_i, and F pairs W- with W+ nondegenerately.
CheckOutcome validate_isotropic_split(const CliffordAlgebra& cl, const IsotropicSplit& split);

struct SpinorOptions {
  /// Throw NotFiniteDimensional instead of working up to the truncation degree.
  bool strict = false;
  /// Fault injection: zero one nonzero entry of ρ on the first generator.
  bool zero_action_entry = false;
};

/// S = A_F ⊗ over W+^∧ of ℂ through ε+, realized on a basis of W-^∧.
class SpinorModule {
 public:
  /// Throws SplitInvalid, or NotFiniteDimensional in strict mode.
  SpinorModule(const CliffordAlgebra& cl, IsotropicSplit split, SpinorOptions options = {});

  const CliffordAlgebra& algebra() const { return cl_; }
  const IsotropicSplit& split() const { return split_; }
  bool finite() const { return finite_; }
  /// Highest degree up to which results hold when the algebra is truncated.
  int verified_degree() const { return cl_.exterior().top_degree(); }

  std::size_t dim() const { return minus_basis_.size(); }
  int spinor_degree(std::size_t s) const { return minus_degree_.at(s); }
  /// Basis of W-^∧ and W+^∧ as algebra elements in global coordinates.
  const std::vector<SparseVec>& minus_basis() const { return minus_basis_; }
  const std::vector<SparseVec>& plus_basis() const { return plus_basis_; }
  /// The spinor basis vector as the class of a ∘-monomial, e.g. "[e1*e2]".
  std::string render_spinor(std::size_t s) const;

  /// Coordinates of an algebra element in the μ_F basis m_i∘p_j (index i·|plus|+j).
  /// Throws NotInSubspace when the element is outside the span reached within the cap.
  SparseVec normal_form(const SparseVec& element) const;
  /// Rank of μ_F on the verified range and the number of its source pairs.
  std::size_t mu_rank() const { return mu_rank_; }
  std::size_t mu_pairs() const { return mu_columns_.size(); }

  /// ρ(a) applied to spinor basis vector s. Throws CapExceeded.
  SparseVec act(std::size_t a, std::size_t s) const;
  /// ρ(a) as a dim × dim matrix over the spinor basis vectors it can reach.
  const ExactMatrix& action(std::size_t a) const { return action_.at(a); }
  bool action_defined(std::size_t a, std::size_t s) const;

 private:
  SparseVec reduce(const SparseVec& element) const;

  CliffordAlgebra cl_;
  IsotropicSplit split_;
  SpinorOptions options_;
  bool finite_ = false;
  std::vector<SparseVec> minus_basis_;
  std::vector<int> minus_degree_;
  std::vector<std::vector<int>> minus_words_;
  std::vector<SparseVec> plus_basis_;
  std::vector<int> plus_degree_;
  std::vector<std::pair<std::size_t, std::size_t>> mu_pairs_;
  std::vector<SparseVec> mu_columns_;
  ExactMatrix mu_;
  std::size_t mu_rank_ = 0;
  std::vector<ExactMatrix> action_;
};

/// Checks of the spinor module, one record each.
std::vector<CheckRecord> verify_spinor(const SpinorModule& sm);

}  // namespace braidcl
