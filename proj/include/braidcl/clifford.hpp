#pragma once

#include "braidcl/exterior.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace braidcl {

/// Bilinear functional F on W, stored as the matrix F(e_i, e_j).
class QuadraticForm {
 public:
  explicit QuadraticForm(int dim = 0);
  explicit QuadraticForm(std::vector<std::vector<Scalar>> entries);
  static QuadraticForm zero(int dim) { return QuadraticForm(dim); }

  int dim() const { return dim_; }
  const Scalar& operator()(int i, int j) const { return entries_[i][j]; }
  void set(int i, int j, const Scalar& value) { entries_[i][j] = value; }
  bool is_zero() const;
  const std::vector<std::vector<Scalar>>& entries() const { return entries_; }

  /// F applied to an element of W⊗W.
  Scalar evaluate(const SparseVec& v) const;
  /// F applied at positions (pos, pos+1) of every word of length n in v.
  SparseVec contract_at(int n, int pos, const SparseVec& v) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int dim_;
  std::vector<std::vector<Scalar>> entries_;
};

/// (F⊗id)(id⊗psi) = (id⊗F)(psi⊗id) on W^{⊗3}.
CheckOutcome check_form_compatibility(const BraidOperator& psi, const QuadraticForm& form);
/// F∘psi = F on W⊗W.
CheckOutcome check_psi_symmetric(const BraidOperator& psi, const QuadraticForm& form);
/// (F + F∘psi)/2. Throws NotInvolutive.
QuadraticForm symmetrize_form(const BraidOperator& psi, const QuadraticForm& form);

struct CliffordOptions {
  /// Fault injection: drop the alternating sign of the braided Leibniz rule.
  bool drop_leibniz_sign = false;
};

/// Braided Clifford algebra: W^∧ with the F-deformed product, plus the λ_F picture on W^⊗.
///
/// Elements are addressed either as ExteriorElement or by global coordinates over
/// the concatenated per-degree bases (degree 0 first).
class CliffordAlgebra {
 public:
  /// Throws FormNotCompatible or DimensionMismatch.
  CliffordAlgebra(ExteriorAlgebra exterior, QuadraticForm form, CliffordOptions options = {});

  const ExteriorAlgebra& exterior() const { return ext_; }
  const QuadraticForm& form() const { return form_; }
  const BraidOperator& braid() const { return ext_.braid(); }
  int dim() const { return ext_.dim(); }
  int cap() const { return ext_.cap(); }

  /// Number of global basis elements, degrees 0..top_degree.
  std::size_t size() const { return degree_of_.size(); }
  int degree_of(std::size_t g) const { return degree_of_.at(g); }
  std::size_t offset(int n) const { return offsets_.at(static_cast<std::size_t>(n)); }
  std::size_t local_index(std::size_t g) const { return g - offset(degree_of(g)); }
  /// True when products of total degree n can be formed: n within the cap or known to vanish.
  bool within(int n) const { return n <= cap() || ext_.vanishes(n); }

  SparseVec to_global(const ExteriorElement& e) const;
  ExteriorElement from_global(const SparseVec& g) const;
  ExteriorElement basis_element(std::size_t g) const;
  std::string render_basis(std::size_t g) const;

  /// C_x on W^{⊗n}: the braided derivation that realizes ι_x on tensors.
  SparseVec tensor_contract(const SparseVec& x, int n, const SparseVec& v) const;
  SparseVec tensor_contract_letter(int letter, int n, const SparseVec& v) const;
  /// C_u for a word u of length m: composition of letter contractions, last letter first.
  SparseVec tensor_contract_word(int m, Index word, int n, const SparseVec& v) const;

  ExteriorElement contract(const SparseVec& x, const ExteriorElement& theta) const;
  /// ι_u for an arbitrary tensor u: ι_{u⊗v} = ι_u ι_v.
  ExteriorElement multi_contract(const TensorElement& u, const ExteriorElement& theta) const;
  /// ⟨θ, η⟩_k for θ homogeneous of degree n.
  ExteriorElement relative_contract(const ExteriorElement& theta, const ExteriorElement& eta, int k) const;
  /// θ∘η = θ∧η + Σ_k ⟨θ, η⟩_k. Throws CapExceeded.
  ExteriorElement product(const ExteriorElement& theta, const ExteriorElement& eta) const;

  /// λ_F and its inverse on W^⊗. Throw CapExceeded above the cap.
  TensorElement lambda(const TensorElement& t) const;
  TensorElement lambda_inverse(const TensorElement& t) const;
  /// a∘b = λ_F(λ_F^{-1}(a)⊗λ_F^{-1}(b)) on W^⊗.
  TensorElement tensor_product(const TensorElement& a, const TensorElement& b) const;

  /// λ_F^{-1} of a basis of ker(A_m), m ≤ n.
  std::vector<TensorElement> ideal_basis(int n) const;
  /// Q = u - F(u)·1 for u running over a basis of ker(id - psi).
  std::vector<TensorElement> q_generators() const;

  /// Global coordinates of basis_a ∘ basis_b. Throws CapExceeded.
  const SparseVec& structure(std::size_t a, std::size_t b) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// The same product computed through (W^⊗, ∘)/ker(A).
  SparseVec quotient_product(std::size_t a, std::size_t b) const;
  /// x_1∘...∘x_n for a word of length n, in global coordinates.
  const SparseVec& monomial(int n, Index word) const;
  /// A tensor whose monomial image is the g-th basis element: λ_F^{-1}(a*).
  const TensorElement& generator_expansion(std::size_t g) const;
  /// Class in W^∧ (degreewise A_n) of an arbitrary tensor, in global coordinates.
  SparseVec class_of(const TensorElement& t) const;

 private:
  SparseVec relative_homogeneous(int n, const SparseVec& theta_rep, int m, const SparseVec& eta_rep, int k) const;
  const TensorElement& lambda_word(int n, Index word) const;
  const TensorElement& lambda_inverse_word(int n, Index word) const;
  TensorElement lambda_unchecked(const TensorElement& t) const;
  TensorElement lambda_inverse_unchecked(const TensorElement& t) const;
  TensorElement contract_tensor(int letter, const TensorElement& t) const;

  struct Cache {
    std::recursive_mutex mutex;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> structure;
    std::map<std::pair<int, Index>, TensorElement> lambda;
    std::map<std::pair<int, Index>, TensorElement> lambda_inverse;
    std::map<std::pair<int, Index>, SparseVec> monomials;
    std::map<std::size_t, TensorElement> expansions;
  };

  ExteriorAlgebra ext_;
  QuadraticForm form_;
  CliffordOptions options_;
  std::vector<int> degree_of_;
  std::vector<std::size_t> offsets_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace braidcl
