#pragma once

#include "braidcl/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace braidcl {

struct ExteriorOptions {
  /// Highest tensor degree ever materialized.
  int cap = 6;
  /// Cross-check every factorized antisymmetrizer against the n!-term sum.
  bool oracle = false;
  /// Largest tensor power (dim^n), and largest nonzero count of one A_n, the construction may allocate.
  Index work_budget = Index{1} << 20;
  /// Fault injection: exchange the roles of A_nk and B_nk.
  bool swap_partial_antisymmetrizers = false;
};

/// A tensor whose degree-n component lies in im(A_n) for every n.
struct ExteriorElement {
  TensorElement tensor;
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;
};

/// Braided exterior algebra realized as im(A) inside the tensor algebra.
class ExteriorAlgebra {
 public:
  explicit ExteriorAlgebra(BraidOperator psi, ExteriorOptions options = {});

  const BraidOperator& braid() const { return psi_; }
  const ExteriorOptions& options() const { return options_; }
  int dim() const { return psi_.dim(); }
  int cap() const { return options_.cap; }
  /// First degree n with A_n = 0, when one was reached within the cap.
  std::optional<int> finite_degree() const { return finite_; }
  /// True when degree n is known to vanish.
  bool vanishes(int n) const { return finite_ && n >= *finite_; }
  /// Highest degree with a known basis: min(cap, finite_degree - 1).
  int top_degree() const;

  /// Factorized A_n. Throws CapExceeded above the cap.
  const ExactMatrix& antisymmetrizer(int n) const;
  /// The defining signed sum over S_n, for cross-checks.
  ExactMatrix antisymmetrizer_direct(int n) const;
  /// (A_nk, B_nk) as sums over shuffles. Throws CapExceeded when n+k exceeds the cap.
  std::pair<const ExactMatrix&, const ExactMatrix&> partial_antisym(int n, int k) const;

  /// dim W^{∧n}; zero for vanishing degrees, CapExceeded otherwise past the cap.
  std::size_t degree_dim(int n) const;
  /// Echelon basis of im(A_n) in increasing pivot order.
  const std::vector<SparseVec>& basis(int n) const;
  const std::vector<Index>& pivots(int n) const;
  /// Exact coordinates of a degree-n tensor, or nullopt when it is not in im(A_n).
  std::optional<std::vector<Scalar>> coordinates(int n, const SparseVec& v) const;
  /// Throws NotInSubspace.
  std::vector<Scalar> coordinates_or_throw(int n, const SparseVec& v) const;
  /// Expansion in the degree-n basis.
  SparseVec from_coordinates(int n, const SparseVec& coords) const;
  /// Some t with A_n(t) equal to the r-th basis vector.
  const SparseVec& representative(int n, std::size_t r) const;
  /// Representative of any element of im(A_n).
  SparseVec representative_of(int n, const SparseVec& v) const;

  bool contains(const TensorElement& t) const;
  /// Validates membership. Throws NotInSubspace.
  ExteriorElement element(const TensorElement& t) const;
  /// The class of an arbitrary tensor: A applied degreewise.
  ExteriorElement project(const TensorElement& t) const;
  /// zeta ∧ xi = B_nk(zeta ⊗ xi), degreewise.
  ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) const;
  SparseVec wedge_homogeneous(int n, const SparseVec& a, int k, const SparseVec& b) const;
  /// A_nk (left = true) or B_nk applied to one vector of W^{⊗(n+k)}, shuffle by shuffle.
  SparseVec apply_partial(int n, int k, const SparseVec& v, bool left) const;

  /// Extended braiding W^{∧i}⊗W^{∧j} -> W^{∧j}⊗W^{∧i} in basis coordinates;
  /// column r*dim_j + s is the image of b_r ⊗ b_s. Throws ClosureViolation.
  const ExactMatrix& extended_psi(int i, int j) const;

  /// Coordinates of t in im(A_i)⊗im(A_j), index r*dim_j + s. Throws ClosureViolation.
  SparseVec pair_coordinates(int i, int j, const SparseVec& t) const;

  struct KernelGeneration {
    bool generated = false;
    std::size_t kernel_dim = 0;
    std::size_t generated_dim = 0;
  };
  /// Compares ker(A_n) with the ideal generated by ker(A_2) in degree n.
  KernelGeneration kernel_generated_in_degree_two(int n) const;

 private:
  void require_within_cap(int n) const;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::pair<ExactMatrix, ExactMatrix>> partial;
    std::map<std::pair<int, int>, ExactMatrix> extended;
  };

  BraidOperator psi_;
  ExteriorOptions options_;
  std::optional<int> finite_;
  std::vector<ExactMatrix> antisym_;
  std::vector<std::vector<SparseVec>> basis_;
  std::vector<std::vector<Index>> pivots_;
  std::vector<EchelonBasis> echelon_;
  std::vector<std::vector<SparseVec>> representatives_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace braidcl
