#pragma once

#include "braidcl/matrix.hpp"
#include "braidcl/permutation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace braidcl {

/// dim^n as an index bound.
Index power(int dim, int n);
/// Words are indexed base dim, first letter most significant; letters are zero-based.
Index word_index(const std::vector<int>& letters, int dim);
std::vector<int> word_letters(Index index, int length, int dim);
/// Renders a word as e1*e3 (one-based letters), or "1" for the empty word.
std::string render_word(const std::vector<int>& letters);

/// Element of the tensor algebra over a dim-dimensional space: per-degree sparse
/// coefficient vectors over word indices.
class TensorElement {
 public:
  explicit TensorElement(int dim = 0) : dim_(dim) {}
  static TensorElement scalar(int dim, const Scalar& c);
  static TensorElement word(int dim, const std::vector<int>& letters, const Scalar& c = 1);
  static TensorElement homogeneous(int dim, int degree, SparseVec coeffs);

  int dim() const { return dim_; }
  const std::map<int, SparseVec>& components() const { return parts_; }
  const SparseVec& component(int degree) const;
  /// Highest degree with a nonzero component, or -1 for the zero element.
  int max_degree() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }
  int min_degree() const { return parts_.empty() ? -1 : parts_.begin()->first; }
  bool is_zero() const { return parts_.empty(); }
  bool is_homogeneous() const { return parts_.size() <= 1; }
  Scalar coefficient(const std::vector<int>& letters) const;

  void add(int degree, const SparseVec& coeffs, const Scalar& c = 1);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
  friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dim_ == b.dim_ && a.parts_ == b.parts_;
  }

  /// Concatenation product of the tensor algebra.
  friend TensorElement concat(const TensorElement& a, const TensorElement& b);

  /// `2*e1*e2 - e2*e1 + 1/2`, terms ordered by degree then word.
  std::string render() const;

 private:
  int dim_;
  std::map<int, SparseVec> parts_;
};

/// Outcome of a structural check; on failure carries the first offending basis word.
struct CheckOutcome {
  bool passed = true;
  std::vector<int> witness;
  std::string detail;
  explicit operator bool() const { return passed; }
};

/// Invertible operator on W⊗W. Column (i*dim + j) holds the image of e_i⊗e_j.
class BraidOperator {
 public:
  /// Throws NotInvertible when the matrix is singular or of the wrong size.
  BraidOperator(int dim, ExactMatrix matrix);
  static BraidOperator flip(int dim, const Scalar& sign = 1);
  /// psi(e_i⊗e_j) = eps[i][j] e_j⊗e_i.
  static BraidOperator diagonal(const std::vector<std::vector<Scalar>>& eps);

  int dim() const { return dim_; }
  const ExactMatrix& matrix() const { return matrix_; }
  const SparseVec& image(int i, int j) const { return matrix_.column(static_cast<std::size_t>(i * dim_ + j)); }

  const CheckOutcome& braid_check() const { return braid_; }
  const CheckOutcome& involutive_check() const { return involutive_; }
  bool satisfies_braid() const { return braid_.passed; }
  bool involutive() const { return involutive_.passed; }

  /// Applies psi at positions (pos, pos+1) of every word of length n in v.
  SparseVec twist(int n, int pos, const SparseVec& v) const;
  /// psi_pi on W^{⊗n}, n = p.size(); composition of twists along reduced_word(p).
  /// Throws BraidEquationViolated unless the braid equation holds.
  const ExactMatrix& lift(const Permutation& p) const;
  /// Same map built from an explicit word of adjacent transpositions.
  ExactMatrix lift_along(int n, const std::vector<int>& word) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Permutation, ExactMatrix> lifts;
  };

  int dim_;
  ExactMatrix matrix_;
  CheckOutcome braid_;
  CheckOutcome involutive_;
  std::shared_ptr<Cache> cache_;
};

CheckOutcome check_braid_equation(const BraidOperator& psi);
CheckOutcome check_involutive(const BraidOperator& psi);

/// psi_pi on W^{⊗n} for p in S_n.
ExactMatrix psi_pi(const BraidOperator& psi, const Permutation& p);
/// The permutation carrying an n-block past a k-block.
Permutation block_transposition(int n, int k);
/// W^{⊗n}⊗W^{⊗k} -> W^{⊗k}⊗W^{⊗n}.
ExactMatrix block_crossing(const BraidOperator& psi, int n, int k);

/// Linear map between tensor powers, stored as (source degree, target degree) blocks.
class GradedLinearMap {
 public:
  explicit GradedLinearMap(int dim = 0) : dim_(dim) {}
  void set_block(int source, int target, ExactMatrix m);
  const std::map<std::pair<int, int>, ExactMatrix>& blocks() const { return blocks_; }
  bool defined_on(int source) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  std::map<std::pair<int, int>, ExactMatrix> blocks_;
};

/// Throws DegreeOutOfRange when t has a component the map does not cover.
TensorElement apply(const GradedLinearMap& map, const TensorElement& t);

}  // namespace braidcl
