#pragma once

#include "braidcl/clifford.hpp"
#include "braidcl/report.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace braidcl {

struct GroupOptions {
  /// Largest |n| sampled in the σ_n twisting identities; σ_n is available up to twice this.
  int sigma_n_bound = 2;
  /// Highest total word length on which the two crossing orders are compared.
  int confluence_degree = 4;
  /// Fault injection, applied on top of correctly built maps.
  bool flip_sigma_sign = false;
  bool kappa_generator_sign = false;
  bool epsilon_on_degree_one = false;
};

/// Sparse combination of word pairs u⊗v in W^⊗⊗W^⊗, keyed by (|u|, u, |v|, v).
using WordPairSum = std::map<std::array<Index, 4>, Scalar>;

/// A local operator on tensor powers of the algebra: in factors to out factors.
struct LocalOp {
  std::string label;
  int in = 1;
  int out = 1;
  std::function<SparseVec(Index)> image;
};

/// Braided quantum group structure (φ, ε, κ, σ_F, τ) on a braided Clifford algebra with
/// involutive braid. Elements of A^{⊗k} are sparse vectors over base-N encoded basis tuples,
/// N = algebra().size(), first factor most significant.
class GroupStructure {
 public:
  /// Throws NotInvolutive or FormNotPsiSymmetric.
  explicit GroupStructure(CliffordAlgebra algebra, GroupOptions options = {});

  const CliffordAlgebra& algebra() const { return cl_; }
  const GroupOptions& options() const { return options_; }
  std::size_t size() const { return cl_.size(); }
  Index pair(std::size_t a, std::size_t b) const { return static_cast<Index>(a * size() + b); }

  /// Throw CapExceeded when the pair's total degree cannot be formed.
  const SparseVec& sigma(std::size_t a, std::size_t b) const;
  const SparseVec& sigma_inverse(std::size_t a, std::size_t b) const;
  const SparseVec& tau(std::size_t a, std::size_t b) const;
  const SparseVec& tau_inverse(std::size_t a, std::size_t b) const;
  /// σ_n = τ(σ^{-1}τ)^{-n}; second_form selects (τσ^{-1})^{-n}τ. Throws BoundExceeded.
  SparseVec sigma_n(int n, std::size_t a, std::size_t b, bool second_form = false) const;
  /// φ(a) as a pair-encoded vector.
  const SparseVec& coproduct(std::size_t a) const;
  Scalar counit(std::size_t a) const;
  const SparseVec& antipode(std::size_t a) const;
  /// (a⊗b)(c⊗d) = a σ(b⊗c) d on pair-encoded vectors.
  SparseVec tensor_square_product(const SparseVec& ab, const SparseVec& cd) const;

  /// Tensor-level crossing on W^⊗⊗W^⊗; left_first peels the left word, otherwise the right one.
  const WordPairSum& word_crossing(int p, Index u, int q, Index v, bool left_first = true) const;
  /// Applies a pair-local operator to every pair in v.
  SparseVec apply_pairwise(const SparseVec& v, const std::function<const SparseVec&(std::size_t, std::size_t)>& f) const;

  /// Operators usable in identity chains.
  LocalOp op_product() const;
  LocalOp op_sigma() const;
  LocalOp op_sigma_inverse() const;
  LocalOp op_tau() const;
  LocalOp op_tau_inverse() const;
  LocalOp op_sigma_n(int n) const;
  LocalOp op_coproduct() const;
  LocalOp op_counit() const;
  LocalOp op_unit() const;
  LocalOp op_antipode() const;

  /// Global index of the generator e_letter.
  std::size_t generator(int letter) const;
  /// Renders a basis tuple as "a ⊗ b ⊗ c".
  std::string render_tuple(Index encoded, int arity) const;
  int tuple_degree(Index encoded, int arity) const;

 private:
  const SparseVec& sigma_raw(std::size_t a, std::size_t b) const;
  const SparseVec& phi_word(int n, Index word) const;
  const SparseVec& antipode_raw(std::size_t a) const;
  void ensure_inverses() const;
  void require_pair(std::size_t a, std::size_t b) const;

  struct Cache {
    std::recursive_mutex mutex;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> sigma;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> sigma_public;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> tau;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> sigma_inverse;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> tau_inverse;
    std::map<std::array<Index, 4>, SparseVec> sigma_n;
    std::map<std::array<Index, 5>, WordPairSum> crossings;
    std::map<std::pair<int, Index>, SparseVec> phi_words;
    std::map<std::size_t, SparseVec> coproduct;
    std::map<std::size_t, SparseVec> antipode;
    std::map<std::size_t, SparseVec> antipode_public;
    bool inverses_ready = false;
  };

  CliffordAlgebra cl_;
  GroupOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// Applies op at factor position pos of an arity-k vector.
SparseVec apply_at(const SparseVec& v, std::size_t base, int arity, int pos, const LocalOp& op);

/// A step of an identity chain: op applied at factor position pos.
struct ChainStep {
  LocalOp op;
  int pos = 0;
};
/// Evaluates steps in order on an arity-k vector; returns the final vector.
SparseVec evaluate_chain(const SparseVec& v, std::size_t base, int arity, const std::vector<ChainStep>& steps);

/// Full axiom inventory (a)-(n), one record each, in that order.
std::vector<CheckRecord> verify_axioms(const GroupStructure& gs);
/// Equality of two chains on every basis tuple whose total degree can be formed.
CheckRecord check_identity(const GroupStructure& gs, const std::string& name, int arity,
                           const std::vector<ChainStep>& lhs, const std::vector<ChainStep>& rhs);
/// Which σ_n, |n| ≤ 2·bound, coincide on every formable pair, e.g. "σ_-2=σ_0=σ_2 | σ_-1=σ_1".
std::string sigma_n_orbits(const GroupStructure& gs);

}  // namespace braidcl
