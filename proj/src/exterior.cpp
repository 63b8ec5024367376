#include "braidcl/exterior.hpp"

#include "braidcl/errors.hpp"

#include <string>

namespace braidcl {

namespace {

std::string degree_text(int n) { return "degree " + std::to_string(n); }

}  // namespace

ExteriorAlgebra::ExteriorAlgebra(BraidOperator psi, ExteriorOptions options)
    : psi_(std::move(psi)), options_(options), cache_(std::make_shared<Cache>()) {
  if (options_.cap < 1) throw Error("truncation cap must be at least 1");
  if (!psi_.satisfies_braid()) throw BraidEquationViolated("psi does not satisfy the braid equation");
  const int d = psi_.dim();

  antisym_.push_back(ExactMatrix::identity(1));
  antisym_.push_back(ExactMatrix::identity(static_cast<std::size_t>(d)));
  for (int n = 2; n <= options_.cap; ++n) {
    if (antisym_.back().is_zero()) break;
    const Index size = power(d, n);
    if (size > options_.work_budget) {
      throw ResourceLimit("A_" + std::to_string(n) + " needs " + std::to_string(size) + " words, over the work budget");
    }
    // A_n = B_{n-1,1} (A_{n-1} ⊗ id): the new last letter is braided leftwards
    // through every position, B_{n-1,1} = sum_j (-1)^{n-1-j} psi_j psi_{j+1} ... psi_{n-2}.
    const ExactMatrix& prev = antisym_.back();
    std::vector<SparseVec> cols(static_cast<std::size_t>(size));
    Index entries = 0;
    for (Index w = 0; w < size; ++w) {
      const Index head = w / static_cast<Index>(d);
      const Index last = w % static_cast<Index>(d);
      Accumulator shifted;
      for (const auto& [i, c] : prev.column(static_cast<std::size_t>(head))) {
        shifted.add(i * static_cast<Index>(d) + last, c);
      }
      SparseVec term = shifted.take();
      Accumulator sum;
      sum.add(term);
      Scalar sign = 1;
      for (int pos = n - 2; pos >= 0; --pos) {
        term = psi_.twist(n, pos, term);
        sign = -sign;
        sum.add(term, sign);
      }
      cols[static_cast<std::size_t>(w)] = sum.take();
      entries += static_cast<Index>(cols[static_cast<std::size_t>(w)].nnz());
      if (entries > options_.work_budget) {
        throw ResourceLimit("A_" + std::to_string(n) + " has more than " + std::to_string(options_.work_budget) +
                            " nonzero entries, over the work budget");
      }
    }
    antisym_.push_back(ExactMatrix::from_columns(static_cast<std::size_t>(size), std::move(cols)));
    if (options_.oracle && !(antisym_.back() == antisymmetrizer_direct(n))) {
      throw Error("factorized antisymmetrizer disagrees with the direct sum in " + degree_text(n));
    }
  }
  const int computed = static_cast<int>(antisym_.size()) - 1;
  if (antisym_.back().is_zero()) finite_ = computed;

  const int top = top_degree();
  for (int n = 0; n <= top; ++n) {
    EchelonBasis ech;
    const ExactMatrix& a = antisym_[static_cast<std::size_t>(n)];
    for (std::size_t c = 0; c < a.cols(); ++c) ech.insert(a.column(c));
    basis_.push_back(ech.rows());
    pivots_.push_back(ech.pivots());
    std::vector<SparseVec> reps;
    Scalar inv_fact = Scalar(1) / factorial(n);
    for (const auto& b : basis_.back()) {
      if (psi_.involutive()) {
        reps.push_back(b * inv_fact);
      } else {
        auto x = solve(a, b);
        if (!x) throw Error("basis vector outside im(A_n); internal inconsistency");
        reps.push_back(std::move(*x));
      }
    }
    representatives_.push_back(std::move(reps));
    echelon_.push_back(std::move(ech));
  }
}

int ExteriorAlgebra::top_degree() const {
  if (finite_) return std::min(options_.cap, *finite_ - 1);
  return options_.cap;
}

void ExteriorAlgebra::require_within_cap(int n) const {
  if (n < 0) throw DegreeOutOfRange("negative degree");
  if (n > options_.cap) throw CapExceeded(degree_text(n) + " exceeds truncation degree " + std::to_string(options_.cap));
}

const ExactMatrix& ExteriorAlgebra::antisymmetrizer(int n) const {
  require_within_cap(n);
  if (n < static_cast<int>(antisym_.size())) return antisym_[static_cast<std::size_t>(n)];
  // Beyond the first vanishing degree A_n = B_{n-1,1}(A_{n-1}⊗id) = 0.
  const Index size = power(dim(), n);
  if (size > options_.work_budget) throw ResourceLimit("zero antisymmetrizer too large to materialize");
  std::lock_guard lock(cache_->mutex);
  auto key = std::make_pair(-1, n);
  auto it = cache_->extended.find(key);
  if (it == cache_->extended.end()) {
    it = cache_->extended.emplace(key, ExactMatrix::zero(static_cast<std::size_t>(size), static_cast<std::size_t>(size))).first;
  }
  return it->second;
}

ExactMatrix ExteriorAlgebra::antisymmetrizer_direct(int n) const {
  require_within_cap(n);
  const Index size = power(dim(), n);
  ExactMatrix sum(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (const auto& p : all_permutations(n)) {
    ExactMatrix term = psi_.lift_along(n, reduced_word(p));
    if (sign(p) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::pair<const ExactMatrix&, const ExactMatrix&> ExteriorAlgebra::partial_antisym(int n, int k) const {
  require_within_cap(n + k);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->partial.find({n, k});
    if (it != cache_->partial.end()) return {it->second.first, it->second.second};
  }
  const Index size = power(dim(), n + k);
  if (size > options_.work_budget) throw ResourceLimit("partial antisymmetrizer over the work budget");
  ExactMatrix a(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  ExactMatrix b(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (const auto& s : shuffles(n, k)) {
    const Scalar sg = sign(s);
    a += psi_.lift_along(n + k, reduced_word(s.inverse())) * sg;
    b += psi_.lift_along(n + k, reduced_word(s)) * sg;
  }
  if (options_.swap_partial_antisymmetrizers) std::swap(a, b);
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->partial.try_emplace(std::make_pair(n, k), std::move(a), std::move(b)).first->second;
  return {slot.first, slot.second};
}

std::size_t ExteriorAlgebra::degree_dim(int n) const { return basis(n).size(); }

const std::vector<SparseVec>& ExteriorAlgebra::basis(int n) const {
  static const std::vector<SparseVec> empty;
  if (n >= 0 && n <= top_degree()) return basis_[static_cast<std::size_t>(n)];
  if (n >= 0 && vanishes(n)) return empty;
  require_within_cap(n);
  return empty;
}

const std::vector<Index>& ExteriorAlgebra::pivots(int n) const {
  static const std::vector<Index> empty;
  if (n >= 0 && n <= top_degree()) return pivots_[static_cast<std::size_t>(n)];
  if (n >= 0 && vanishes(n)) return empty;
  require_within_cap(n);
  return empty;
}

std::optional<std::vector<Scalar>> ExteriorAlgebra::coordinates(int n, const SparseVec& v) const {
  if (n >= 0 && n <= top_degree()) return echelon_[static_cast<std::size_t>(n)].coordinates(v);
  if (n >= 0 && vanishes(n)) {
    if (v.empty()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  require_within_cap(n);
  return std::nullopt;
}

std::vector<Scalar> ExteriorAlgebra::coordinates_or_throw(int n, const SparseVec& v) const {
  auto c = coordinates(n, v);
  if (!c) throw NotInSubspace("tensor is not in im(A_" + std::to_string(n) + ")");
  return std::move(*c);
}

SparseVec ExteriorAlgebra::from_coordinates(int n, const SparseVec& coords) const {
  const auto& b = basis(n);
  Accumulator acc;
  for (const auto& [r, c] : coords) acc.add(b.at(static_cast<std::size_t>(r)), c);
  return acc.take();
}

const SparseVec& ExteriorAlgebra::representative(int n, std::size_t r) const {
  if (n < 0 || n > top_degree()) throw DegreeOutOfRange("no basis in " + degree_text(n));
  return representatives_[static_cast<std::size_t>(n)].at(r);
}

SparseVec ExteriorAlgebra::representative_of(int n, const SparseVec& v) const {
  if (v.empty()) return v;
  auto coords = coordinates_or_throw(n, v);
  Accumulator acc;
  for (std::size_t r = 0; r < coords.size(); ++r) acc.add(representative(n, r), coords[r]);
  return acc.take();
}

bool ExteriorAlgebra::contains(const TensorElement& t) const {
  for (const auto& [deg, v] : t.components()) {
    if (!coordinates(deg, v)) return false;
  }
  return true;
}

ExteriorElement ExteriorAlgebra::element(const TensorElement& t) const {
  if (t.dim() != dim() && !t.is_zero()) throw DimensionMismatch("tensor over a different space");
  if (!contains(t)) throw NotInSubspace("tensor is not in im(A)");
  return ExteriorElement{t};
}

ExteriorElement ExteriorAlgebra::project(const TensorElement& t) const {
  TensorElement out(dim());
  for (const auto& [deg, v] : t.components()) {
    if (vanishes(deg)) continue;
    out.add(deg, antisymmetrizer(deg).apply(v));
  }
  return ExteriorElement{out};
}

SparseVec ExteriorAlgebra::wedge_homogeneous(int n, const SparseVec& a, int k, const SparseVec& b) const {
  if (a.empty() || b.empty() || vanishes(n + k)) return {};
  const Index shift = power(dim(), k);
  Accumulator acc;
  for (const auto& [ia, sa] : a) {
    for (const auto& [ib, sb] : b) acc.add(ia * shift + ib, sa * sb);
  }
  return apply_partial(n, k, acc.take(), false);
}

SparseVec ExteriorAlgebra::apply_partial(int n, int k, const SparseVec& v, bool left) const {
  if (options_.swap_partial_antisymmetrizers) left = !left;
  Accumulator sum;
  for (const auto& s : shuffles(n, k)) {
    const auto word = reduced_word(left ? s.inverse() : s);
    SparseVec t = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = psi_.twist(n + k, *it, t);
    sum.add(t, sign(s));
  }
  return sum.take();
}

ExteriorElement ExteriorAlgebra::wedge(const ExteriorElement& a, const ExteriorElement& b) const {
  TensorElement out(dim());
  for (const auto& [n, va] : a.tensor.components()) {
    for (const auto& [k, vb] : b.tensor.components()) out.add(n + k, wedge_homogeneous(n, va, k, vb));
  }
  return ExteriorElement{out};
}

SparseVec ExteriorAlgebra::pair_coordinates(int i, int j, const SparseVec& t) const {
  const auto& pi = pivots(i);
  const auto& pj = pivots(j);
  const auto& bi = basis(i);
  const auto& bj = basis(j);
  const Index shift = power(dim(), j);
  Accumulator coords;
  Accumulator rebuilt;
  for (std::size_t r = 0; r < pi.size(); ++r) {
    for (std::size_t s = 0; s < pj.size(); ++s) {
      const Scalar* c = t.find(pi[r] * shift + pj[s]);
      if (!c) continue;
      coords.add(r * pj.size() + s, *c);
      for (const auto& [ia, sa] : bi[r]) {
        for (const auto& [ib, sb] : bj[s]) rebuilt.add(ia * shift + ib, sa * sb * *c);
      }
    }
  }
  if (!(rebuilt.take() == t)) {
    throw ClosureViolation("tensor is not in W^∧" + std::to_string(i) + "⊗W^∧" + std::to_string(j));
  }
  return coords.take();
}

const ExactMatrix& ExteriorAlgebra::extended_psi(int i, int j) const {
  require_within_cap(i + j);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->extended.find({i, j});
    if (it != cache_->extended.end()) return it->second;
  }
  const auto& bi = basis(i);
  const auto& bj = basis(j);
  const Index shift = power(dim(), j);
  ExactMatrix out(bj.size() * bi.size(), bi.size() * bj.size());
  if (!bi.empty() && !bj.empty()) {
    const ExactMatrix& cross = block_crossing(psi_, i, j);
    for (std::size_t r = 0; r < bi.size(); ++r) {
      for (std::size_t s = 0; s < bj.size(); ++s) {
        Accumulator acc;
        for (const auto& [ia, sa] : bi[r]) {
          for (const auto& [ib, sb] : bj[s]) acc.add(ia * shift + ib, sa * sb);
        }
        out.set_column(r * bj.size() + s, pair_coordinates(j, i, cross.apply(acc.take())));
      }
    }
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->extended.try_emplace(std::make_pair(i, j), std::move(out)).first->second;
}

ExteriorAlgebra::KernelGeneration ExteriorAlgebra::kernel_generated_in_degree_two(int n) const {
  require_within_cap(n);
  KernelGeneration out;
  const int d = dim();
  const Index size = power(d, n);
  out.kernel_dim = static_cast<std::size_t>(size) - degree_dim(n);
  if (n < 2) {
    out.generated = out.kernel_dim == 0;
    return out;
  }
  auto k2 = kernel_basis(antisymmetrizer(2));
  EchelonBasis span;
  for (int left = 0; left + 2 <= n; ++left) {
    const int right = n - 2 - left;
    const Index lsize = power(d, left);
    const Index rsize = power(d, right);
    for (const auto& u : k2) {
      for (Index l = 0; l < lsize; ++l) {
        for (Index r = 0; r < rsize; ++r) {
          Accumulator acc;
          for (const auto& [iu, su] : u) acc.add((l * power(d, 2) + iu) * rsize + r, su);
          span.insert(acc.take());
        }
      }
    }
  }
  out.generated_dim = span.rank();
  out.generated = out.generated_dim == out.kernel_dim;
  return out;
}

}  // namespace braidcl
