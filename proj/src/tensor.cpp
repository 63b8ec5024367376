#include "braidcl/tensor.hpp"

#include "braidcl/errors.hpp"

#include <sstream>

namespace braidcl {

Index power(int dim, int n) {
  Index p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<Index>(dim);
  return p;
}

Index word_index(const std::vector<int>& letters, int dim) {
  Index idx = 0;
  for (int l : letters) {
    if (l < 0 || l >= dim) throw DimensionMismatch("letter out of range");
    idx = idx * static_cast<Index>(dim) + static_cast<Index>(l);
  }
  return idx;
}

std::vector<int> word_letters(Index index, int length, int dim) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int p = length - 1; p >= 0; --p) {
    letters[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<Index>(dim));
    index /= static_cast<Index>(dim);
  }
  return letters;
}

std::string render_word(const std::vector<int>& letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '*';
    out += 'e' + std::to_string(letters[i] + 1);
  }
  return out;
}

TensorElement TensorElement::scalar(int dim, const Scalar& c) {
  TensorElement t(dim);
  t.add(0, SparseVec::unit(0, c));
  return t;
}

TensorElement TensorElement::word(int dim, const std::vector<int>& letters, const Scalar& c) {
  TensorElement t(dim);
  t.add(static_cast<int>(letters.size()), SparseVec::unit(word_index(letters, dim), c));
  return t;
}

TensorElement TensorElement::homogeneous(int dim, int degree, SparseVec coeffs) {
  TensorElement t(dim);
  t.add(degree, coeffs);
  return t;
}

const SparseVec& TensorElement::component(int degree) const {
  static const SparseVec empty;
  auto it = parts_.find(degree);
  return it == parts_.end() ? empty : it->second;
}

Scalar TensorElement::coefficient(const std::vector<int>& letters) const {
  return component(static_cast<int>(letters.size())).at(word_index(letters, dim_));
}

void TensorElement::add(int degree, const SparseVec& coeffs, const Scalar& c) {
  if (coeffs.empty() || c.is_zero()) return;
  if (!coeffs.empty() && coeffs.max_index() >= power(dim_, degree)) throw DimensionMismatch("word index out of range");
  auto it = parts_.find(degree);
  if (it == parts_.end()) {
    parts_.emplace(degree, coeffs * c);
    return;
  }
  it->second.add_scaled(coeffs, c);
  if (it->second.empty()) parts_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.dim_ != dim_ && !o.is_zero()) throw DimensionMismatch("tensor elements over different spaces");
  for (const auto& [deg, v] : o.parts_) add(deg, v);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  if (o.dim_ != dim_ && !o.is_zero()) throw DimensionMismatch("tensor elements over different spaces");
  for (const auto& [deg, v] : o.parts_) add(deg, v, Scalar(-1));
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [deg, v] : parts_) v *= c;
  return *this;
}

TensorElement concat(const TensorElement& a, const TensorElement& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("tensor elements over different spaces");
  TensorElement out(a.dim_);
  for (const auto& [da, va] : a.parts_) {
    for (const auto& [db, vb] : b.parts_) {
      Index shift = power(a.dim_, db);
      Accumulator acc;
      for (const auto& [ia, sa] : va) {
        for (const auto& [ib, sb] : vb) acc.add(ia * shift + ib, sa * sb);
      }
      out.add(da + db, acc.take());
    }
  }
  return out;
}

std::string TensorElement::render() const {
  if (parts_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [deg, v] : parts_) {
    for (const auto& [idx, c] : v) {
      bool negative = c.is_real() && sgn(c.real()) < 0;
      Scalar mag = negative ? -c : c;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string coeff = mag.is_real() ? mag.str() : "(" + mag.str() + ")";
      if (deg == 0) {
        out += coeff;
      } else if (mag.is_one()) {
        out += render_word(word_letters(idx, deg, dim_));
      } else {
        out += coeff + "*" + render_word(word_letters(idx, deg, dim_));
      }
    }
  }
  return out;
}

BraidOperator::BraidOperator(int dim, ExactMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  const auto n = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  if (dim <= 0 || matrix_.rows() != n || matrix_.cols() != n) {
    throw DimensionMismatch("braid matrix must be dim^2 x dim^2");
  }
  if (rank(matrix_) != n) throw NotInvertible("braid operator is not invertible");
  braid_ = check_braid_equation(*this);
  involutive_ = check_involutive(*this);
}

BraidOperator BraidOperator::flip(int dim, const Scalar& sign) {
  ExactMatrix m(static_cast<std::size_t>(dim * dim), static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m.set(static_cast<std::size_t>(j * dim + i), static_cast<std::size_t>(i * dim + j), sign);
  }
  return BraidOperator(dim, std::move(m));
}

BraidOperator BraidOperator::diagonal(const std::vector<std::vector<Scalar>>& eps) {
  const int dim = static_cast<int>(eps.size());
  ExactMatrix m(static_cast<std::size_t>(dim * dim), static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(eps[static_cast<std::size_t>(i)].size()) != dim) throw DimensionMismatch("eps must be square");
    for (int j = 0; j < dim; ++j) {
      m.set(static_cast<std::size_t>(j * dim + i), static_cast<std::size_t>(i * dim + j),
            eps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return BraidOperator(dim, std::move(m));
}

SparseVec BraidOperator::twist(int n, int pos, const SparseVec& v) const {
  if (pos < 0 || pos + 1 >= n) throw DegreeOutOfRange("twist position outside the word");
  const Index d = static_cast<Index>(dim_);
  const Index low = power(dim_, n - pos - 2);
  const Index pair_span = d * d * low;
  Accumulator acc;
  for (const auto& [idx, c] : v) {
    const Index high = idx / pair_span;
    const Index rest = idx % low;
    const Index pair = (idx / low) % (d * d);
    for (const auto& [q, s] : matrix_.column(static_cast<std::size_t>(pair))) {
      acc.add(high * pair_span + q * low + rest, c * s);
    }
  }
  return acc.take();
}

ExactMatrix BraidOperator::lift_along(int n, const std::vector<int>& word) const {
  const Index size = power(dim_, n);
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(size));
  for (Index w = 0; w < size; ++w) {
    SparseVec v = SparseVec::unit(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = twist(n, *it, v);
    cols.push_back(std::move(v));
  }
  return ExactMatrix::from_columns(static_cast<std::size_t>(size), std::move(cols));
}

const ExactMatrix& BraidOperator::lift(const Permutation& p) const {
  if (!braid_.passed) throw BraidEquationViolated("psi does not satisfy the braid equation");
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->lifts.find(p);
  if (it != cache_->lifts.end()) return it->second;
  return cache_->lifts.emplace(p, lift_along(p.size(), reduced_word(p))).first->second;
}

namespace {

CheckOutcome compare_on_words(const BraidOperator& psi, int n, const std::vector<int>& lhs,
                              const std::vector<int>& rhs, const char* what) {
  const Index size = power(psi.dim(), n);
  for (Index w = 0; w < size; ++w) {
    SparseVec a = SparseVec::unit(w);
    SparseVec b = SparseVec::unit(w);
    for (int pos : lhs) a = psi.twist(n, pos, a);
    for (int pos : rhs) b = psi.twist(n, pos, b);
    if (!(a == b)) return CheckOutcome{false, word_letters(w, n, psi.dim()), what};
  }
  return CheckOutcome{};
}

}  // namespace

CheckOutcome check_braid_equation(const BraidOperator& psi) {
  // Operators listed in application order.
  return compare_on_words(psi, 3, {0, 1, 0}, {1, 0, 1}, "braid equation differs");
}

CheckOutcome check_involutive(const BraidOperator& psi) {
  return compare_on_words(psi, 2, {0, 0}, {}, "psi^2 differs from the identity");
}

ExactMatrix psi_pi(const BraidOperator& psi, const Permutation& p) { return psi.lift(p); }

Permutation block_transposition(int n, int k) {
  std::vector<int> images(static_cast<std::size_t>(n + k));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + k;
  for (int j = 0; j < k; ++j) images[static_cast<std::size_t>(n + j)] = j;
  return Permutation(std::move(images));
}

ExactMatrix block_crossing(const BraidOperator& psi, int n, int k) {
  return psi.lift(block_transposition(n, k));
}

void GradedLinearMap::set_block(int source, int target, ExactMatrix m) {
  if (m.cols() != power(dim_, source) || m.rows() != power(dim_, target)) {
    throw DimensionMismatch("block shape does not match tensor power sizes");
  }
  blocks_[{source, target}] = std::move(m);
}

bool GradedLinearMap::defined_on(int source) const {
  auto it = blocks_.lower_bound({source, -1});
  return it != blocks_.end() && it->first.first == source;
}

TensorElement apply(const GradedLinearMap& map, const TensorElement& t) {
  TensorElement out(map.dim());
  for (const auto& [deg, v] : t.components()) {
    if (!map.defined_on(deg)) throw DegreeOutOfRange("map undefined on degree " + std::to_string(deg));
    for (auto it = map.blocks().lower_bound({deg, -1}); it != map.blocks().end() && it->first.first == deg; ++it) {
      out.add(it->first.second, it->second.apply(v));
    }
  }
  return out;
}

}  // namespace braidcl
