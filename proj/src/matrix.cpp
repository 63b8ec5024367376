#include "braidcl/matrix.hpp"

#include "braidcl/errors.hpp"

#include <algorithm>

namespace braidcl {

SparseVec SparseVec::unit(Index i, Scalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(i, std::move(value));
  return v;
}

const Scalar* SparseVec::find(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index key) { return e.first < key; });
  if (it == entries_.end() || it->first != i) return nullptr;
  return &it->second;
}

Scalar SparseVec::at(Index i) const {
  const Scalar* s = find(i);
  return s ? *s : Scalar();
}

void SparseVec::add_scaled(const SparseVec& o, const Scalar& c) {
  if (c.is_zero() || o.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, b->second * c);
      ++b;
    } else {
      Scalar s = std::move(a->second);
      s += b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  add_scaled(o, Scalar(1));
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  add_scaled(o, Scalar(-1));
  return *this;
}

SparseVec& SparseVec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

void Accumulator::add(Index i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted) it->second += c;
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [i, s] : v) add(i, s);
  } else {
    for (const auto& [i, s] : v) add(i, s * c);
  }
}

SparseVec Accumulator::take() {
  SparseVec v;
  v.entries_.reserve(terms_.size());
  for (auto& [i, s] : terms_) {
    if (!s.is_zero()) v.entries_.emplace_back(i, std::move(s));
  }
  terms_.clear();
  std::sort(v.entries_.begin(), v.entries_.end(),
            [](const SparseVec::Entry& a, const SparseVec::Entry& b) { return a.first < b.first; });
  return v;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i] = SparseVec::unit(i);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, std::vector<SparseVec> cols) {
  for (const auto& c : cols) {
    if (!c.empty() && c.max_index() >= rows) throw DimensionMismatch("column entry out of range");
  }
  ExactMatrix m;
  m.rows_ = rows;
  m.cols_ = std::move(cols);
  return m;
}

std::size_t ExactMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.nnz();
  return n;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_.size()) throw DimensionMismatch("index out of range");
  SparseVec& col = cols_[c];
  col.add_scaled(SparseVec::unit(r), v - col.at(r));
}

void ExactMatrix::set_column(std::size_t c, SparseVec v) {
  if (!v.empty() && v.max_index() >= rows_) throw DimensionMismatch("column entry out of range");
  cols_.at(c) = std::move(v);
}

SparseVec ExactMatrix::apply(const SparseVec& v) const {
  if (!v.empty() && v.max_index() >= cols_.size()) throw DimensionMismatch("vector longer than matrix width");
  if (v.nnz() == 1) return cols_[v.begin()->first] * v.begin()->second;
  Accumulator acc;
  for (const auto& [i, s] : v) acc.add(cols_[i], s);
  return acc.take();
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<Accumulator> rows(rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& [r, s] : cols_[c]) rows[r].add(c, s);
  }
  ExactMatrix t(cols_.size(), rows_);
  for (std::size_t r = 0; r < rows_; ++r) t.cols_[r] = rows[r].take();
  return t;
}

std::vector<SparseVec> ExactMatrix::row_vectors() const { return transpose().cols_; }

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_.size() != o.cols_.size()) throw DimensionMismatch("matrix sum shape");
  for (std::size_t c = 0; c < cols_.size(); ++c) cols_[c] += o.cols_[c];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_.size() != o.cols_.size()) throw DimensionMismatch("matrix difference shape");
  for (std::size_t c = 0; c < cols_.size(); ++c) cols_[c] -= o.cols_[c];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& c) {
  for (auto& col : cols_) col *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) out.cols_[c] = a.apply(b.cols_[c]);
  return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      Accumulator acc;
      for (const auto& [ra, sa] : a.column(ca)) {
        for (const auto& [rb, sb] : b.column(cb)) acc.add(ra * b.rows() + rb, sa * sb);
      }
      out.set_column(ca * b.cols() + cb, acc.take());
    }
  }
  return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = residual(v);
  if (r.empty()) return false;
  Index pivot = r.begin()->first;
  Scalar lead = r.begin()->second;
  r *= Scalar(1) / lead;
  for (auto& [p, row] : rows_) {
    const Scalar* s = row.find(pivot);
    if (s) {
      Scalar factor = -*s;
      row.add_scaled(r, factor);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVec> EchelonBasis::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<Index> EchelonBasis::pivots() const {
  std::vector<Index> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

SparseVec EchelonBasis::residual(const SparseVec& v) const {
  if (rows_.empty()) return v;
  Accumulator acc;
  acc.add(v);
  bool touched = false;
  for (const auto& [i, s] : v) {
    auto it = rows_.find(i);
    if (it != rows_.end()) {
      acc.add(it->second, -s);
      touched = true;
    }
  }
  if (!touched) return v;
  return acc.take();
}

std::optional<std::vector<Scalar>> EchelonBasis::coordinates(const SparseVec& v) const {
  if (!residual(v).empty()) return std::nullopt;
  std::vector<Scalar> coords;
  coords.reserve(rows_.size());
  for (const auto& [p, row] : rows_) coords.push_back(v.at(p));
  return coords;
}

RrefResult rref(const ExactMatrix& m) {
  EchelonBasis basis;
  for (const auto& row : m.row_vectors()) basis.insert(row);
  RrefResult out{ExactMatrix(m.rows(), m.cols()), {}};
  std::size_t r = 0;
  for (const auto& row : basis.rows()) {
    for (const auto& [c, s] : row) out.matrix.set(r, c, s);
    ++r;
  }
  for (Index p : basis.pivots()) out.pivots.push_back(static_cast<std::size_t>(p));
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  EchelonBasis basis;
  // Column rank; columns are what we store.
  for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
  return basis.rank();
}

std::vector<SparseVec> kernel_basis(const ExactMatrix& m) {
  EchelonBasis basis;
  for (const auto& row : m.row_vectors()) basis.insert(row);
  auto rows = basis.rows();
  auto pivots = basis.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Accumulator acc;
    acc.add(f, Scalar(1));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar* s = rows[r].find(f);
      if (s) acc.add(pivots[r], -*s);
    }
    out.push_back(acc.take());
  }
  return out;
}

std::optional<SparseVec> solve(const ExactMatrix& m, const SparseVec& rhs) {
  if (!rhs.empty() && rhs.max_index() >= m.rows()) throw DimensionMismatch("right-hand side longer than matrix height");
  // Row-reduce [m | rhs]; the augmented column has index m.cols().
  const Index aug = m.cols();
  auto rows = m.row_vectors();
  for (const auto& [r, s] : rhs) rows[r].add_scaled(SparseVec::unit(aug), s);
  EchelonBasis basis;
  for (const auto& row : rows) basis.insert(row);
  Accumulator x;
  auto pivots = basis.pivots();
  auto reduced = basis.rows();
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    if (pivots[r] == aug) return std::nullopt;
    x.add(pivots[r], reduced[r].at(aug));
  }
  return x.take();
}

ExactMatrix inverse(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw NotInvertible("non-square matrix");
  // Row-reduce [m | I]; rows carry the identity block shifted by n.
  auto rows = m.row_vectors();
  for (std::size_t r = 0; r < n; ++r) rows[r].add_scaled(SparseVec::unit(n + r), Scalar(1));
  EchelonBasis basis;
  for (const auto& row : rows) basis.insert(row);
  auto pivots = basis.pivots();
  if (basis.rank() != n || (n > 0 && pivots.back() >= n)) throw NotInvertible("singular matrix");
  auto reduced = basis.rows();
  ExactMatrix inv(n, n);
  std::vector<Accumulator> cols(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, s] : reduced[r]) {
      if (c >= n) cols[c - n].add(r, s);
    }
  }
  for (std::size_t c = 0; c < n; ++c) inv.set_column(c, cols[c].take());
  return inv;
}

}  // namespace braidcl
