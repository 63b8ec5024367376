#pragma once

#include "braidcl/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace braidcl {

using Index = std::uint64_t;

/// Sparse vector with entries sorted by index; stored coefficients are nonzero.
class SparseVec {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Index i, Scalar value = 1);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Coefficient at i (zero when absent).
  Scalar at(Index i) const;
  const Scalar* find(Index i) const;

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec& operator*=(const Scalar& c);
  void add_scaled(const SparseVec& o, const Scalar& c);

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(SparseVec a, const Scalar& c) { return a *= c; }
  friend SparseVec operator*(const Scalar& c, SparseVec a) { return a *= c; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

  Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

 private:
  friend class Accumulator;
  std::vector<Entry> entries_;
};

/// Unordered builder for a SparseVec; call take() once done.
class Accumulator {
 public:
  void add(Index i, const Scalar& c);
  void add(const SparseVec& v, const Scalar& c = 1);
  bool empty() const { return terms_.empty(); }
  SparseVec take();

 private:
  std::unordered_map<Index, Scalar> terms_;
};

/// Exact sparse matrix stored column by column.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static ExactMatrix from_columns(std::size_t rows, std::vector<SparseVec> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  Scalar at(std::size_t r, std::size_t c) const { return cols_.at(c).at(r); }
  void set(std::size_t r, std::size_t c, const Scalar& v);
  const SparseVec& column(std::size_t c) const { return cols_.at(c); }
  void set_column(std::size_t c, SparseVec v);

  SparseVec apply(const SparseVec& v) const;
  ExactMatrix transpose() const;
  std::vector<SparseVec> row_vectors() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const Scalar& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& c) { return a *= c; }
  friend ExactMatrix operator*(const Scalar& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> cols_;
};

/// Kronecker product a ⊗ b with index (i_a * rows_b + i_b).
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Incrementally maintained reduced row-echelon basis of a subspace.
class EchelonBasis {
 public:
  /// Adds v to the span. Returns false when v was already dependent.
  bool insert(const SparseVec& v);
  std::size_t rank() const { return rows_.size(); }

  /// Rows ordered by strictly increasing pivot.
  std::vector<SparseVec> rows() const;
  std::vector<Index> pivots() const;

  /// Coordinates of v in the pivot-ordered rows, or nullopt if v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;
  SparseVec residual(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return residual(v).empty(); }

 private:
  std::map<Index, SparseVec> rows_;  // pivot -> row with 1 at pivot, 0 at other pivots
};

struct RrefResult {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Exact null-space basis, one vector per free column.
std::vector<SparseVec> kernel_basis(const ExactMatrix& m);
/// Some v with m v = rhs, or nullopt when rhs is outside the column space.
std::optional<SparseVec> solve(const ExactMatrix& m, const SparseVec& rhs);
/// Throws NotInvertible for singular or non-square input.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace braidcl
