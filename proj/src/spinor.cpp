#include "braidcl/spinor.hpp"

#include "braidcl/errors.hpp"

#include <algorithm>

namespace braidcl {

namespace {

CheckOutcome reject(std::string detail, std::vector<int> witness = {}) {
  return {false, std::move(witness), std::move(detail)};
}

/// Independent ∘-monomials in the given letters, degree by degree.
void monomial_basis(const CliffordAlgebra& cl, const std::vector<int>& letters, std::vector<SparseVec>& basis,
                    std::vector<int>& degrees, std::vector<std::vector<int>>* words = nullptr) {
  const int top = cl.exterior().top_degree();
  const int k = static_cast<int>(letters.size());
  EchelonBasis span;
  for (int n = 0; n <= top; ++n) {
    const Index count = power(k, n);
    for (Index w = 0; w < count; ++w) {
      std::vector<int> word = word_letters(w, n, std::max(k, 1));
      for (int& l : word) l = letters[static_cast<std::size_t>(l)];
      const SparseVec& m = cl.monomial(n, word_index(word, cl.dim()));
      if (span.insert(m)) {
        basis.push_back(m);
        degrees.push_back(n);
        if (words) words->push_back(word);
      }
    }
  }
}

}  // namespace

CheckOutcome validate_isotropic_split(const CliffordAlgebra& cl, const IsotropicSplit& split) {
  const int d = cl.dim();
  std::vector<int> sector(static_cast<std::size_t>(d), -1);
  for (int side = 0; side < 2; ++side) {
    for (int i : side == 0 ? split.minus : split.plus) {
      if (i < 0 || i >= d) return reject("index out of range", {i});
      if (sector[static_cast<std::size_t>(i)] != -1) return reject("index listed twice", {i});
      sector[static_cast<std::size_t>(i)] = side;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (sector[static_cast<std::size_t>(i)] == -1) return reject("split does not cover every basis vector", {i});
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int si = sector[static_cast<std::size_t>(i)];
      const int sj = sector[static_cast<std::size_t>(j)];
      if (si == sj && !cl.form()(i, j).is_zero()) {
        return reject(std::string("F does not vanish on W") + (si == 0 ? "-" : "+"), {i, j});
      }
      for (const auto& [idx, c] : cl.braid().image(i, j)) {
        const int k = static_cast<int>(idx / static_cast<Index>(d));
        const int l = static_cast<int>(idx % static_cast<Index>(d));
        if (sector[static_cast<std::size_t>(k)] != sj || sector[static_cast<std::size_t>(l)] != si) {
          return reject("ψ does not carry W_i⊗W_j into W_j⊗W_i", {i, j});
        }
      }
    }
  }
  if (split.minus.size() != split.plus.size()) return reject("W- and W+ differ in dimension");
  std::vector<std::vector<Scalar>> pairing;
  for (int i : split.minus) {
    std::vector<Scalar> row;
    for (int j : split.plus) row.push_back(cl.form()(i, j));
    pairing.push_back(std::move(row));
  }
  if (!pairing.empty() && rank(ExactMatrix::from_rows(pairing)) != pairing.size()) {
    return reject("F pairs W- and W+ degenerately");
  }
  return {};
}

SpinorModule::SpinorModule(const CliffordAlgebra& cl, IsotropicSplit split, SpinorOptions options)
    : cl_(cl), split_(std::move(split)), options_(options) {
  const CheckOutcome valid = validate_isotropic_split(cl_, split_);
  if (!valid) throw SplitInvalid(valid.detail + (valid.witness.empty() ? "" : " at " + render_word(valid.witness)));
  finite_ = cl_.exterior().finite_degree().has_value();
  if (!finite_ && options_.strict) {
    throw NotFiniteDimensional("the algebra does not terminate within the truncation degree " +
                               std::to_string(cl_.cap()));
  }
  monomial_basis(cl_, split_.minus, minus_basis_, minus_degree_, &minus_words_);
  monomial_basis(cl_, split_.plus, plus_basis_, plus_degree_);

  for (std::size_t i = 0; i < minus_basis_.size(); ++i) {
    for (std::size_t j = 0; j < plus_basis_.size(); ++j) {
      if (!cl_.within(minus_degree_[i] + plus_degree_[j])) continue;
      mu_pairs_.emplace_back(i, j);
      mu_columns_.push_back(cl_.multiply(minus_basis_[i], plus_basis_[j]));
    }
  }
  mu_ = ExactMatrix::from_columns(cl_.size(), mu_columns_);
  mu_rank_ = rank(mu_);

  const std::size_t n = dim();
  for (std::size_t a = 0; a < cl_.size(); ++a) {
    ExactMatrix m(n, n);
    for (std::size_t s = 0; s < n; ++s) {
      if (action_defined(a, s)) m.set_column(s, reduce(cl_.multiply(SparseVec::unit(a), minus_basis_[s])));
    }
    action_.push_back(std::move(m));
  }
  if (options_.zero_action_entry && cl_.size() > 1) {
    ExactMatrix& m = action_[cl_.offset(1)];
    for (std::size_t s = 0; s < n; ++s) {
      if (!m.column(s).empty()) {
        m.set(static_cast<std::size_t>(m.column(s).begin()->first), s, 0);
        break;
      }
    }
  }
}

std::string SpinorModule::render_spinor(std::size_t s) const {
  return "[" + render_word(minus_words_.at(s)) + "]";
}

bool SpinorModule::action_defined(std::size_t a, std::size_t s) const {
  return cl_.within(cl_.degree_of(a) + minus_degree_.at(s));
}

SparseVec SpinorModule::normal_form(const SparseVec& element) const {
  auto coords = solve(mu_, element);
  if (!coords) throw NotInSubspace("element outside the span of W-^∧∘W+^∧ within the truncation degree");
  return *coords;
}

SparseVec SpinorModule::reduce(const SparseVec& element) const {
  // (m∘p)⊗1 = m⊗ε+(p), and ε+ on W+^∧ is the scalar part.
  Accumulator acc;
  for (const auto& [idx, c] : normal_form(element)) {
    const auto& [i, j] = mu_pairs_.at(static_cast<std::size_t>(idx));
    const Scalar e = plus_basis_[j].at(0);
    if (!e.is_zero()) acc.add(i, c * e);
  }
  return acc.take();
}

SparseVec SpinorModule::act(std::size_t a, std::size_t s) const {
  if (!action_defined(a, s)) throw CapExceeded("spinor action beyond the truncation degree");
  return action_.at(a).column(s);
}

std::vector<CheckRecord> verify_spinor(const SpinorModule& sm) {
  const CliffordAlgebra& cl = sm.algebra();
  const std::size_t n = cl.size();
  const std::size_t dim_s = sm.dim();
  const std::string truncated = "verified up to degree " + std::to_string(sm.verified_degree());
  std::vector<CheckRecord> out;

  out.push_back(single("μ_F: W-^∧⊗W+^∧ → A_F is a linear bijection",
                       sm.mu_rank() == sm.mu_pairs() && sm.mu_rank() == n, {},
                       "rank " + std::to_string(sm.mu_rank()) + ", pairs " + std::to_string(sm.mu_pairs()) +
                           ", algebra dimension " + std::to_string(n)));
  out.push_back(single("ρ(1) = id", sm.action(0) == ExactMatrix::identity(dim_s), "1"));
  {
    CheckTally tally("ρ(a∘b) = ρ(a)ρ(b)");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t s = 0; s < dim_s; ++s) {
          const int deg = cl.degree_of(a) + cl.degree_of(b) + sm.spinor_degree(s);
          if (!cl.within(deg)) {
            tally.skip(deg);
            continue;
          }
          Accumulator lhs;
          for (const auto& [c, k] : cl.structure(a, b)) lhs.add(sm.act(static_cast<std::size_t>(c), s), k);
          Accumulator rhs;
          for (const auto& [t, k] : sm.act(b, s)) rhs.add(sm.act(a, static_cast<std::size_t>(t)), k);
          if (lhs.take() == rhs.take()) {
            tally.pass(deg);
          } else {
            tally.fail(deg, join_factors({cl.render_basis(a), cl.render_basis(b)}) + " on " + sm.render_spinor(s));
          }
        }
      }
    }
    out.push_back(tally.finish());
  }
  {
    // On a truncated algebra, elements up to degree k act faithfully on spinors up to degree top - k.
    const int top = sm.verified_degree();
    const int k = sm.finite() ? top : top / 2;
    std::vector<SparseVec> cols;
    for (std::size_t a = 0; a < n; ++a) {
      if (cl.degree_of(a) > k) continue;
      Accumulator acc;
      for (std::size_t s = 0; s < dim_s; ++s) {
        if (sm.spinor_degree(s) + k > top && !sm.finite()) continue;
        for (const auto& [r, c] : sm.action(a).column(s)) acc.add(static_cast<Index>(s * dim_s) + r, c);
      }
      cols.push_back(acc.take());
    }
    const std::size_t count = cols.size();
    const std::size_t r = rank(ExactMatrix::from_columns(dim_s * dim_s, std::move(cols)));
    std::string detail = "rank " + std::to_string(r) + " of " + std::to_string(count);
    if (!sm.finite()) detail += "; elements up to degree " + std::to_string(k);
    out.push_back(single("ρ is faithful", r == count, {}, detail));
  }
  if (sm.finite()) {
    // X ρ(g) = ρ(g) X for every generator g; unknown X[r][c] at column r·D + c.
    const std::size_t D = dim_s;
    std::vector<std::size_t> gens;
    for (std::size_t a = 0; a < n; ++a) {
      if (cl.degree_of(a) == 1) gens.push_back(a);
    }
    std::vector<SparseVec> cols;
    for (std::size_t r = 0; r < D; ++r) {
      for (std::size_t c = 0; c < D; ++c) {
        Accumulator acc;
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const ExactMatrix& rho = sm.action(gens[g]);
          const Index base = static_cast<Index>(g * D * D);
          for (std::size_t j = 0; j < D; ++j) acc.add(base + r * D + j, rho.at(c, j));
          for (std::size_t i = 0; i < D; ++i) acc.add(base + i * D + c, -rho.at(i, r));
        }
        cols.push_back(acc.take());
      }
    }
    const std::size_t commutant =
        kernel_basis(ExactMatrix::from_columns(std::max<std::size_t>(gens.size(), 1) * D * D, std::move(cols))).size();
    out.push_back(single("commutant of ρ(A_F) is one-dimensional", commutant == 1, {},
                         "commutant dimension " + std::to_string(commutant)));
    out.push_back(single("dim A_F = (dim S)²", n == D * D, {},
                         "dim A_F = " + std::to_string(n) + ", dim S = " + std::to_string(D)));
  } else {
    CheckRecord commutant;
    commutant.name = "commutant of ρ(A_F) is one-dimensional";
    commutant.status = CheckStatus::skipped;
    commutant.detail = "skipped: needs a finite-dimensional algebra";
    out.push_back(commutant);
    CheckRecord count = commutant;
    count.name = "dim A_F = (dim S)²";
    out.push_back(count);
  }
  if (!sm.finite()) {
    for (auto& r : out) {
      if (r.status == CheckStatus::pass) r.detail = r.detail.empty() ? truncated : r.detail + "; " + truncated;
    }
  }
  return out;
}

}  // namespace braidcl
