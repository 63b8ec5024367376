#include "braidcl/clifford.hpp"

#include "braidcl/errors.hpp"

#include <string>

namespace braidcl {

QuadraticForm::QuadraticForm(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim), std::vector<Scalar>(static_cast<std::size_t>(dim))) {}

QuadraticForm::QuadraticForm(std::vector<std::vector<Scalar>> entries)
    : dim_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != dim_) throw DimensionMismatch("form matrix must be square");
  }
}

bool QuadraticForm::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& c : row) {
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

Scalar QuadraticForm::evaluate(const SparseVec& v) const {
  Scalar sum;
  const Index d = static_cast<Index>(dim_);
  for (const auto& [idx, c] : v) sum += c * entries_[idx / d][idx % d];
  return sum;
}

SparseVec QuadraticForm::contract_at(int n, int pos, const SparseVec& v) const {
  if (pos < 0 || pos + 1 >= n) throw DegreeOutOfRange("contraction position outside the word");
  const Index d = static_cast<Index>(dim_);
  const Index low = power(dim_, n - pos - 2);
  const Index pair_span = d * d * low;
  Accumulator acc;
  for (const auto& [idx, c] : v) {
    const Index pair = (idx / low) % (d * d);
    const Scalar& f = entries_[pair / d][pair % d];
    if (f.is_zero()) continue;
    acc.add((idx / pair_span) * low + idx % low, c * f);
  }
  return acc.take();
}

CheckOutcome check_form_compatibility(const BraidOperator& psi, const QuadraticForm& form) {
  if (psi.dim() != form.dim()) throw DimensionMismatch("form and braid act on different spaces");
  const Index size = power(psi.dim(), 3);
  for (Index w = 0; w < size; ++w) {
    const SparseVec unit = SparseVec::unit(w);
    const SparseVec lhs = form.contract_at(3, 0, psi.twist(3, 1, unit));
    const SparseVec rhs = form.contract_at(3, 1, psi.twist(3, 0, unit));
    if (!(lhs == rhs)) return CheckOutcome{false, word_letters(w, 3, psi.dim()), "(F⊗id)(id⊗psi) differs from (id⊗F)(psi⊗id)"};
  }
  return {};
}

CheckOutcome check_psi_symmetric(const BraidOperator& psi, const QuadraticForm& form) {
  if (psi.dim() != form.dim()) throw DimensionMismatch("form and braid act on different spaces");
  const int d = psi.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!(form.evaluate(psi.image(i, j)) == form(i, j))) return CheckOutcome{false, {i, j}, "F∘psi differs from F"};
    }
  }
  return {};
}

QuadraticForm symmetrize_form(const BraidOperator& psi, const QuadraticForm& form) {
  if (!psi.involutive()) throw NotInvolutive("symmetrization needs an involutive braid");
  if (psi.dim() != form.dim()) throw DimensionMismatch("form and braid act on different spaces");
  QuadraticForm out(form.dim());
  const Scalar half(1, 2);
  for (int i = 0; i < form.dim(); ++i) {
    for (int j = 0; j < form.dim(); ++j) out.set(i, j, (form(i, j) + form.evaluate(psi.image(i, j))) * half);
  }
  return out;
}

CliffordAlgebra::CliffordAlgebra(ExteriorAlgebra exterior, QuadraticForm form, CliffordOptions options)
    : ext_(std::move(exterior)), form_(std::move(form)), options_(options), cache_(std::make_shared<Cache>()) {
  if (form_.dim() != ext_.dim()) throw DimensionMismatch("form and braid act on different spaces");
  const auto compat = check_form_compatibility(ext_.braid(), form_);
  if (!compat) throw FormNotCompatible("form is not compatible with psi at " + render_word(compat.witness));
  for (int n = 0; n <= ext_.top_degree(); ++n) {
    offsets_.push_back(degree_of_.size());
    degree_of_.insert(degree_of_.end(), ext_.degree_dim(n), n);
  }
  offsets_.push_back(degree_of_.size());
}

SparseVec CliffordAlgebra::to_global(const ExteriorElement& e) const {
  Accumulator acc;
  for (const auto& [n, v] : e.tensor.components()) {
    if (n > ext_.top_degree()) {
      if (ext_.vanishes(n)) throw NotInSubspace("nonzero component in a vanishing degree");
      throw CapExceeded("component above the truncation degree");
    }
    const auto coords = ext_.coordinates_or_throw(n, v);
    for (std::size_t r = 0; r < coords.size(); ++r) acc.add(offset(n) + r, coords[r]);
  }
  return acc.take();
}

ExteriorElement CliffordAlgebra::from_global(const SparseVec& g) const {
  TensorElement t(dim());
  for (const auto& [idx, c] : g) {
    const int n = degree_of(static_cast<std::size_t>(idx));
    t.add(n, ext_.basis(n)[static_cast<std::size_t>(idx) - offset(n)], c);
  }
  return ExteriorElement{t};
}

ExteriorElement CliffordAlgebra::basis_element(std::size_t g) const { return from_global(SparseVec::unit(g)); }

std::string CliffordAlgebra::render_basis(std::size_t g) const { return basis_element(g).tensor.render(); }

SparseVec CliffordAlgebra::tensor_contract(const SparseVec& x, int n, const SparseVec& v) const {
  if (n == 0 || x.empty() || v.empty()) return {};
  // x⊗v, then x is braided rightwards one slot at a time and paired with the next letter.
  const Index shift = power(dim(), n);
  Accumulator start;
  for (const auto& [ix, cx] : x) {
    for (const auto& [iv, cv] : v) start.add(ix * shift + iv, cx * cv);
  }
  SparseVec t = start.take();
  Accumulator out;
  for (int j = 0; j < n; ++j) {
    const bool negative = !options_.drop_leibniz_sign && (j % 2 == 1);
    out.add(form_.contract_at(n + 1, j, t), negative ? Scalar(-1) : Scalar(1));
    if (j + 1 < n) t = braid().twist(n + 1, j, t);
  }
  return out.take();
}

SparseVec CliffordAlgebra::tensor_contract_letter(int letter, int n, const SparseVec& v) const {
  return tensor_contract(SparseVec::unit(static_cast<Index>(letter)), n, v);
}

SparseVec CliffordAlgebra::tensor_contract_word(int m, Index word, int n, const SparseVec& v) const {
  if (m > n) return {};
  const auto letters = word_letters(word, m, dim());
  SparseVec t = v;
  int deg = n;
  for (int i = m - 1; i >= 0 && !t.empty(); --i) {
    t = tensor_contract_letter(letters[static_cast<std::size_t>(i)], deg, t);
    --deg;
  }
  return t;
}

ExteriorElement CliffordAlgebra::contract(const SparseVec& x, const ExteriorElement& theta) const {
  TensorElement out(dim());
  for (const auto& [n, v] : theta.tensor.components()) {
    if (n == 0) continue;
    const SparseVec c = tensor_contract(x, n, ext_.representative_of(n, v));
    if (!ext_.vanishes(n - 1)) out.add(n - 1, ext_.antisymmetrizer(n - 1).apply(c));
  }
  return ExteriorElement{out};
}

ExteriorElement CliffordAlgebra::multi_contract(const TensorElement& u, const ExteriorElement& theta) const {
  TensorElement out(dim());
  for (const auto& [m, coeffs] : u.components()) {
    for (const auto& [w, c] : coeffs) {
      ExteriorElement cur = theta;
      const auto letters = word_letters(w, m, dim());
      for (int i = m - 1; i >= 0 && !cur.tensor.is_zero(); --i) {
        cur = contract(SparseVec::unit(static_cast<Index>(letters[static_cast<std::size_t>(i)])), cur);
      }
      out += cur.tensor * c;
    }
  }
  return ExteriorElement{out};
}

SparseVec CliffordAlgebra::relative_homogeneous(int n, const SparseVec& theta_rep, int m, const SparseVec& eta_rep,
                                                int k) const {
  if (k > m || k > n || theta_rep.empty() || eta_rep.empty()) return {};
  const int target = n + m - 2 * k;
  if (ext_.vanishes(target)) return {};
  // Σ α⊗β = A_{n-k,k}(θ*); each term contributes α ⊗ C_β(η*).
  const SparseVec split = ext_.apply_partial(n - k, k, theta_rep, true);
  const Index tail = power(dim(), k);
  const Index shift = power(dim(), m - k);
  std::map<Index, SparseVec> contracted;
  Accumulator acc;
  for (const auto& [w, c] : split) {
    const Index beta = w % tail;
    auto it = contracted.find(beta);
    if (it == contracted.end()) it = contracted.emplace(beta, tensor_contract_word(k, beta, m, eta_rep)).first;
    for (const auto& [i, s] : it->second) acc.add((w / tail) * shift + i, c * s);
  }
  return ext_.antisymmetrizer(target).apply(acc.take());
}

ExteriorElement CliffordAlgebra::relative_contract(const ExteriorElement& theta, const ExteriorElement& eta,
                                                   int k) const {
  if (!theta.tensor.is_homogeneous()) throw DegreeOutOfRange("relative contraction needs a homogeneous left factor");
  TensorElement out(dim());
  if (theta.tensor.is_zero()) return ExteriorElement{out};
  const int n = theta.tensor.max_degree();
  if (k < 1 || k > n) throw DegreeOutOfRange("relative contraction order outside 1..deg");
  const SparseVec theta_rep = ext_.representative_of(n, theta.tensor.component(n));
  for (const auto& [m, v] : eta.tensor.components()) {
    if (n + m - 2 * k > cap() && !ext_.vanishes(n + m - 2 * k)) throw CapExceeded("relative contraction above the cap");
    out.add(n + m - 2 * k, relative_homogeneous(n, theta_rep, m, ext_.representative_of(m, v), k));
  }
  return ExteriorElement{out};
}

ExteriorElement CliffordAlgebra::product(const ExteriorElement& theta, const ExteriorElement& eta) const {
  TensorElement out(dim());
  for (const auto& [n, a] : theta.tensor.components()) {
    const SparseVec a_rep = ext_.representative_of(n, a);
    for (const auto& [m, b] : eta.tensor.components()) {
      out.add(n + m, ext_.wedge_homogeneous(n, a, m, b));
      const SparseVec b_rep = ext_.representative_of(m, b);
      for (int k = 1; k <= std::min(n, m); ++k) out.add(n + m - 2 * k, relative_homogeneous(n, a_rep, m, b_rep, k));
    }
  }
  return ExteriorElement{out};
}

const SparseVec& CliffordAlgebra::structure(std::size_t a, std::size_t b) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->structure.find({a, b});
  if (it != cache_->structure.end()) return it->second;
  const int n = degree_of(a);
  const int m = degree_of(b);
  if (!within(n + m)) throw CapExceeded("product of degrees " + std::to_string(n) + " and " + std::to_string(m) +
                                        " exceeds truncation degree " + std::to_string(cap()));
  const SparseVec& ba = ext_.basis(n)[a - offset(n)];
  const SparseVec& bb = ext_.basis(m)[b - offset(m)];
  const SparseVec& ra = ext_.representative(n, a - offset(n));
  const SparseVec& rb = ext_.representative(m, b - offset(m));
  TensorElement out(dim());
  out.add(n + m, ext_.wedge_homogeneous(n, ba, m, bb));
  for (int k = 1; k <= std::min(n, m); ++k) out.add(n + m - 2 * k, relative_homogeneous(n, ra, m, rb, k));
  return cache_->structure.emplace(std::make_pair(a, b), to_global(ExteriorElement{out})).first->second;
}

SparseVec CliffordAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc;
  for (const auto& [i, ca] : a) {
    for (const auto& [j, cb] : b) acc.add(structure(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), ca * cb);
  }
  return acc.take();
}

TensorElement CliffordAlgebra::contract_tensor(int letter, const TensorElement& t) const {
  TensorElement out(dim());
  for (const auto& [n, v] : t.components()) {
    if (n > 0) out.add(n - 1, tensor_contract_letter(letter, n, v));
  }
  return out;
}

namespace {

TensorElement prepend_letter(int dim, int letter, const TensorElement& t) {
  TensorElement out(dim);
  for (const auto& [n, v] : t.components()) {
    const Index shift = static_cast<Index>(letter) * power(dim, n);
    Accumulator acc;
    for (const auto& [i, c] : v) acc.add(shift + i, c);
    out.add(n + 1, acc.take());
  }
  return out;
}

}  // namespace

const TensorElement& CliffordAlgebra::lambda_word(int n, Index word) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->lambda.find({n, word});
  if (it != cache_->lambda.end()) return it->second;
  TensorElement out(dim());
  if (n == 0) {
    out = TensorElement::scalar(dim(), 1);
  } else {
    const Index rest_size = power(dim(), n - 1);
    const int letter = static_cast<int>(word / rest_size);
    const TensorElement& rest = lambda_word(n - 1, word % rest_size);
    out = prepend_letter(dim(), letter, rest) + contract_tensor(letter, rest);
  }
  return cache_->lambda.emplace(std::make_pair(n, word), std::move(out)).first->second;
}

const TensorElement& CliffordAlgebra::lambda_inverse_word(int n, Index word) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->lambda_inverse.find({n, word});
  if (it != cache_->lambda_inverse.end()) return it->second;
  TensorElement out(dim());
  if (n == 0) {
    out = TensorElement::scalar(dim(), 1);
  } else {
    const Index rest_size = power(dim(), n - 1);
    const int letter = static_cast<int>(word / rest_size);
    const Index rest = word % rest_size;
    out = prepend_letter(dim(), letter, lambda_inverse_word(n - 1, rest));
    if (n >= 2) {
      out -= lambda_inverse_unchecked(
          TensorElement::homogeneous(dim(), n - 2, tensor_contract_letter(letter, n - 1, SparseVec::unit(rest))));
    }
  }
  return cache_->lambda_inverse.emplace(std::make_pair(n, word), std::move(out)).first->second;
}

TensorElement CliffordAlgebra::lambda_unchecked(const TensorElement& t) const {
  TensorElement out(dim());
  for (const auto& [n, v] : t.components()) {
    for (const auto& [w, c] : v) out += lambda_word(n, w) * c;
  }
  return out;
}

TensorElement CliffordAlgebra::lambda_inverse_unchecked(const TensorElement& t) const {
  TensorElement out(dim());
  for (const auto& [n, v] : t.components()) {
    for (const auto& [w, c] : v) out += lambda_inverse_word(n, w) * c;
  }
  return out;
}

TensorElement CliffordAlgebra::lambda(const TensorElement& t) const {
  if (t.max_degree() > cap()) throw CapExceeded("λ_F argument above the truncation degree");
  return lambda_unchecked(t);
}

TensorElement CliffordAlgebra::lambda_inverse(const TensorElement& t) const {
  if (t.max_degree() > cap()) throw CapExceeded("λ_F^{-1} argument above the truncation degree");
  return lambda_inverse_unchecked(t);
}

TensorElement CliffordAlgebra::tensor_product(const TensorElement& a, const TensorElement& b) const {
  if (a.is_zero() || b.is_zero()) return TensorElement(dim());
  if (a.max_degree() + b.max_degree() > cap()) throw CapExceeded("∘ product above the truncation degree");
  return lambda_unchecked(concat(lambda_inverse_unchecked(a), lambda_inverse_unchecked(b)));
}

std::vector<TensorElement> CliffordAlgebra::ideal_basis(int n) const {
  if (n > cap()) throw CapExceeded("ideal basis above the truncation degree");
  std::vector<TensorElement> out;
  for (int m = 2; m <= n; ++m) {
    for (auto& u : kernel_basis(ext_.antisymmetrizer(m))) {
      out.push_back(lambda_inverse_unchecked(TensorElement::homogeneous(dim(), m, std::move(u))));
    }
  }
  return out;
}

std::vector<TensorElement> CliffordAlgebra::q_generators() const {
  const auto d2 = static_cast<std::size_t>(dim() * dim());
  std::vector<TensorElement> out;
  for (auto& u : kernel_basis(ExactMatrix::identity(d2) - braid().matrix())) {
    const Scalar f = form_.evaluate(u);
    out.push_back(TensorElement::homogeneous(dim(), 2, std::move(u)) - TensorElement::scalar(dim(), f));
  }
  return out;
}

SparseVec CliffordAlgebra::class_of(const TensorElement& t) const {
  Accumulator acc;
  for (const auto& [n, v] : t.components()) {
    if (ext_.vanishes(n)) continue;
    if (n > ext_.top_degree()) throw CapExceeded("class above the truncation degree");
    const auto coords = ext_.coordinates_or_throw(n, ext_.antisymmetrizer(n).apply(v));
    for (std::size_t r = 0; r < coords.size(); ++r) acc.add(offset(n) + r, coords[r]);
  }
  return acc.take();
}

const SparseVec& CliffordAlgebra::monomial(int n, Index word) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->monomials.find({n, word});
  if (it != cache_->monomials.end()) return it->second;
  if (!within(n)) throw CapExceeded("monomial above the truncation degree");
  return cache_->monomials.emplace(std::make_pair(n, word), class_of(lambda_word(n, word))).first->second;
}

const TensorElement& CliffordAlgebra::generator_expansion(std::size_t g) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->expansions.find(g);
  if (it != cache_->expansions.end()) return it->second;
  const int n = degree_of(g);
  TensorElement rep = TensorElement::homogeneous(dim(), n, ext_.representative(n, g - offset(n)));
  return cache_->expansions.emplace(g, lambda_inverse_unchecked(rep)).first->second;
}

SparseVec CliffordAlgebra::quotient_product(std::size_t a, std::size_t b) const {
  const int n = degree_of(a);
  const int m = degree_of(b);
  if (!within(n + m)) throw CapExceeded("quotient product above the truncation degree");
  TensorElement ra = TensorElement::homogeneous(dim(), n, ext_.representative(n, a - offset(n)));
  TensorElement rb = TensorElement::homogeneous(dim(), m, ext_.representative(m, b - offset(m)));
  return class_of(lambda_unchecked(concat(lambda_inverse_unchecked(ra), lambda_inverse_unchecked(rb))));
}

}  // namespace braidcl
