#include "braidcl/scalar.hpp"

#include "braidcl/errors.hpp"

#include <cctype>
#include <ostream>

namespace braidcl {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ZeroDenominator("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += '+';
  out += im_.get_str();
  out += 'i';
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    mpq_class re = rational(true);
    mpq_class im = 0;
    if (pos_ < text_.size()) {
      char sign = text_[pos_];
      if (sign != '+' && sign != '-') fail("expected '+' or '-' before imaginary part");
      ++pos_;
      im = rational(false);
      if (sign == '-') im = -im;
      if (pos_ >= text_.size() || text_[pos_] != 'i') fail("expected trailing 'i'");
      ++pos_;
    }
    if (pos_ != text_.size()) fail("trailing characters");
    return Scalar(re, im);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedScalar("malformed scalar '" + std::string(text_) + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  mpq_class rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num(digits());
    mpz_class den(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = mpz_class(digits());
      if (den == 0) throw ZeroDenominator("zero denominator in '" + std::string(text_) + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const Scalar& s) { return s.str(); }

Scalar factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace braidcl
