#include "osc/scalar.hpp"

#include <ostream>
#include <sstream>

#include "osc/errors.hpp"

namespace osc {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("Scalar: zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar Scalar::from_parts(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw DomainError("Scalar: zero denominator");
  mpq_class re(re_num, re_den), im(im_num, im_den);
  return Scalar(re, im);
}

bool Scalar::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DomainError("Scalar: inverse of zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("Scalar: division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  mpq_class a = abs(im_);
  if (sgn(im_) < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (a != 1) out += a.get_str();
  out += "i";
  return out;
}

namespace {

std::string latex_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string s = sgn(q) < 0 ? "-" : "";
  mpz_class n = abs(q.get_num());
  return s + "\\frac{" + n.get_str() + "}{" + q.get_den().get_str() + "}";
}

}  // namespace

std::string Scalar::latex() const {
  if (sgn(im_) == 0) return latex_rational(re_);
  std::string out;
  if (sgn(re_) != 0) out = latex_rational(re_);
  mpq_class a = abs(im_);
  if (sgn(im_) < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (a != 1) out += latex_rational(a);
  out += "i";
  if (sgn(re_) != 0) out = "(" + out + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& s, unsigned e) {
  Scalar r(1), b = s;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace osc
