#include "cf/scalar.hpp"

#include "cf/errors.hpp"

namespace cf {

const char* field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi") return Field::Qi;
  throw InvalidInput("unknown field '" + s + "' (expected Q or Qi)");
}

Scalar Scalar::frac(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (b.is_real() && c.is_real()) {
    mpq_class t = b.re_ * c.re_;
    re_ += t;
    return;
  }
  *this += b * c;
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  if (b.is_real() && c.is_real()) {
    mpq_class t = b.re_ * c.re_;
    re_ -= t;
    return;
  }
  *this -= b * c;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InvalidInput("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string s;
  if (sgn(re_) != 0) s = rational_str(re_) + (sgn(im_) > 0 ? "+" : "");
  return s + rational_str(im_) + "i";
}

}  // namespace cf
