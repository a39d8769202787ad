#pragma once

#include <gmpxx.h>

#include <string>

namespace cf {

enum class Field { Q, Qi };

const char* field_name(Field f);
Field parse_field(const std::string& s);

// Exact element of Q(i). Over Q the imaginary part simply stays zero.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(mpq_class re) : re_(std::move(re)) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar gauss(long re, long im) { return Scalar(mpq_class(re), mpq_class(im)); }
  static Scalar frac(long num, long den);
  static Scalar i() { return gauss(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_.swap(r);
    im_.swap(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_real() && sgn(o.re_) != 0) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inv();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // a += b * c without temporaries in the common real case.
  void add_mul(const Scalar& b, const Scalar& c);
  void sub_mul(const Scalar& b, const Scalar& c);

  // "p/q" when real, "p/q+r/si" style otherwise; used for messages.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// (-1)^k as a scalar.
inline Scalar sign_of(int k) { return Scalar((k % 2 == 0) ? 1 : -1); }

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace cf
