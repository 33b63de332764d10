#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace racah {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return GaussianRational(mpq_class(num, den));
  }
  static GaussianRational imaginary() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws on zero.
  GaussianRational inverse() const {
    mpq_class norm = re_ * re_ + im_ * im_;
    if (norm == 0) throw std::domain_error("inverse of zero");
    return GaussianRational(re_ / norm, -im_ / norm);
  }

  GaussianRational pow(unsigned long e) const {
    GaussianRational acc(1);
    GaussianRational base = *this;
    for (; e; e >>= 1) {
      if (e & 1) acc *= base;
      if (e > 1) base *= base;
    }
    return acc;
  }

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  /// Parenthesised coefficient form: "(3/16)", "(2)*i", "(1/2-3*i)".
  std::string str() const {
    if (im_ == 0) return "(" + re_.get_str() + ")";
    if (re_ == 0) return "(" + im_.get_str() + ")*i";
    mpq_class ai = abs(im_);
    std::string sign = im_ < 0 ? "-" : "+";
    return "(" + re_.get_str() + sign + ai.get_str() + "*i)";
  }

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace racah
