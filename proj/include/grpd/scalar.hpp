#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grpd {

// Exact element of Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Scalar conj() const { return {re_, -im_}; }
  mpq_class abs2() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  // "p/q", "p/q+r/si", "r/si"; parse accepts the same forms.
  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Dense matrix over Q(i), row-major.
struct ScalarMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
};

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

// Exact rank by Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Scalar>> rows);

}  // namespace grpd
