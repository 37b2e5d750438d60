#include "grpd/scalar.hpp"

#include <stdexcept>

#include "grpd/error.hpp"

namespace grpd {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
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
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  mpq_class d = o.abs2();
  if (sgn(d) == 0) throw std::domain_error("division by zero scalar");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im = im_.get_str() + "i";
  if (sgn(re_) == 0) return im;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im;
}

Scalar Scalar::parse(const std::string& text) {
  auto rational = [&](std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || s == "-") s += "1";
    mpq_class q;
    if (q.set_str(s, 10) != 0) input_error("bad scalar '" + text + "'");
    q.canonicalize();
    return q;
  };
  if (text.empty()) input_error("empty scalar");
  if (text.back() != 'i') {
    if (text == "+" || text == "-") input_error("bad scalar '" + text + "'");
    return Scalar(rational(text));
  }
  std::string body = text.substr(0, text.size() - 1);
  std::size_t cut = body.find_last_of("+-");
  if (cut == std::string::npos || cut == 0) return Scalar(0, rational(body));
  return Scalar(rational(body.substr(0, cut)), rational(body.substr(cut)));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::size_t exact_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Scalar factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace grpd
