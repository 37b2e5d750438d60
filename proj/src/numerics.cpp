#include "grpd/numerics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace grpd {

ComplexMatrix to_complex(const ScalarMatrix& m) {
  ComplexMatrix out(m.rows, m.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k) out.data[k] = m.data[k].to_complex();
  return out;
}

double largest_singular_value(const ComplexMatrix& m, const PowerMethodOptions& options) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  const std::size_t n = m.cols;
  // A = M*M, Hermitian positive semidefinite.
  std::vector<std::complex<double>> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      for (std::size_t k = 0; k < m.rows; ++k) acc += std::conj(m.at(k, i)) * m.at(k, j);
      a[i * n + j] = acc;
    }

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(0.5, 1.5);
  std::vector<std::complex<double>> v(n), w(n);
  for (auto& z : v) z = {unit(rng), unit(rng) - 1.0};
  auto normalize = [](std::vector<std::complex<double>>& x) {
    double norm = 0;
    for (auto& z : x) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm == 0) return false;
    for (auto& z : x) z /= norm;
    return true;
  };
  normalize(v);
  double lambda = 0;
  for (int it = 0; it < options.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * v[j];
      w[i] = acc;
    }
    double rayleigh = 0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += std::real(std::conj(v[i]) * w[i]);
    if (!normalize(w)) return 0.0;
    v.swap(w);
    bool done = it > 0 && std::abs(rayleigh - lambda) <= options.tolerance * std::max(1.0, rayleigh);
    lambda = rayleigh;
    if (done) break;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("matrix is not square");
  if (m.rows == 0) return 0.0;
  Eigen::MatrixXcd a(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a(i, j) = m.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace grpd
