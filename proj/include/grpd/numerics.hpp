#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "grpd/scalar.hpp"

namespace grpd {

struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  std::complex<double>& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

ComplexMatrix to_complex(const ScalarMatrix& m);

struct PowerMethodOptions {
  int max_iterations = 10000;
  double tolerance = 1e-13;
};

// Largest singular value by power iteration on M*M from a fixed start vector.
double largest_singular_value(const ComplexMatrix& m, const PowerMethodOptions& options = {});

// Smallest eigenvalue of a Hermitian matrix.
double min_hermitian_eigenvalue(const ComplexMatrix& m);

}  // namespace grpd
