#pragma once

//
// ... Standard header files
//
#include <cstddef>
#include <random>

//
// ... eigb header files
//
#include <eigb/linalg.hpp>
#include <eigb/matrix.hpp>

namespace eigb::testing {

  /// Hermitian part of a matrix with independent complex Gaussian entries.
  inline HermitianMatrix
  random_hermitian(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = {g(rng), g(rng)};
      }
    }
    return HermitianMatrix::hermitian_part(m);
  }

  /// G·G* for a complex Gaussian G; rank-deficient when rank < n.
  inline PsdMatrix
  random_psd(std::size_t n, std::mt19937_64& rng, std::size_t rank = 0) {
    if (rank == 0) {
      rank = n;
    }
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix f(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        f(i, j) = {g(rng), g(rng)};
      }
    }
    return validate_psd(HermitianMatrix::hermitian_part(matrix_product(f, f.adjoint())));
  }

  inline ComplexMatrix
  example_a() {
    return ComplexMatrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, -4}});
  }

  inline ComplexMatrix
  example_b() {
    return ComplexMatrix::from_rows({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
  }

} // end of namespace eigb::testing
