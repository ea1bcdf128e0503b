#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <vector>

//
// ... eigb header files
//
#include <eigb/linalg.hpp>

namespace eigb {

  /// A = A_+ + A_−, both parts sharing A's eigenvectors.
  struct SplitPair {
    HermitianMatrix a_plus{};
    HermitianMatrix a_minus{};
  };

  inline SplitPair
  spectral_split(const HermitianMatrix& a) {
    const EigenDecomposition eig = hermitian_eig(a);
    std::vector<double> pos(eig.spectrum.size());
    std::vector<double> neg(eig.spectrum.size());
    for (std::size_t t = 0; t < pos.size(); ++t) {
      pos[t] = std::max(eig.spectrum[t], 0.0);
      neg[t] = std::min(eig.spectrum[t], 0.0);
    }
    return {
      HermitianMatrix::hermitian_part(congruence_diagonal(eig.vectors, pos)),
      HermitianMatrix::hermitian_part(congruence_diagonal(eig.vectors, neg))};
  }

} // end of namespace eigb
