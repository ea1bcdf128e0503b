#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

//
// ... eigb header files
//
#include <eigb/error.hpp>
#include <eigb/matrix.hpp>
#include <eigb/spectrum.hpp>

namespace eigb {

  /// Default relative tolerance for Hermitian and PSD validation.
  inline constexpr double default_tol_herm = 1e-9;
  inline constexpr double default_tol_psd = 1e-9;

  /**
   * @brief A complex matrix known to equal its conjugate transpose.
   *
   * The stored matrix is always the exact Hermitian part (M + M*)/2 of the
   * input; `defect()` keeps the largest |M_ij − conj(M_ji)| seen before
   * symmetrization.
   */
  class HermitianMatrix {
  public:
    HermitianMatrix() = default;

    /// Takes the Hermitian part without any tolerance check.
    static HermitianMatrix
    hermitian_part(const ComplexMatrix& m) {
      const std::size_t n = m.dim();
      ComplexMatrix h(n);
      double defect = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          const complex_type a = m(i, j);
          const complex_type b = std::conj(m(j, i));
          defect = std::max(defect, std::abs(a - b));
          const complex_type avg = 0.5 * (a + b);
          h(i, j) = avg;
          h(j, i) = std::conj(avg);
        }
        h(i, i) = h(i, i).real();
      }
      return HermitianMatrix(std::move(h), defect);
    }

    [[nodiscard]] const ComplexMatrix&
    matrix() const noexcept {
      return inner_;
    }
    [[nodiscard]] std::size_t
    dim() const noexcept {
      return inner_.dim();
    }
    [[nodiscard]] double
    defect() const noexcept {
      return defect_;
    }

  private:
    HermitianMatrix(ComplexMatrix inner, double defect)
      : inner_(std::move(inner)), defect_(defect) {}

    ComplexMatrix inner_{};
    double defect_{};
  };

  /// Rejects M when max|M − M*| exceeds tol·max(1, max|M_ij|).
  inline HermitianMatrix
  validate_hermitian(const ComplexMatrix& m, double tol = default_tol_herm) {
    if (m.dim() == 0) {
      throw Error(Errc::not_square, "empty matrix");
    }
    HermitianMatrix h = HermitianMatrix::hermitian_part(m);
    const double limit = tol * std::max(1.0, m.max_abs_entry());
    if (h.defect() > limit) {
      throw Error(
        Errc::not_hermitian,
        "hermiticity defect " + std::to_string(h.defect()) + " exceeds " +
          std::to_string(limit));
    }
    return h;
  }

  struct EigenDecomposition {
    Spectrum spectrum{};
    /// Column t is the unit eigenvector for spectrum[t].
    ComplexMatrix vectors{};
  };

  struct Jacobi_config {
    double tolerance{1e-13};
    std::size_t max_sweeps{60};
  };

  namespace detail {

    inline double
    off_diagonal_norm(const ComplexMatrix& w) noexcept {
      double s = 0.0;
      for (std::size_t i = 0; i < w.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
          if (i != j) {
            s += std::norm(w(i, j));
          }
        }
      }
      return std::sqrt(s);
    }

    // One complex Jacobi rotation zeroing w(p,q). The unitary acting on the
    // (p,q) plane is [[c, s·φ], [−s·conj(φ), c]] with φ = w(p,q)/|w(p,q)|.
    inline void
    jacobi_rotate(ComplexMatrix& w, ComplexMatrix& v, std::size_t p, std::size_t q) {
      const complex_type apq = w(p, q);
      const double mag = std::abs(apq);
      if (mag == 0.0) {
        return;
      }
      const complex_type phase = apq / mag;
      const double theta = (w(q, q).real() - w(p, p).real()) / (2.0 * mag);
      double t;
      if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
      } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const complex_type sp = s * phase;
      const complex_type spc = s * std::conj(phase);
      const std::size_t n = w.dim();

      for (std::size_t i = 0; i < n; ++i) {
        const complex_type wp = w(i, p);
        const complex_type wq = w(i, q);
        w(i, p) = c * wp - spc * wq;
        w(i, q) = sp * wp + c * wq;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const complex_type wp = w(p, j);
        const complex_type wq = w(q, j);
        w(p, j) = c * wp - sp * wq;
        w(q, j) = spc * wp + c * wq;
      }
      w(p, q) = 0.0;
      w(q, p) = 0.0;
      w(p, p) = w(p, p).real();
      w(q, q) = w(q, q).real();

      for (std::size_t i = 0; i < n; ++i) {
        const complex_type vp = v(i, p);
        const complex_type vq = v(i, q);
        v(i, p) = c * vp - spc * vq;
        v(i, q) = sp * vp + c * vq;
      }
    }

  } // end of namespace detail

  /**
   * @brief Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
   *
   * Sweeps over all (p,q) pairs until the off-diagonal Frobenius norm is at
   * most `tolerance·‖A‖_F`. Eigenvalues are returned in non-increasing
   * order (stable sort), eigenvectors permuted to match.
   */
  inline EigenDecomposition
  hermitian_eig(const HermitianMatrix& a, const Jacobi_config& cfg = {}) {
    const std::size_t n = a.dim();
    ComplexMatrix w = a.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = cfg.tolerance * frobenius_norm(w);

    double off = detail::off_diagonal_norm(w);
    std::size_t sweeps = 0;
    while (off > target && sweeps < cfg.max_sweeps) {
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          detail::jacobi_rotate(w, v, p, q);
        }
      }
      ++sweeps;
      off = detail::off_diagonal_norm(w);
    }
    if (off > target) {
      throw Error(
        Errc::no_convergence,
        std::to_string(sweeps) + " sweeps, off-diagonal norm " +
          std::to_string(off));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return w(x, x).real() > w(y, y).real();
    });

    std::vector<double> values(n);
    ComplexMatrix vectors(n);
    for (std::size_t t = 0; t < n; ++t) {
      values[t] = w(order[t], order[t]).real();
      for (std::size_t i = 0; i < n; ++i) {
        vectors(i, t) = v(i, order[t]);
      }
    }
    return {Spectrum(std::move(values)), std::move(vectors)};
  }

  inline Spectrum
  spectrum_of(const HermitianMatrix& a) {
    return hermitian_eig(a).spectrum;
  }

  /**
   * @brief A Hermitian matrix with no eigenvalue below −tol·max(1, λ_1).
   *
   * The cached decomposition has its eigenvalues clamped to ≥ 0; the raw
   * minimum is kept in `min_eigenvalue()`.
   */
  class PsdMatrix {
  public:
    PsdMatrix() = default;

    [[nodiscard]] const HermitianMatrix&
    hermitian() const noexcept {
      return inner_;
    }
    [[nodiscard]] const ComplexMatrix&
    matrix() const noexcept {
      return inner_.matrix();
    }
    [[nodiscard]] std::size_t
    dim() const noexcept {
      return inner_.dim();
    }
    [[nodiscard]] double
    min_eigenvalue() const noexcept {
      return min_eigenvalue_;
    }
    /// Clamped (nonnegative) decomposition.
    [[nodiscard]] const EigenDecomposition&
    decomposition() const noexcept {
      return eig_;
    }
    [[nodiscard]] const Spectrum&
    spectrum() const noexcept {
      return eig_.spectrum;
    }

    friend PsdMatrix
    validate_psd(const HermitianMatrix& b, double tol);

  private:
    PsdMatrix(HermitianMatrix inner, double min_eigenvalue, EigenDecomposition eig)
      : inner_(std::move(inner)), min_eigenvalue_(min_eigenvalue),
        eig_(std::move(eig)) {}

    HermitianMatrix inner_{};
    double min_eigenvalue_{};
    EigenDecomposition eig_{};
  };

  inline PsdMatrix
  validate_psd(const HermitianMatrix& b, double tol = default_tol_psd) {
    EigenDecomposition eig = hermitian_eig(b);
    const double lmin = eig.spectrum.smallest();
    const double limit = tol * std::max(1.0, eig.spectrum.largest());
    if (lmin < -limit) {
      throw Error(
        Errc::not_psd,
        "minimum eigenvalue " + std::to_string(lmin) + " below -" +
          std::to_string(limit));
    }
    std::vector<double> clamped(eig.spectrum.values().begin(), eig.spectrum.values().end());
    for (double& x : clamped) {
      x = std::max(x, 0.0);
    }
    eig.spectrum = Spectrum(std::move(clamped));
    return PsdMatrix(b, lmin, std::move(eig));
  }

  inline PsdMatrix
  validate_psd(const ComplexMatrix& m, double tol_herm = default_tol_herm,
               double tol_psd = default_tol_psd) {
    return validate_psd(validate_hermitian(m, tol_herm), tol_psd);
  }

  /// V·diag(√λ_t)·V* from the clamped decomposition of B.
  inline HermitianMatrix
  psd_sqrt(const PsdMatrix& b) {
    const auto& eig = b.decomposition();
    std::vector<double> roots(eig.spectrum.size());
    for (std::size_t t = 0; t < roots.size(); ++t) {
      roots[t] = std::sqrt(std::max(eig.spectrum[t], 0.0));
    }
    return HermitianMatrix::hermitian_part(congruence_diagonal(eig.vectors, roots));
  }

  /**
   * @brief Spectrum of AB, computed as the spectrum of B^{1/2}·A·B^{1/2}.
   *
   * The two products are similar when B is PSD, so the result is real by
   * construction; no general eigensolver is ever applied to AB.
   */
  inline Spectrum
  product_spectrum(const HermitianMatrix& a, const PsdMatrix& b) {
    if (a.dim() != b.dim()) {
      throw Error(
        Errc::dimension_mismatch,
        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    const HermitianMatrix root = psd_sqrt(b);
    const ComplexMatrix conj =
      matrix_product(matrix_product(root.matrix(), a.matrix()), root.matrix());
    return spectrum_of(HermitianMatrix::hermitian_part(conj));
  }

} // end of namespace eigb
