#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

//
// ... eigb header files
//
#include <eigb/error.hpp>

namespace eigb {

  using complex_type = std::complex<double>;

  /**
   * @brief Dense square complex matrix, row-major.
   *
   * Construction rejects empty dimensions, wrong entry counts and
   * non-finite entries, so every live instance is a finite n×n matrix.
   */
  class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t n) : n_(n), entries_(n * n) {
      if (n == 0) {
        throw Error(Errc::not_square, "dimension must be at least 1");
      }
    }

    ComplexMatrix(std::size_t n, std::vector<complex_type> entries)
      : n_(n), entries_(std::move(entries)) {
      if (n == 0) {
        throw Error(Errc::not_square, "dimension must be at least 1");
      }
      if (entries_.size() != n * n) {
        throw Error(
          Errc::not_square,
          "expected " + std::to_string(n * n) + " entries, got " +
            std::to_string(entries_.size()));
      }
      for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
          throw Error(Errc::non_finite, "matrix entry is NaN or Inf");
        }
      }
    }

    /// Builds a matrix from nested rows; rows must all have length n.
    static ComplexMatrix
    from_rows(std::initializer_list<std::initializer_list<complex_type>> rows) {
      const std::size_t n = rows.size();
      std::vector<complex_type> entries;
      entries.reserve(n * n);
      for (const auto& row : rows) {
        if (row.size() != n) {
          throw Error(Errc::not_square, "row length differs from row count");
        }
        entries.insert(entries.end(), row.begin(), row.end());
      }
      return ComplexMatrix(n, std::move(entries));
    }

    static ComplexMatrix
    identity(std::size_t n) {
      ComplexMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
      }
      return m;
    }

    static ComplexMatrix
    diagonal(std::span<const double> values) {
      ComplexMatrix m(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
      }
      return m;
    }

    [[nodiscard]] std::size_t
    dim() const noexcept {
      return n_;
    }

    complex_type&
    operator()(std::size_t i, std::size_t j) noexcept {
      return entries_[i * n_ + j];
    }
    const complex_type&
    operator()(std::size_t i, std::size_t j) const noexcept {
      return entries_[i * n_ + j];
    }

    [[nodiscard]] std::span<const complex_type>
    entries() const noexcept {
      return entries_;
    }

    [[nodiscard]] double
    max_abs_entry() const noexcept {
      double m = 0.0;
      for (const auto& z : entries_) {
        m = std::max(m, std::abs(z));
      }
      return m;
    }

    [[nodiscard]] ComplexMatrix
    adjoint() const {
      ComplexMatrix r(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          r(j, i) = std::conj((*this)(i, j));
        }
      }
      return r;
    }

    friend bool
    operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  private:
    std::size_t n_{};
    std::vector<complex_type> entries_{};
  };

  namespace detail {
    inline void
    require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
      if (x.dim() != y.dim()) {
        throw Error(
          Errc::dimension_mismatch,
          std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
      }
    }
  } // end of namespace detail

  inline ComplexMatrix
  matrix_product(const ComplexMatrix& x, const ComplexMatrix& y) {
    detail::require_same_dim(x, y);
    const std::size_t n = x.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const complex_type xil = x(i, l);
        if (xil == complex_type{}) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          r(i, j) += xil * y(l, j);
        }
      }
    }
    return r;
  }

  inline ComplexMatrix
  matrix_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
    detail::require_same_dim(x, y);
    ComplexMatrix r = x;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      for (std::size_t j = 0; j < x.dim(); ++j) {
        r(i, j) += y(i, j);
      }
    }
    return r;
  }

  inline ComplexMatrix
  scaled(const ComplexMatrix& x, double c) {
    ComplexMatrix r = x;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      for (std::size_t j = 0; j < x.dim(); ++j) {
        r(i, j) *= c;
      }
    }
    return r;
  }

  inline complex_type
  trace(const ComplexMatrix& x) noexcept {
    complex_type s{};
    for (std::size_t i = 0; i < x.dim(); ++i) {
      s += x(i, i);
    }
    return s;
  }

  inline double
  frobenius_norm(const ComplexMatrix& x) noexcept {
    double s = 0.0;
    for (const auto& z : x.entries()) {
      s += std::norm(z);
    }
    return std::sqrt(s);
  }

  /// Frobenius norm of x − y.
  inline double
  frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
    detail::require_same_dim(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      for (std::size_t j = 0; j < x.dim(); ++j) {
        s += std::norm(x(i, j) - y(i, j));
      }
    }
    return std::sqrt(s);
  }

  /// V·diag(d)·V* for a square V whose columns carry the weights d.
  inline ComplexMatrix
  congruence_diagonal(const ComplexMatrix& v, std::span<const double> d) {
    const std::size_t n = v.dim();
    if (d.size() != n) {
      throw Error(Errc::dimension_mismatch, "diagonal length differs from dim");
    }
    ComplexMatrix r(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (d[t] == 0.0) {
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        const complex_type vi = v(i, t) * d[t];
        for (std::size_t j = 0; j < n; ++j) {
          r(i, j) += vi * std::conj(v(j, t));
        }
      }
    }
    return r;
  }

} // end of namespace eigb
