#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

//
// ... eigb header files
//
#include <eigb/error.hpp>

namespace eigb {

  /**
   * @brief Real eigenvalues in non-increasing order.
   *
   * All formula code reads eigenvalues through the 1-based `lambda(i)`,
   * so λ_1 is the largest value and λ_n the smallest.
   */
  class Spectrum {
  public:
    Spectrum() = default;

    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
      if (values_.empty()) {
        throw Error(Errc::invalid_range, "spectrum must be non-empty");
      }
      for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
          throw Error(Errc::non_finite, "eigenvalue is NaN or Inf");
        }
        if (t + 1 < values_.size() && values_[t] < values_[t + 1]) {
          throw Error(
            Errc::not_sorted,
            "values must be non-increasing at position " + std::to_string(t + 1));
        }
      }
    }

    /// Stable descending sort, then validation.
    static Spectrum
    from_unsorted(std::vector<double> values) {
      std::stable_sort(values.begin(), values.end(), std::greater<>{});
      return Spectrum(std::move(values));
    }

    [[nodiscard]] std::size_t
    size() const noexcept {
      return values_.size();
    }

    /// 0-based storage access.
    double
    operator[](std::size_t pos) const noexcept {
      return values_[pos];
    }

    /// λ_i, 1-based.
    [[nodiscard]] double
    lambda(std::size_t i) const {
      if (i == 0 || i > values_.size()) {
        throw Error(
          Errc::index_out_of_range,
          "eigenvalue index " + std::to_string(i) + " outside [1, " +
            std::to_string(values_.size()) + "]");
      }
      return values_[i - 1];
    }

    [[nodiscard]] double
    largest() const noexcept {
      return values_.front();
    }
    [[nodiscard]] double
    smallest() const noexcept {
      return values_.back();
    }

    /// max(1, |λ_1|, |λ_n|); the reference magnitude for relative thresholds.
    [[nodiscard]] double
    scale() const noexcept {
      return std::max({1.0, std::abs(values_.front()), std::abs(values_.back())});
    }

    /// max |λ_t|.
    [[nodiscard]] double
    spectral_radius() const noexcept {
      return std::max(std::abs(values_.front()), std::abs(values_.back()));
    }

    [[nodiscard]] std::span<const double>
    values() const noexcept {
      return values_;
    }

    [[nodiscard]] double
    sum() const noexcept {
      double s = 0.0;
      for (double v : values_) {
        s += v;
      }
      return s;
    }

    friend bool
    operator==(const Spectrum&, const Spectrum&) = default;

  private:
    std::vector<double> values_{};
  };

} // end of namespace eigb
