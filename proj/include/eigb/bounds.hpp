#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

//
// ... eigb header files
//
#include <eigb/error.hpp>
#include <eigb/spectrum.hpp>

namespace eigb {

  /// Relative threshold under which an eigenvalue is classified as zero.
  inline constexpr double default_tol_class = 1e-9;
  /// Relative verification tolerance; see `verification_tolerance`.
  inline constexpr double default_tol_verify = 1e-8;

  // ================================================================
  // Index sequences
  // ================================================================

  /**
   * @brief Strictly increasing 1-based indices 1 ≤ i_1 < … < i_k ≤ n.
   */
  class IndexSequence {
  public:
    IndexSequence() = default;

    IndexSequence(std::vector<std::size_t> indices, std::size_t n)
      : indices_(std::move(indices)), n_(n) {
      if (indices_.empty()) {
        throw Error(Errc::invalid_index_sequence, "index sequence must be non-empty");
      }
      for (std::size_t t = 0; t < indices_.size(); ++t) {
        if (indices_[t] < 1 || indices_[t] > n_) {
          throw Error(
            Errc::index_out_of_range,
            "index " + std::to_string(indices_[t]) + " outside [1, " +
              std::to_string(n_) + "]");
        }
        if (t > 0 && indices_[t] <= indices_[t - 1]) {
          throw Error(
            Errc::invalid_index_sequence, "indices must be strictly increasing");
        }
      }
    }

    /// (1, 2, …, n).
    static IndexSequence
    full(std::size_t n) {
      std::vector<std::size_t> all(n);
      for (std::size_t t = 0; t < n; ++t) {
        all[t] = t + 1;
      }
      return IndexSequence(std::move(all), n);
    }

    [[nodiscard]] std::size_t
    k() const noexcept {
      return indices_.size();
    }
    [[nodiscard]] std::size_t
    n() const noexcept {
      return n_;
    }
    /// i_t for 1-based t.
    [[nodiscard]] std::size_t
    index(std::size_t t) const noexcept {
      return indices_[t - 1];
    }
    [[nodiscard]] std::span<const std::size_t>
    indices() const noexcept {
      return indices_;
    }
    [[nodiscard]] bool
    is_full() const noexcept {
      return indices_.size() == n_;
    }

    [[nodiscard]] std::string
    to_string() const {
      std::string s;
      for (std::size_t t = 0; t < indices_.size(); ++t) {
        if (t > 0) {
          s += ',';
        }
        s += std::to_string(indices_[t]);
      }
      return s;
    }

    friend bool
    operator==(const IndexSequence&, const IndexSequence&) = default;

  private:
    std::vector<std::size_t> indices_{};
    std::size_t n_{};
  };

  // ================================================================
  // Inertia and κ_A
  // ================================================================

  struct Inertia {
    std::size_t pi_plus{};
    std::size_t nu_minus{};
    std::size_t delta_zero{};

    /// Number of nonnegative eigenvalues.
    [[nodiscard]] std::size_t
    nu_A() const noexcept {
      return pi_plus + delta_zero;
    }
    [[nodiscard]] std::size_t
    n() const noexcept {
      return pi_plus + nu_minus + delta_zero;
    }
    /// Inertia of −A.
    [[nodiscard]] Inertia
    negated() const noexcept {
      return {nu_minus, pi_plus, delta_zero};
    }

    friend bool
    operator==(const Inertia&, const Inertia&) = default;
  };

  /// Values inside (−tol·scale, tol·scale) count as zero.
  inline Inertia
  inertia_of(const Spectrum& spec, double tol_class = default_tol_class) {
    const double thr = tol_class * spec.scale();
    Inertia in;
    for (double v : spec.values()) {
      if (v >= thr) {
        ++in.pi_plus;
      } else if (v <= -thr) {
        ++in.nu_minus;
      } else {
        ++in.delta_zero;
      }
    }
    return in;
  }

  namespace detail {
    inline void
    require_fits(const Spectrum& spec, const IndexSequence& idx) {
      if (idx.n() != spec.size()) {
        throw Error(
          Errc::index_out_of_range,
          "index sequence built for n=" + std::to_string(idx.n()) +
            " used with spectrum of size " + std::to_string(spec.size()));
      }
    }
    inline void
    require_same_size(const Spectrum& x, const Spectrum& y) {
      if (x.size() != y.size()) {
        throw Error(
          Errc::dimension_mismatch,
          std::to_string(x.size()) + " vs " + std::to_string(y.size()));
      }
    }
    inline bool
    is_nonnegative(double v, double thr) noexcept {
      return v > -thr;
    }
  } // end of namespace detail

  /// Number of selected eigenvalues λ_{i_t}(A) that are nonnegative.
  inline std::size_t
  kappa(const Spectrum& spec_a, const IndexSequence& idx,
        double tol_class = default_tol_class) {
    detail::require_fits(spec_a, idx);
    const double thr = tol_class * spec_a.scale();
    std::size_t count = 0;
    for (std::size_t t = 1; t <= idx.k(); ++t) {
      if (detail::is_nonnegative(spec_a.lambda(idx.index(t)), thr)) {
        ++count;
      }
    }
    return count;
  }

  /// Σ_t λ_{i_t}.
  inline double
  selected_sum(const Spectrum& spec, const IndexSequence& idx) {
    detail::require_fits(spec, idx);
    double s = 0.0;
    for (std::size_t t = 1; t <= idx.k(); ++t) {
      s += spec.lambda(idx.index(t));
    }
    return s;
  }

  // ================================================================
  // Bound formulas
  // ================================================================

  struct Bracket {
    double lower{};
    double upper{};

    friend bool
    operator==(const Bracket&, const Bracket&) = default;
  };

  struct MainBounds {
    double lower{};
    double upper{};
    std::size_t kappa_A{};
  };

  /**
   * @brief Selected-index bounds on Σ λ_{i_t}(AB) for Hermitian A, PSD B.
   *
   * With κ = κ_A:
   *   upper = Σ_{t≤κ} λ_{i_t}(A)λ_t(B)       + Σ_{t>κ} λ_{i_t}(A)λ_{n−k+t}(B)
   *   lower = Σ_{t≤κ} λ_{i_t}(A)λ_{n−t+1}(B) + Σ_{t>κ} λ_{i_t}(A)λ_{k−t+1}(B)
   *
   * Each side is a single left-to-right accumulation over t = 1..k. The
   * special-case formulas below use the same accumulation order, which
   * makes the reductions hold bit for bit.
   */
  inline MainBounds
  main_bounds(const Spectrum& spec_a, const Spectrum& spec_b,
              const IndexSequence& idx, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    const std::size_t n = spec_a.size();
    const std::size_t k = idx.k();
    const std::size_t kap = kappa(spec_a, idx, tol_class);
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t t = 1; t <= k; ++t) {
      const double a = spec_a.lambda(idx.index(t));
      if (t <= kap) {
        upper += a * spec_b.lambda(t);
        lower += a * spec_b.lambda(n - t + 1);
      } else {
        upper += a * spec_b.lambda(n - k + t);
        lower += a * spec_b.lambda(k - t + 1);
      }
    }
    return {lower, upper, kap};
  }

  /// Classical PSD×PSD bracket Σλ_{i_t}(A)λ_{n−t+1}(B) ≤ · ≤ Σλ_{i_t}(A)λ_t(B).
  inline Bracket
  psd_product_bounds(const Spectrum& spec_a, const Spectrum& spec_b,
                     const IndexSequence& idx, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_fits(spec_a, idx);
    if (!detail::is_nonnegative(spec_a.smallest(), tol_class * spec_a.scale())) {
      throw Error(Errc::not_nonnegative, "A has a negative eigenvalue");
    }
    const std::size_t n = spec_a.size();
    Bracket r;
    for (std::size_t t = 1; t <= idx.k(); ++t) {
      const double a = spec_a.lambda(idx.index(t));
      r.upper += a * spec_b.lambda(t);
      r.lower += a * spec_b.lambda(n - t + 1);
    }
    return r;
  }

  /// Bracket for stable Hermitian A (no positive eigenvalues).
  inline Bracket
  stable_bounds(const Spectrum& spec_a, const Spectrum& spec_b,
                const IndexSequence& idx, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_fits(spec_a, idx);
    if (spec_a.largest() >= tol_class * spec_a.scale()) {
      throw Error(Errc::not_stable, "A has a positive eigenvalue");
    }
    const std::size_t n = spec_a.size();
    const std::size_t k = idx.k();
    Bracket r;
    for (std::size_t t = 1; t <= k; ++t) {
      const double a = spec_a.lambda(idx.index(t));
      r.upper += a * spec_b.lambda(n - k + t);
      r.lower += a * spec_b.lambda(k - t + 1);
    }
    return r;
  }

  /// Bracket on Σ λ_{i_t}(A+B) for any Hermitian pair.
  inline Bracket
  wielandt_sum_bounds(const Spectrum& spec_a, const Spectrum& spec_b,
                      const IndexSequence& idx) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_fits(spec_a, idx);
    const std::size_t n = spec_a.size();
    const double base = selected_sum(spec_a, idx);
    double top = 0.0;
    double bottom = 0.0;
    for (std::size_t t = 1; t <= idx.k(); ++t) {
      top += spec_b.lambda(t);
      bottom += spec_b.lambda(n - t + 1);
    }
    return {base + bottom, base + top};
  }

  /// Σλ_t(A)λ_{n−t+1}(B) ≤ tr(AB) ≤ Σλ_t(A)λ_t(B).
  inline Bracket
  trace_bounds(const Spectrum& spec_a, const Spectrum& spec_b) {
    detail::require_same_size(spec_a, spec_b);
    const std::size_t n = spec_a.size();
    Bracket r;
    for (std::size_t t = 1; t <= n; ++t) {
      const double a = spec_a.lambda(t);
      r.upper += a * spec_b.lambda(t);
      r.lower += a * spec_b.lambda(n - t + 1);
    }
    return r;
  }

  /// Upper bound obtained by bounding A_+B and A_−B separately.
  inline double
  splitting_upper_bound(const Spectrum& spec_a, const Spectrum& spec_b,
                        const IndexSequence& idx, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    const std::size_t n = spec_a.size();
    const std::size_t k = idx.k();
    const std::size_t kap = kappa(spec_a, idx, tol_class);
    const std::size_t nu = inertia_of(spec_a, tol_class).nu_A();
    double bound = 0.0;
    for (std::size_t t = 1; t <= kap; ++t) {
      bound += spec_a.lambda(idx.index(t)) * spec_b.lambda(t);
    }
    for (std::size_t t = nu + 1; t <= k; ++t) {
      bound += spec_a.lambda(t) * spec_b.lambda(n - k + t);
    }
    return bound;
  }

  struct SplitComparison {
    /// Second summation of the main upper bound.
    double t1{};
    /// Second summation of the splitting upper bound.
    double t2{};
    bool dominance_ok{};
  };

  inline SplitComparison
  compare_split_vs_main(const Spectrum& spec_a, const Spectrum& spec_b,
                        const IndexSequence& idx, double tol_class = default_tol_class,
                        double tol_verify = 0.0) {
    detail::require_same_size(spec_a, spec_b);
    const std::size_t n = spec_a.size();
    const std::size_t k = idx.k();
    const std::size_t kap = kappa(spec_a, idx, tol_class);
    const std::size_t nu = inertia_of(spec_a, tol_class).nu_A();
    SplitComparison r;
    for (std::size_t t = kap + 1; t <= k; ++t) {
      r.t1 += spec_a.lambda(idx.index(t)) * spec_b.lambda(n - k + t);
    }
    for (std::size_t t = nu + 1; t <= k; ++t) {
      r.t2 += spec_a.lambda(t) * spec_b.lambda(n - k + t);
    }
    r.dominance_ok = r.t1 <= r.t2 + tol_verify;
    return r;
  }

  /**
   * @brief Two-term bracket on λ_s(AB) + λ_t(AB) for a positive/negative pair.
   *
   * Requires s < t, λ_s(AB) > 0 and λ_t(AB) < 0, both beyond the zero
   * threshold.
   */
  inline Bracket
  pair_bounds(const Spectrum& spec_a, const Spectrum& spec_b, const Spectrum& spec_ab,
              std::size_t s, std::size_t t, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_same_size(spec_a, spec_ab);
    const std::size_t n = spec_a.size();
    if (s < 1 || t > n || s >= t) {
      throw Error(Errc::index_out_of_range, "need 1 <= s < t <= n");
    }
    const double thr = tol_class * spec_ab.scale();
    if (!(spec_ab.lambda(s) > thr) || !(spec_ab.lambda(t) < -thr)) {
      throw Error(
        Errc::sign_condition_violated,
        "need lambda_s(AB) > 0 > lambda_t(AB)");
    }
    return {
      spec_a.lambda(s) * spec_b.lambda(n) + spec_a.lambda(t) * spec_b.lambda(1),
      spec_a.lambda(s) * spec_b.lambda(1) + spec_a.lambda(t) * spec_b.lambda(n)};
  }

  struct GapBound {
    /// Index of the smallest positive eigenvalue of AB.
    std::size_t p{};
    /// Index of the largest negative eigenvalue of AB.
    std::size_t q{};
    double gap{};
    double bound{};
  };

  /// λ_p(AB) − λ_q(AB) ≤ [λ_p(A) − λ_q(A)]·λ_1(B) around zero.
  inline GapBound
  gap_bound(const Spectrum& spec_a, const Spectrum& spec_b, const Spectrum& spec_ab,
            double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_same_size(spec_a, spec_ab);
    const std::size_t n = spec_ab.size();
    const double thr = tol_class * spec_ab.scale();
    std::size_t p = 0;
    std::size_t q = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      const double v = spec_ab.lambda(t);
      if (v > thr) {
        p = t;
      } else if (v < -thr && q == 0) {
        q = t;
      }
    }
    if (p == 0 || q == 0) {
      throw Error(Errc::no_sign_change, "AB has no eigenvalues of both signs");
    }
    const double ap = spec_a.lambda(p);
    const double aq = spec_a.lambda(q);
    if (!(ap > 0.0) || !(aq < 0.0)) {
      throw Error(
        Errc::internal_consistency,
        "expected lambda_p(A) > 0 > lambda_q(A), got " + std::to_string(ap) +
          " and " + std::to_string(aq));
    }
    return {p, q, spec_ab.lambda(p) - spec_ab.lambda(q), (ap - aq) * spec_b.largest()};
  }

  struct OstrowskiRatio {
    std::size_t t{};
    double theta{};
  };

  struct OstrowskiReport {
    std::vector<OstrowskiRatio> ratios{};
    /// [λ_n(B), λ_1(B)].
    Bracket range{};
  };

  /// θ_t = λ_t(AB)/λ_t(A) for every t with λ_t(A) away from zero.
  inline OstrowskiReport
  ostrowski_ratios(const Spectrum& spec_a, const Spectrum& spec_ab,
                   const Spectrum& spec_b, double tol_class = default_tol_class) {
    detail::require_same_size(spec_a, spec_b);
    detail::require_same_size(spec_a, spec_ab);
    if (!(spec_b.smallest() > tol_class * spec_b.scale())) {
      throw Error(Errc::not_positive_definite, "B is singular");
    }
    OstrowskiReport r;
    r.range = {spec_b.smallest(), spec_b.largest()};
    const double thr = tol_class * spec_a.scale();
    for (std::size_t t = 1; t <= spec_a.size(); ++t) {
      const double a = spec_a.lambda(t);
      if (std::abs(a) > thr) {
        r.ratios.push_back({t, spec_ab.lambda(t) / a});
      }
    }
    return r;
  }

  // ================================================================
  // Reports
  // ================================================================

  /// Which proof case of the main theorem an instance falls into.
  enum class Branch {
    a_psd,               // ν_A = n
    a_negative_definite, // ν_A = 0
    nonnegative_selection,  // i_k ≤ ν_A
    negative_selection,     // i_1 > ν_A
    straddling
  };

  constexpr std::string_view
  to_string(Branch b) noexcept {
    switch (b) {
    case Branch::a_psd: return "a_psd";
    case Branch::a_negative_definite: return "a_negative_definite";
    case Branch::nonnegative_selection: return "nonnegative_selection";
    case Branch::negative_selection: return "negative_selection";
    case Branch::straddling: return "straddling";
    }
    return "unknown";
  }

  inline Branch
  classify_branch(const Inertia& inertia, std::size_t kappa_A, std::size_t k) noexcept {
    if (inertia.nu_A() == inertia.n()) {
      return Branch::a_psd;
    }
    if (inertia.nu_A() == 0) {
      return Branch::a_negative_definite;
    }
    if (kappa_A == k) {
      return Branch::nonnegative_selection;
    }
    if (kappa_A == 0) {
      return Branch::negative_selection;
    }
    return Branch::straddling;
  }

  struct BoundReport {
    double lower{};
    double actual{};
    double upper{};
    std::size_t kappa_A{};
    Branch branch{};

    [[nodiscard]] double
    lower_slack() const noexcept {
      return actual - lower;
    }
    [[nodiscard]] double
    upper_slack() const noexcept {
      return upper - actual;
    }
  };

  inline BoundReport
  evaluate_main(const Spectrum& spec_a, const Spectrum& spec_b, const Spectrum& spec_ab,
                const IndexSequence& idx, double tol_class = default_tol_class) {
    const MainBounds mb = main_bounds(spec_a, spec_b, idx, tol_class);
    return {
      mb.lower, selected_sum(spec_ab, idx), mb.upper, mb.kappa_A,
      classify_branch(inertia_of(spec_a, tol_class), mb.kappa_A, idx.k())};
  }

  /// τ_verify = rel·(1 + ‖A‖₂·λ_1(B)·k).
  inline double
  verification_tolerance(const Spectrum& spec_a, const Spectrum& spec_b, std::size_t k,
                         double rel = default_tol_verify) noexcept {
    return rel * (1.0 + spec_a.spectral_radius() * spec_b.spectral_radius() *
                          static_cast<double>(k));
  }

} // end of namespace eigb
