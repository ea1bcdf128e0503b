#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

//
// ... eigb header files
//
#include <eigb/bounds.hpp>
#include <eigb/error.hpp>
#include <eigb/linalg.hpp>
#include <eigb/matrix.hpp>
#include <eigb/spectrum.hpp>

namespace eigb::harness {

  // ================================================================
  // Random instances
  // ================================================================

  /// SplitMix64 finalizer.
  constexpr std::uint64_t
  mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  /// Seed of the i-th campaign instance.
  constexpr std::uint64_t
  derive_seed(std::uint64_t master_seed, std::uint64_t i) noexcept {
    return mix64(mix64(master_seed) ^ mix64(i + 0x632BE59BD9B4E019ULL));
  }

  struct GeneratorSpec {
    std::size_t n{};
    /// Forced (π₊, ν₋, δ₀); when present, [lo, hi] is the magnitude range.
    std::optional<Inertia> inertia_target{};
    double lo{0.1};
    double hi{10.0};
    /// Bound on λ_1 / (smallest positive eigenvalue), PSD generation only.
    std::optional<double> condition_cap{};
    std::uint64_t seed{};
  };

  /// Orthonormalized complex Gaussian matrix (Haar distributed).
  inline ComplexMatrix
  random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        q(i, j) = complex_type(re, im) * std::sqrt(0.5);
      }
    }
    // Modified Gram–Schmidt, two passes.
    for (std::size_t j = 0; j < n; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t l = 0; l < j; ++l) {
          complex_type dot{};
          for (std::size_t i = 0; i < n; ++i) {
            dot += std::conj(q(i, l)) * q(i, j);
          }
          for (std::size_t i = 0; i < n; ++i) {
            q(i, j) -= dot * q(i, l);
          }
        }
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        norm += std::norm(q(i, j));
      }
      norm = std::sqrt(norm);
      if (norm < 1e-12) {
        throw Error(Errc::internal_consistency, "degenerate Gaussian draw");
      }
      for (std::size_t i = 0; i < n; ++i) {
        q(i, j) /= norm;
      }
    }
    return q;
  }

  /// Q·diag(values)·Q* for a Haar-random Q drawn from rng.
  inline HermitianMatrix
  hermitian_with_spectrum(std::span<const double> values, std::mt19937_64& rng) {
    const ComplexMatrix q = random_unitary(values.size(), rng);
    return HermitianMatrix::hermitian_part(congruence_diagonal(q, values));
  }

  namespace detail {

    inline void
    validate(const GeneratorSpec& spec) {
      if (spec.n == 0) {
        throw Error(Errc::invalid_spec, "n must be positive");
      }
      if (!(spec.lo <= spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
        throw Error(Errc::invalid_spec, "eigenvalue range needs lo <= hi");
      }
      if (spec.inertia_target) {
        if (spec.inertia_target->n() != spec.n) {
          throw Error(Errc::invalid_spec, "inertia target does not sum to n");
        }
        if (spec.lo < 0.0) {
          throw Error(Errc::invalid_spec, "magnitude range must be nonnegative");
        }
      }
    }

    inline std::vector<double>
    draw_targets(const GeneratorSpec& spec, double lo, std::mt19937_64& rng) {
      std::uniform_real_distribution<double> mag(lo, spec.hi);
      std::vector<double> values;
      values.reserve(spec.n);
      if (spec.inertia_target) {
        const Inertia& in = *spec.inertia_target;
        for (std::size_t t = 0; t < in.pi_plus; ++t) {
          values.push_back(mag(rng));
        }
        for (std::size_t t = 0; t < in.nu_minus; ++t) {
          values.push_back(-mag(rng));
        }
        values.insert(values.end(), in.delta_zero, 0.0);
      } else {
        for (std::size_t t = 0; t < spec.n; ++t) {
          values.push_back(mag(rng));
        }
      }
      return values;
    }

  } // end of namespace detail

  /// Eigenvalues drawn per spec, conjugated by a Haar unitary.
  inline HermitianMatrix
  gen_hermitian(const GeneratorSpec& spec) {
    detail::validate(spec);
    std::mt19937_64 rng(spec.seed);
    const auto values = detail::draw_targets(spec, spec.lo, rng);
    return hermitian_with_spectrum(values, rng);
  }

  inline PsdMatrix
  gen_psd(const GeneratorSpec& spec) {
    detail::validate(spec);
    if (spec.lo < 0.0) {
      throw Error(Errc::invalid_spec, "PSD range must be nonnegative");
    }
    if (spec.inertia_target && spec.inertia_target->nu_minus != 0) {
      throw Error(Errc::invalid_spec, "PSD target cannot have negative eigenvalues");
    }
    double lo = spec.lo;
    if (spec.condition_cap) {
      if (!(*spec.condition_cap >= 1.0)) {
        throw Error(Errc::invalid_spec, "condition cap must be >= 1");
      }
      lo = std::max(lo, spec.hi / *spec.condition_cap);
    }
    std::mt19937_64 rng(spec.seed);
    const auto values = detail::draw_targets(spec, lo, rng);
    return validate_psd(hermitian_with_spectrum(values, rng));
  }

  // ================================================================
  // Index sequences
  // ================================================================

  /// Yields all C(n,k) sequences in lexicographic order.
  class IndexSequenceEnumerator {
  public:
    IndexSequenceEnumerator(std::size_t n, std::size_t k) : n_(n), current_(k) {
      if (k < 1 || k > n) {
        throw Error(
          Errc::invalid_range,
          "need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
      }
      for (std::size_t t = 0; t < k; ++t) {
        current_[t] = t + 1;
      }
    }

    std::optional<IndexSequence>
    next() {
      if (done_) {
        return std::nullopt;
      }
      IndexSequence out(current_, n_);
      advance();
      return out;
    }

  private:
    void
    advance() {
      const std::size_t k = current_.size();
      std::size_t t = k;
      while (t > 0 && current_[t - 1] == n_ - k + t) {
        --t;
      }
      if (t == 0) {
        done_ = true;
        return;
      }
      ++current_[t - 1];
      for (std::size_t s = t; s < k; ++s) {
        current_[s] = current_[s - 1] + 1;
      }
    }

    std::size_t n_;
    std::vector<std::size_t> current_;
    bool done_{false};
  };

  inline std::vector<IndexSequence>
  enumerate_index_sequences(std::size_t n, std::size_t k) {
    std::vector<IndexSequence> out;
    IndexSequenceEnumerator e(n, k);
    while (auto s = e.next()) {
      out.push_back(std::move(*s));
    }
    return out;
  }

  /// Every sequence of every length 1..n (2^n − 1 of them).
  inline std::vector<IndexSequence>
  all_index_sequences(std::size_t n) {
    std::vector<IndexSequence> out;
    for (std::size_t k = 1; k <= n; ++k) {
      auto part = enumerate_index_sequences(n, k);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  // ================================================================
  // Instance checks
  // ================================================================

  struct ToleranceConfig {
    double tol_class{default_tol_class};
    double tol_verify{default_tol_verify};
    double tol_herm{default_tol_herm};
    double tol_psd{default_tol_psd};
  };

  inline constexpr double unbounded = std::numeric_limits<double>::infinity();

  /// One inequality evaluation; one-sided checks use ±infinity for the free side.
  struct Check {
    std::string name{};
    double lower{-unbounded};
    double actual{};
    double upper{unbounded};
    double tolerance{};

    [[nodiscard]] double
    lower_slack() const noexcept {
      return actual - lower;
    }
    [[nodiscard]] double
    upper_slack() const noexcept {
      return upper - actual;
    }
    /// Smaller of the two slacks.
    [[nodiscard]] double
    slack() const noexcept {
      return std::min(lower_slack(), upper_slack());
    }
    [[nodiscard]] bool
    pass() const noexcept {
      return lower_slack() >= -tolerance && upper_slack() >= -tolerance;
    }
  };

  struct VerificationRecord {
    std::size_t instance_id{};
    std::uint64_t seed{};
    std::size_t n{};
    IndexSequence idx{};
    std::size_t kappa_A{};
    Inertia inertia_A{};
    Branch branch{};
    std::vector<Check> checks{};
    double worst_slack{unbounded};
    /// Non-empty when a computation failed; the record then counts as failed.
    std::string diagnostic{};

    [[nodiscard]] bool
    passed() const noexcept {
      if (!diagnostic.empty()) {
        return false;
      }
      return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
    }
  };

  /// Everything about an (A, B) pair that does not depend on the index sequence.
  struct Instance {
    HermitianMatrix a{};
    PsdMatrix b{};
    Spectrum spec_a{};
    Spectrum spec_b{};
    Spectrum spec_ab{};
    Spectrum spec_sum{};
    Inertia inertia_a{};
    /// Re tr(A·B) from the explicit product.
    double trace_entrywise{};
  };

  inline Instance
  prepare_instance(const HermitianMatrix& a, const PsdMatrix& b,
                   const ToleranceConfig& tol = {}) {
    if (a.dim() != b.dim()) {
      throw Error(
        Errc::dimension_mismatch,
        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    Instance in;
    in.a = a;
    in.b = b;
    in.spec_a = spectrum_of(a);
    in.spec_b = b.spectrum();
    in.spec_ab = product_spectrum(a, b);
    in.spec_sum = spectrum_of(HermitianMatrix::hermitian_part(matrix_sum(a.matrix(), b.matrix())));
    in.inertia_a = inertia_of(in.spec_a, tol.tol_class);
    in.trace_entrywise = trace(matrix_product(a.matrix(), b.matrix())).real();
    return in;
  }

  namespace detail {

    inline void
    push_bracket(std::vector<Check>& out, std::string name, double lower, double actual,
                 double upper, double tolerance) {
      out.push_back({std::move(name), lower, actual, upper, tolerance});
    }

    inline void
    push_equal(std::vector<Check>& out, std::string name, double expected, double actual,
               double tolerance) {
      out.push_back({std::move(name), expected, actual, expected, tolerance});
    }

  } // end of namespace detail

  /**
   * @brief Runs every inequality applicable to (A, B, idx).
   *
   * With `instance_checks` set, the sequence-independent corollaries (gap,
   * Ostrowski) are included as well. Computational errors are reported in
   * `diagnostic`, never thrown.
   */
  inline VerificationRecord
  check_prepared(const Instance& in, const IndexSequence& idx, const ToleranceConfig& tol,
                 bool instance_checks = true) {
    VerificationRecord rec;
    rec.n = in.spec_a.size();
    rec.idx = idx;
    rec.inertia_A = in.inertia_a;
    try {
      const Spectrum& sa = in.spec_a;
      const Spectrum& sb = in.spec_b;
      const Spectrum& sab = in.spec_ab;
      const std::size_t n = sa.size();
      const std::size_t k = idx.k();
      const double tau = verification_tolerance(sa, sb, k, tol.tol_verify);
      auto& checks = rec.checks;

      const BoundReport main = evaluate_main(sa, sb, sab, idx, tol.tol_class);
      rec.kappa_A = main.kappa_A;
      rec.branch = main.branch;
      detail::push_bracket(checks, "main", main.lower, main.actual, main.upper, tau);

      const double split = splitting_upper_bound(sa, sb, idx, tol.tol_class);
      detail::push_bracket(checks, "splitting", -unbounded, main.actual, split, tau);
      const SplitComparison cmp = compare_split_vs_main(sa, sb, idx, tol.tol_class);
      detail::push_bracket(checks, "dominance", -unbounded, cmp.t1, cmp.t2, tau);

      if (in.inertia_a.nu_A() == n) {
        const Bracket psd = psd_product_bounds(sa, sb, idx, tol.tol_class);
        detail::push_equal(checks, "reduction_psd_lower", psd.lower, main.lower, 0.0);
        detail::push_equal(checks, "reduction_psd_upper", psd.upper, main.upper, 0.0);
      }
      if (in.inertia_a.pi_plus == 0) {
        const Bracket st = stable_bounds(sa, sb, idx, tol.tol_class);
        // Computed zeros carry rounding noise that only cancels exactly when
        // A has no zero eigenvalues.
        const double t_stable = in.inertia_a.delta_zero == 0 ? 0.0 : tau;
        detail::push_equal(checks, "reduction_stable_lower", st.lower, main.lower, t_stable);
        detail::push_equal(checks, "reduction_stable_upper", st.upper, main.upper, t_stable);
      }

      if (idx.is_full()) {
        const Bracket tb = trace_bounds(sa, sb);
        detail::push_bracket(checks, "trace", tb.lower, in.trace_entrywise, tb.upper, tau);
        detail::push_equal(
          checks, "trace_agreement", in.trace_entrywise, sab.sum(), 0.1 * tau);
        detail::push_equal(checks, "trace_identity_lower", tb.lower, main.lower, 0.0);
        detail::push_equal(checks, "trace_identity_upper", tb.upper, main.upper, 0.0);
      }

      const Bracket wb = wielandt_sum_bounds(sa, sb, idx);
      const double tau_sum =
        tol.tol_verify * (1.0 + (sa.spectral_radius() + sb.spectral_radius()) * static_cast<double>(k));
      detail::push_bracket(
        checks, "wielandt", wb.lower, selected_sum(in.spec_sum, idx), wb.upper, tau_sum);

      if (k == 2) {
        const double thr = tol.tol_class * sab.scale();
        const std::size_t s = idx.index(1);
        const std::size_t t = idx.index(2);
        if (sab.lambda(s) > thr && sab.lambda(t) < -thr) {
          const Bracket pb = pair_bounds(sa, sb, sab, s, t, tol.tol_class);
          detail::push_bracket(
            checks, "pair", pb.lower, sab.lambda(s) + sab.lambda(t), pb.upper, tau);
        }
      }

      if (instance_checks) {
        const Inertia in_ab = inertia_of(sab, tol.tol_class);
        if (in_ab.pi_plus > 0 && in_ab.nu_minus > 0) {
          const GapBound g = gap_bound(sa, sb, sab, tol.tol_class);
          detail::push_bracket(
            checks, "gap", -unbounded, g.gap, g.bound,
            verification_tolerance(sa, sb, 2, tol.tol_verify));
        }
        if (sb.smallest() > tol.tol_class * sb.scale()) {
          const OstrowskiReport o = ostrowski_ratios(sa, sab, sb, tol.tol_class);
          for (const auto& r : o.ratios) {
            detail::push_bracket(
              checks, "ostrowski", o.range.lower, r.theta, o.range.upper, tol.tol_verify);
          }
        }
      }

      for (const auto& c : checks) {
        rec.worst_slack = std::min(rec.worst_slack, c.slack());
      }
    } catch (const std::exception& e) {
      rec.diagnostic = e.what();
    }
    return rec;
  }

  /// Eigensolves once and checks the given sequence; never throws on math errors.
  inline VerificationRecord
  check_instance(const HermitianMatrix& a, const PsdMatrix& b, const IndexSequence& idx,
                 const ToleranceConfig& tol = {}) {
    try {
      return check_prepared(prepare_instance(a, b, tol), idx, tol);
    } catch (const std::exception& e) {
      VerificationRecord rec;
      rec.n = a.dim();
      rec.idx = idx;
      rec.diagnostic = e.what();
      return rec;
    }
  }

  // ================================================================
  // Campaigns
  // ================================================================

  /// Instance families, one per proof case of the main theorem.
  enum class Family {
    a_psd,
    a_negative_definite,
    nonnegative_selection,
    negative_selection,
    straddling
  };
  inline constexpr std::size_t family_count = 5;

  /// B variants cycled independently of the A family.
  enum class BVariant { positive_definite, singular, contractive };

  struct InjectedInstance {
    ComplexMatrix a{};
    ComplexMatrix b{};
  };

  struct CampaignConfig {
    std::size_t n_min{2};
    std::size_t n_max{8};
    /// Forces the inertia (and so the dimension) of every generated A.
    std::optional<Inertia> inertia{};
    /// Up to this n every index sequence of every length is checked.
    std::size_t exhaustive_max_n{6};
    /// Sequences sampled per instance above `exhaustive_max_n`.
    std::size_t sampled_sequences{16};
    /// Checked first, in order, before any generated instance.
    std::vector<InjectedInstance> injected{};
    ToleranceConfig tol{};
    /// 0 picks the hardware concurrency.
    unsigned threads{0};
  };

  struct CheckStats {
    std::size_t count{};
    double min_slack{unbounded};
    double slack_sum{};

    [[nodiscard]] double
    mean_slack() const noexcept {
      return count == 0 ? 0.0 : slack_sum / static_cast<double>(count);
    }
  };

  struct CampaignReport {
    /// Instances checked.
    std::size_t total{};
    std::size_t passed{};
    std::size_t failed{};
    /// Records checked across all instances.
    std::size_t records{};
    std::map<std::string, CheckStats> checks{};
    /// Worst failing record of each failed instance.
    std::vector<VerificationRecord> failures{};
    std::map<Branch, std::size_t> branch_counts{};
    double wall_time_seconds{};
  };

  namespace detail {

    struct InstanceResult {
      std::vector<VerificationRecord> records{};
    };

    inline std::vector<IndexSequence>
    sample_sequences(std::size_t n, const Inertia& inertia, Family family, std::size_t count,
                     std::mt19937_64& rng) {
      const std::size_t nu = inertia.nu_A();
      std::vector<std::size_t> head;
      std::vector<std::size_t> tail;
      for (std::size_t i = 1; i <= n; ++i) {
        (i <= nu ? head : tail).push_back(i);
      }
      auto pick = [&](std::vector<std::size_t> pool, std::size_t k) {
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(k);
        return pool;
      };
      auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
      };
      std::vector<IndexSequence> out;
      for (std::size_t c = 0; c < count; ++c) {
        std::vector<std::size_t> chosen;
        if (family == Family::nonnegative_selection && !head.empty()) {
          chosen = pick(head, uniform(1, head.size()));
        } else if (family == Family::negative_selection && !tail.empty()) {
          chosen = pick(tail, uniform(1, tail.size()));
        } else if (family == Family::straddling && !head.empty() && !tail.empty()) {
          chosen = pick(head, uniform(1, head.size()));
          auto more = pick(tail, uniform(1, tail.size()));
          chosen.insert(chosen.end(), more.begin(), more.end());
        } else {
          std::vector<std::size_t> all(n);
          for (std::size_t i = 0; i < n; ++i) {
            all[i] = i + 1;
          }
          chosen = pick(all, uniform(1, n));
        }
        std::sort(chosen.begin(), chosen.end());
        out.emplace_back(std::move(chosen), n);
      }
      return out;
    }

    inline Inertia
    family_inertia(Family family, std::size_t n, std::mt19937_64& rng) {
      std::bernoulli_distribution coin(0.5);
      switch (family) {
      case Family::a_psd: {
        const std::size_t z = (n >= 3 && coin(rng)) ? 1 : 0;
        return {n - z, 0, z};
      }
      case Family::a_negative_definite:
        return {0, n, 0};
      default: {
        const std::size_t p = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        const std::size_t z = (n - p >= 2 && coin(rng)) ? 1 : 0;
        return {p, n - p - z, z};
      }
      }
    }

    inline InstanceResult
    run_generated(std::size_t id, std::uint64_t seed, const CampaignConfig& cfg) {
      std::mt19937_64 rng(seed);
      Family family = static_cast<Family>(id % family_count);
      const auto variant = static_cast<BVariant>((id / family_count) % 3);

      std::size_t n;
      Inertia target;
      if (cfg.inertia) {
        target = *cfg.inertia;
        n = target.n();
      } else {
        n = std::uniform_int_distribution<std::size_t>(cfg.n_min, cfg.n_max)(rng);
        if (n < 2 && family != Family::a_negative_definite) {
          family = Family::a_psd;
        }
        target = family_inertia(family, n, rng);
      }

      GeneratorSpec a_spec{n, target, 0.1, 10.0, std::nullopt, rng()};
      GeneratorSpec b_spec{n, std::nullopt, 0.1, 10.0, 100.0, rng()};
      switch (variant) {
      case BVariant::positive_definite:
        break;
      case BVariant::singular:
        b_spec.inertia_target = Inertia{n - 1, 0, 1};
        b_spec.condition_cap.reset();
        break;
      case BVariant::contractive:
        b_spec.lo = 0.05;
        b_spec.hi = 0.95;
        b_spec.condition_cap.reset();
        break;
      }

      InstanceResult result;
      try {
        const Instance in = prepare_instance(gen_hermitian(a_spec), gen_psd(b_spec), cfg.tol);
        const auto seqs = n <= cfg.exhaustive_max_n
                            ? all_index_sequences(n)
                            : sample_sequences(n, in.inertia_a, family, cfg.sampled_sequences, rng);
        for (std::size_t s = 0; s < seqs.size(); ++s) {
          result.records.push_back(check_prepared(in, seqs[s], cfg.tol, s == 0));
        }
      } catch (const std::exception& e) {
        VerificationRecord rec;
        rec.n = n;
        rec.diagnostic = e.what();
        result.records.push_back(std::move(rec));
      }
      for (auto& r : result.records) {
        r.instance_id = id;
        r.seed = seed;
      }
      return result;
    }

    inline InstanceResult
    run_injected(std::size_t id, const InjectedInstance& inj, const CampaignConfig& cfg) {
      InstanceResult result;
      try {
        const HermitianMatrix a = validate_hermitian(inj.a, cfg.tol.tol_herm);
        const PsdMatrix b = validate_psd(validate_hermitian(inj.b, cfg.tol.tol_herm), cfg.tol.tol_psd);
        const Instance in = prepare_instance(a, b, cfg.tol);
        const auto seqs = all_index_sequences(a.dim());
        for (std::size_t s = 0; s < seqs.size(); ++s) {
          result.records.push_back(check_prepared(in, seqs[s], cfg.tol, s == 0));
        }
      } catch (const std::exception& e) {
        VerificationRecord rec;
        rec.n = inj.a.dim();
        rec.diagnostic = e.what();
        result.records.push_back(std::move(rec));
      }
      for (auto& r : result.records) {
        r.instance_id = id;
      }
      return result;
    }

  } // end of namespace detail

  /**
   * @brief Checks `count` instances and aggregates the results.
   *
   * Instance i uses seed `derive_seed(master_seed, i)` and family i mod 5,
   * so the report is a pure function of (count, cfg, master_seed)
   * regardless of thread scheduling.
   */
  inline CampaignReport
  run_campaign(std::size_t count, const CampaignConfig& cfg, std::uint64_t master_seed) {
    if (count == 0) {
      throw Error(Errc::invalid_count, "count must be at least 1");
    }
    if (!cfg.inertia && (cfg.n_min < 1 || cfg.n_min > cfg.n_max)) {
      throw Error(Errc::invalid_spec, "need 1 <= n_min <= n_max");
    }
    if (cfg.inertia && cfg.inertia->n() == 0) {
      throw Error(Errc::invalid_spec, "inertia must describe a non-empty matrix");
    }
    const auto start = std::chrono::steady_clock::now();

    std::vector<detail::InstanceResult> results(count);
    auto work = [&](std::size_t i) {
      results[i] = i < cfg.injected.size()
                     ? detail::run_injected(i, cfg.injected[i], cfg)
                     : detail::run_generated(i, derive_seed(master_seed, i), cfg);
    };
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        work(i);
      }
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < count; i += threads) {
            work(i);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    // Sequential reduction in instance order keeps floating sums reproducible.
    // Records with a diagnostic rank below any finite slack.
    auto severity = [](const VerificationRecord& r) {
      return r.diagnostic.empty() ? r.worst_slack : -unbounded;
    };
    CampaignReport report;
    report.total = count;
    for (auto& res : results) {
      const VerificationRecord* worst = nullptr;
      for (const auto& rec : res.records) {
        ++report.records;
        if (rec.diagnostic.empty()) {
          ++report.branch_counts[rec.branch];
        }
        for (const auto& c : rec.checks) {
          auto& st = report.checks[c.name];
          ++st.count;
          st.min_slack = std::min(st.min_slack, c.slack());
          st.slack_sum += c.slack();
        }
        if (!rec.passed() && (worst == nullptr || severity(rec) < severity(*worst))) {
          worst = &rec;
        }
      }
      if (worst != nullptr) {
        ++report.failed;
        report.failures.push_back(*worst);
      } else {
        ++report.passed;
      }
    }
    report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

} // end of namespace eigb::harness
