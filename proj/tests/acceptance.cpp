// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

//
// ... Standard header files
//
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

//
// ... eigb header files
//
#include "cli.hpp"

namespace {

  using namespace eigb;
  using clock_type = std::chrono::steady_clock;

  double
  seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  struct Outcome {
    bool pass;
    std::string detail;
  };

  HermitianMatrix
  gaussian_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = {g(rng), g(rng)};
      }
    }
    return HermitianMatrix::hermitian_part(m);
  }

  IndexSequence
  random_sequence(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) {
      pool[i] = i + 1;
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::uniform_int_distribution<std::size_t>(1, n)(rng));
    std::sort(pool.begin(), pool.end());
    return IndexSequence(pool, n);
  }

  /// Mixed-inertia A with a positive-definite or singular B, seeded per instance.
  std::pair<HermitianMatrix, PsdMatrix>
  instance(std::uint64_t i, bool positive_definite) {
    std::mt19937_64 rng(harness::derive_seed(7, i));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    auto a = harness::gen_hermitian({n, Inertia{p, n - p, 0}, 0.1, 10.0, std::nullopt, rng()});
    harness::GeneratorSpec bs{n, std::nullopt, 0.1, 10.0, 100.0, rng()};
    if (!positive_definite) {
      bs.inertia_target = Inertia{n - 1, 0, 1};
      bs.condition_cap.reset();
    }
    return {std::move(a), harness::gen_psd(bs)};
  }

  const harness::CampaignReport&
  standard_campaign(double* wall = nullptr) {
    static double elapsed = 0.0;
    static const harness::CampaignReport report = [] {
      harness::CampaignConfig cfg;
      cfg.n_min = 2;
      cfg.n_max = 8;
      cfg.exhaustive_max_n = 6;
      cfg.tol.tol_verify = 1e-8;
      const auto start = clock_type::now();
      auto rep = harness::run_campaign(1000, cfg, 2024);
      elapsed = seconds_since(start);
      return rep;
    }();
    if (wall != nullptr) {
      *wall = elapsed;
    }
    return report;
  }

  bool
  no_failed_check(const harness::CampaignReport& rep, const std::string& name) {
    for (const auto& f : rep.failures) {
      if (!f.diagnostic.empty()) {
        return false;
      }
      for (const auto& c : f.checks) {
        if (c.name == name && !c.pass()) {
          return false;
        }
      }
    }
    return true;
  }

  // 1
  Outcome
  example_reproduction() {
    const auto start = clock_type::now();
    cli::CliConfig cfg;
    cfg.json = true;
    std::ostringstream out;
    const int code = cli::cmd_example(cfg, out);
    const double elapsed = seconds_since(start);
    const auto j = nlohmann::json::parse(out.str());
    const double golden[3][3] = {{8, 0, 0}, {5, -5, -9}, {-6, -11, -14}};
    const char* keys[3] = {"upper", "actual", "lower"};
    double worst = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(j["cases"][c][keys[k]].get<double>() - golden[c][k]));
      }
    }
    std::ostringstream d;
    d << "max deviation " << worst << ", " << elapsed << " s";
    return {code == 0 && worst <= 1e-9 && elapsed < 1.0, d.str()};
  }

  // 2
  Outcome
  product_spectrum_example() {
    const auto a = validate_hermitian(cli::example_a());
    const auto b = validate_psd(cli::example_b());
    const Spectrum s = product_spectrum(a, b);
    const double expected[3] = {3, -3, -8};
    double worst = 0.0;
    for (std::size_t t = 0; t < 3; ++t) {
      worst = std::max(worst, std::abs(s[t] - expected[t]));
    }
    std::ostringstream d;
    d << "AB spectrum (" << s[0] << ", " << s[1] << ", " << s[2] << "), max deviation " << worst;
    return {worst <= 1e-9, d.str()};
  }

  // 3
  Outcome
  containment_campaign() {
    double wall = 0.0;
    const auto& rep = standard_campaign(&wall);
    const bool all_branches = rep.branch_counts.size() == 5;
    std::ostringstream d;
    d << rep.total << " instances, " << rep.records << " sequences, " << rep.failed
      << " failed, " << rep.branch_counts.size() << "/5 branches, main checks "
      << rep.checks.at("main").count << ", min slack " << rep.checks.at("main").min_slack
      << ", " << wall << " s";
    return {rep.total >= 1000 && rep.failed == 0 && all_branches && no_failed_check(rep, "main") &&
              rep.checks.at("main").count == rep.records && wall < 60.0,
            d.str()};
  }

  // 4
  Outcome
  dominance() {
    const auto& rep = standard_campaign();
    const auto& dom = rep.checks.at("dominance");
    const auto& split = rep.checks.at("splitting");
    std::ostringstream d;
    d << dom.count << " comparisons, min T2 - T1 = " << dom.min_slack;
    return {dom.count == rep.records && split.count == rep.records &&
              no_failed_check(rep, "dominance") && no_failed_check(rep, "splitting"),
            d.str()};
  }

  // 5
  Outcome
  reductions() {
    const auto& rep = standard_campaign();
    std::size_t count = 0;
    bool exact = true;
    for (const char* name : {"reduction_psd_lower", "reduction_psd_upper", "reduction_stable_lower",
                             "reduction_stable_upper"}) {
      const auto it = rep.checks.find(name);
      if (it == rep.checks.end() || it->second.count == 0) {
        return {false, std::string("no ") + name + " checks"};
      }
      count += it->second.count;
      // Equality checks have slack −|difference|; zero means bitwise equal.
      exact = exact && it->second.min_slack == 0.0;
    }
    std::ostringstream d;
    d << count << " equality checks, all bitwise exact: " << (exact ? "yes" : "no");
    return {exact, d.str()};
  }

  // 6
  Outcome
  trace_bracket() {
    std::size_t checked = 0;
    double worst_agreement = 0.0;
    bool ok = true;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const auto [a, b] = instance(i, i % 2 == 0);
      const Spectrum sa = spectrum_of(a);
      const Spectrum& sb = b.spectrum();
      const Spectrum sab = product_spectrum(a, b);
      const double entrywise = trace(matrix_product(a.matrix(), b.matrix())).real();
      const double spectral = sab.sum();
      const double scale = 1.0 + sa.spectral_radius() * sb.spectral_radius() * static_cast<double>(sa.size());
      const double tau = 1e-8 * scale;
      const Bracket tb = trace_bounds(sa, sb);
      const auto full = main_bounds(sa, sb, IndexSequence::full(sa.size()));
      worst_agreement = std::max(worst_agreement, std::abs(entrywise - spectral) / scale);
      ok = ok && std::abs(entrywise - spectral) <= 1e-9 * scale;
      ok = ok && tb.lower - tau <= entrywise && entrywise <= tb.upper + tau;
      ok = ok && full.lower == tb.lower && full.upper == tb.upper;
      ++checked;
    }
    std::ostringstream d;
    d << checked << " instances, worst relative trace disagreement " << worst_agreement;
    return {ok, d.str()};
  }

  // 7
  Outcome
  ostrowski() {
    std::size_t ratios = 0;
    bool ok = true;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const auto [a, b] = instance(i, true);
      const Spectrum& sb = b.spectrum();
      const auto rep = ostrowski_ratios(spectrum_of(a), product_spectrum(a, b), sb);
      for (const auto& r : rep.ratios) {
        ok = ok && r.theta >= sb.smallest() - 1e-8 && r.theta <= sb.largest() + 1e-8;
        ++ratios;
      }
    }
    const auto a = validate_hermitian(cli::example_a());
    const auto b = validate_psd(cli::example_b());
    const auto ex = ostrowski_ratios(spectrum_of(a), product_spectrum(a, b), b.spectrum());
    const double expected[3] = {1, 3, 2};
    bool example_ok = ex.ratios.size() == 3;
    for (std::size_t t = 0; example_ok && t < 3; ++t) {
      example_ok = std::abs(ex.ratios[t].theta - expected[t]) <= 1e-9;
    }
    std::ostringstream d;
    d << ratios << " ratios inside [lambda_n(B), lambda_1(B)]; example theta = (1, 3, 2): "
      << (example_ok ? "yes" : "no");
    return {ok && example_ok && ratios > 0, d.str()};
  }

  // 8
  Outcome
  gap() {
    std::size_t mixed = 0;
    bool ok = true;
    for (std::uint64_t i = 0; i < 400; ++i) {
      const auto [a, b] = instance(i, i % 3 != 0);
      const Spectrum sa = spectrum_of(a);
      const Spectrum sab = product_spectrum(a, b);
      const Inertia in_ab = inertia_of(sab);
      if (in_ab.pi_plus == 0 || in_ab.nu_minus == 0) {
        continue;
      }
      const GapBound g = gap_bound(sa, b.spectrum(), sab);
      const double direct = (sa.lambda(g.p) - sa.lambda(g.q)) * b.spectrum().largest();
      ok = ok && g.gap <= direct + verification_tolerance(sa, b.spectrum(), 2, 1e-8);
      ++mixed;
    }
    const auto a = validate_hermitian(cli::example_a());
    const auto b = validate_psd(cli::example_b());
    const Spectrum sab = product_spectrum(a, b);
    const GapBound ex = gap_bound(spectrum_of(a), b.spectrum(), sab);
    const bool example_ok = std::abs(ex.gap - 6.0) <= 1e-9 && std::abs(ex.bound - 12.0) <= 1e-9;
    std::ostringstream d;
    d << mixed << " mixed-sign instances; example gap " << ex.gap << " <= bound " << ex.bound;
    return {ok && example_ok && mixed > 0, d.str()};
  }

  // 9
  Outcome
  wielandt() {
    std::mt19937_64 rng(909);
    std::size_t violations = 0;
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
      const auto a = gaussian_hermitian(n, rng);
      const auto b = gaussian_hermitian(n, rng);
      const IndexSequence idx = random_sequence(n, rng);
      const Spectrum sa = spectrum_of(a);
      const Spectrum sb = spectrum_of(b);
      const Spectrum sum = spectrum_of(HermitianMatrix::hermitian_part(matrix_sum(a.matrix(), b.matrix())));
      const Bracket w = wielandt_sum_bounds(sa, sb, idx);
      const double actual = selected_sum(sum, idx);
      const double tau =
        1e-8 * (1.0 + (sa.spectral_radius() + sb.spectral_radius()) * static_cast<double>(idx.k()));
      if (actual < w.lower - tau || actual > w.upper + tau) {
        ++violations;
      }
    }
    std::ostringstream d;
    d << "500 Hermitian pairs, " << violations << " violations";
    return {violations == 0, d.str()};
  }

  // 10
  Outcome
  eigensolver_quality() {
    std::mt19937_64 rng(1010);
    double worst_recon = 0.0;
    double worst_orth = 0.0;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i) % 16;
      const auto a = gaussian_hermitian(n, rng);
      const auto eig = hermitian_eig(a);
      const std::vector<double> values(eig.spectrum.values().begin(), eig.spectrum.values().end());
      const double recon = frobenius_distance(congruence_diagonal(eig.vectors, values), a.matrix());
      const double orth = frobenius_distance(
        matrix_product(eig.vectors.adjoint(), eig.vectors), ComplexMatrix::identity(n));
      const double rel = recon / (1.0 + frobenius_norm(a.matrix()));
      worst_recon = std::max(worst_recon, rel);
      worst_orth = std::max(worst_orth, orth);
      ok = ok && rel <= 1e-10 && orth <= 1e-10;
    }
    std::ostringstream d;
    d << "100 matrices, worst reconstruction " << worst_recon << ", worst orthonormality "
      << worst_orth;
    return {ok, d.str()};
  }

  // 11
  Outcome
  determinism() {
    cli::CliConfig cfg;
    cfg.json = true;
    cfg.seed = 2024;
    cli::FuzzOptions opt;
    opt.count = 1000;
    std::ostringstream first;
    std::ostringstream second;
    const int c1 = cli::cmd_fuzz(opt, cfg, first);
    opt.threads = 1;
    const int c2 = cli::cmd_fuzz(opt, cfg, second);
    const bool same = first.str() == second.str();
    std::ostringstream d;
    d << first.str().size() << " bytes, identical: " << (same ? "yes" : "no");
    return {same && c1 == 0 && c2 == 0, d.str()};
  }

} // namespace

int
main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
    {"1  worked example table reproduced", example_reproduction},
    {"2  product spectrum of the example", product_spectrum_example},
    {"3  main bound containment campaign", containment_campaign},
    {"4  main upper bound dominates splitting bound", dominance},
    {"5  PSD and stable reductions are exact", reductions},
    {"6  trace bracket, trace computed two ways", trace_bracket},
    {"7  Ostrowski ratios inside the B spectrum", ostrowski},
    {"8  spectral gap corollary", gap},
    {"9  Wielandt sum baselines", wielandt},
    {"10 eigensolver reconstruction and orthonormality", eigensolver_quality},
    {"11 fuzz JSON is byte-identical across runs", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
