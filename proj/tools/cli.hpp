#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

//
// ... Third-party header files
//
#include <CLI11.hpp>
#include <json.hpp>

//
// ... eigb header files
//
#include <eigb/bounds.hpp>
#include <eigb/harness.hpp>
#include <eigb/linalg.hpp>
#include <eigb/matrix_io.hpp>
#include <eigb/report_json.hpp>

namespace eigb::cli {

  enum ExitCode : int { ok = 0, violation = 1, input_error = 2 };

  struct CliConfig {
    double tol_class{default_tol_class};
    double tol_verify{default_tol_verify};
    double tol_herm{default_tol_herm};
    bool json{false};
    std::optional<std::uint64_t> seed{};

    [[nodiscard]] harness::ToleranceConfig
    tolerances() const {
      return {tol_class, tol_verify, tol_herm, tol_herm};
    }
  };

  /// Parses "1,2,5" into a validated sequence for dimension n.
  inline IndexSequence
  parse_indices(const std::string& text, std::size_t n) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
        throw Error(Errc::invalid_index_sequence, "bad index '" + part + "' in '" + text + "'");
      }
      out.push_back(value);
    }
    return IndexSequence(std::move(out), n);
  }

  inline Inertia
  parse_inertia(const std::string& text) {
    std::vector<std::size_t> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
        throw Error(Errc::invalid_spec, "bad inertia component '" + part + "'");
      }
      parts.push_back(value);
    }
    if (parts.size() != 3 || parts[0] + parts[1] + parts[2] == 0) {
      throw Error(Errc::invalid_spec, "inertia must be p,m,z with p+m+z >= 1");
    }
    return {parts[0], parts[1], parts[2]};
  }

  namespace detail {

    inline std::string
    fmt(double x) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      return buf;
    }

    inline std::string
    fmt(const Spectrum& s) {
      std::string out;
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (t > 0) {
          out += ' ';
        }
        out += fmt(s[t]);
      }
      return out;
    }

    inline std::string
    fmt(const Inertia& in) {
      return "(" + std::to_string(in.pi_plus) + ", " + std::to_string(in.nu_minus) + ", " +
             std::to_string(in.delta_zero) + ")";
    }

    struct Inputs {
      HermitianMatrix a;
      std::optional<PsdMatrix> b;
    };

    inline Inputs
    load(const std::string& a_path, const std::string& b_path, const CliConfig& cfg,
         bool b_required) {
      Inputs in{validate_hermitian(io::read_matrix_file(a_path), cfg.tol_herm), std::nullopt};
      if (!b_path.empty()) {
        in.b = validate_psd(io::read_matrix_file(b_path), cfg.tol_herm, cfg.tol_herm);
        if (in.b->dim() != in.a.dim()) {
          throw Error(
            Errc::dimension_mismatch,
            "A is " + std::to_string(in.a.dim()) + "x" + std::to_string(in.a.dim()) +
              ", B is " + std::to_string(in.b->dim()) + "x" + std::to_string(in.b->dim()));
        }
      } else if (b_required) {
        throw Error(Errc::parse_error, "--b is required");
      }
      return in;
    }

    inline void
    print_record(std::ostream& out, const harness::VerificationRecord& r) {
      out << "  idx (" << r.idx.to_string() << ")";
      if (!r.diagnostic.empty()) {
        out << ": error " << r.diagnostic << '\n';
        return;
      }
      out << " kappa_A=" << r.kappa_A << '\n';
      for (const auto& c : r.checks) {
        if (!c.pass()) {
          out << "    " << c.name << ": lower " << fmt(c.lower) << "  actual " << fmt(c.actual)
              << "  upper " << fmt(c.upper) << "  slacks (" << fmt(c.lower_slack()) << ", "
              << fmt(c.upper_slack()) << ")\n";
        }
      }
    }

  } // end of namespace detail

  // ================================================================
  // Subcommands
  // ================================================================

  inline int
  cmd_spectrum(const std::string& a_path, const std::string& b_path, const CliConfig& cfg,
               std::ostream& out) {
    const auto in = detail::load(a_path, b_path, cfg, false);
    const Spectrum sa = spectrum_of(in.a);
    if (cfg.json) {
      nlohmann::json j = {{"version", std::string(io::format_version)}, {"A", json::to_json(sa)}};
      if (in.b) {
        j["B"] = json::to_json(in.b->spectrum());
        j["AB"] = json::to_json(product_spectrum(in.a, *in.b));
        j["inertia_A"] = json::to_json(inertia_of(sa, cfg.tol_class));
      }
      out << j.dump(2) << '\n';
      return ok;
    }
    if (!in.b) {
      out << detail::fmt(sa) << '\n';
      return ok;
    }
    out << "A:  " << detail::fmt(sa) << '\n';
    out << "B:  " << detail::fmt(in.b->spectrum()) << '\n';
    out << "AB: " << detail::fmt(product_spectrum(in.a, *in.b)) << '\n';
    out << "inertia A: " << detail::fmt(inertia_of(sa, cfg.tol_class)) << '\n';
    return ok;
  }

  inline int
  cmd_bounds(const std::string& a_path, const std::string& b_path, const std::string& indices,
             const CliConfig& cfg, std::ostream& out) {
    const auto in = detail::load(a_path, b_path, cfg, true);
    const IndexSequence idx = parse_indices(indices, in.a.dim());
    const Spectrum sa = spectrum_of(in.a);
    const Spectrum& sb = in.b->spectrum();
    const Spectrum sab = product_spectrum(in.a, *in.b);
    const Inertia inertia = inertia_of(sa, cfg.tol_class);
    const BoundReport main = evaluate_main(sa, sb, sab, idx, cfg.tol_class);
    const double split = splitting_upper_bound(sa, sb, idx, cfg.tol_class);
    const double tau = verification_tolerance(sa, sb, idx.k(), cfg.tol_verify);
    const SplitComparison cmp = compare_split_vs_main(sa, sb, idx, cfg.tol_class, tau);

    std::optional<GapBound> gap;
    const Inertia in_ab = inertia_of(sab, cfg.tol_class);
    if (in_ab.pi_plus > 0 && in_ab.nu_minus > 0) {
      gap = gap_bound(sa, sb, sab, cfg.tol_class);
    }
    std::optional<OstrowskiReport> ostrowski;
    if (sb.smallest() > cfg.tol_class * sb.scale()) {
      ostrowski = ostrowski_ratios(sa, sab, sb, cfg.tol_class);
    }

    if (cfg.json) {
      nlohmann::json j = {
        {"version", std::string(io::format_version)},
        {"spectrum_A", json::to_json(sa)},
        {"spectrum_B", json::to_json(sb)},
        {"spectrum_AB", json::to_json(sab)},
        {"inertia_A", json::to_json(inertia)},
        {"idx", json::to_json(idx)},
        {"kappa_A", main.kappa_A},
        {"branch", std::string(to_string(main.branch))},
        {"lower", main.lower},
        {"actual", main.actual},
        {"upper", main.upper},
        {"lower_slack", main.lower_slack()},
        {"upper_slack", main.upper_slack()},
        {"splitting_upper", split},
        {"T1", cmp.t1},
        {"T2", cmp.t2},
        {"dominance_ok", cmp.dominance_ok}};
      if (gap) {
        j["gap"] = {{"p", gap->p}, {"q", gap->q}, {"gap", gap->gap}, {"bound", gap->bound}};
      }
      if (ostrowski) {
        nlohmann::json ratios = nlohmann::json::array();
        for (const auto& r : ostrowski->ratios) {
          ratios.push_back({{"t", r.t}, {"theta", r.theta}});
        }
        j["ostrowski"] = {
          {"range", {ostrowski->range.lower, ostrowski->range.upper}}, {"ratios", ratios}};
      }
      out << j.dump(2) << '\n';
      return ok;
    }

    out << "spectrum A:  " << detail::fmt(sa) << '\n';
    out << "spectrum B:  " << detail::fmt(sb) << '\n';
    out << "spectrum AB: " << detail::fmt(sab) << '\n';
    out << "inertia A: " << detail::fmt(inertia) << "  nu_A = " << inertia.nu_A() << '\n';
    out << "indices: " << idx.to_string() << "  kappa_A = " << main.kappa_A
        << "  branch: " << to_string(main.branch) << '\n';
    out << "main bounds: lower " << detail::fmt(main.lower) << "  actual "
        << detail::fmt(main.actual) << "  upper " << detail::fmt(main.upper) << '\n';
    out << "splitting upper: " << detail::fmt(split) << '\n';
    out << "T1 = " << detail::fmt(cmp.t1) << "  T2 = " << detail::fmt(cmp.t2)
        << (cmp.dominance_ok ? "  (T1 <= T2)" : "  (T1 > T2!)") << '\n';
    if (gap) {
      out << "gap: p=" << gap->p << " q=" << gap->q << "  gap " << detail::fmt(gap->gap)
          << " <= bound " << detail::fmt(gap->bound) << '\n';
    }
    if (ostrowski) {
      out << "ostrowski: range [" << detail::fmt(ostrowski->range.lower) << ", "
          << detail::fmt(ostrowski->range.upper) << "]";
      for (const auto& r : ostrowski->ratios) {
        out << "  theta_" << r.t << "=" << detail::fmt(r.theta);
      }
      out << '\n';
    }
    return ok;
  }

  inline int
  cmd_verify(const std::string& a_path, const std::string& b_path, const std::string& indices,
             std::size_t samples, const CliConfig& cfg, std::ostream& out) {
    const auto in = detail::load(a_path, b_path, cfg, true);
    const std::size_t n = in.a.dim();
    std::vector<IndexSequence> seqs;
    if (!indices.empty()) {
      seqs.push_back(parse_indices(indices, n));
    } else if (n <= 10) {
      seqs = harness::all_index_sequences(n);
    } else {
      std::mt19937_64 rng(cfg.seed.value_or(0));
      std::vector<std::size_t> pool(n);
      for (std::size_t i = 0; i < n; ++i) {
        pool[i] = i + 1;
      }
      for (std::size_t s = 0; s < samples; ++s) {
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(chosen.begin(), chosen.end());
        seqs.emplace_back(std::move(chosen), n);
      }
    }

    const auto tol = cfg.tolerances();
    const harness::Instance inst = harness::prepare_instance(in.a, *in.b, tol);
    std::vector<harness::VerificationRecord> violations;
    std::size_t checks = 0;
    for (std::size_t s = 0; s < seqs.size(); ++s) {
      auto rec = harness::check_prepared(inst, seqs[s], tol, s == 0);
      checks += rec.checks.size();
      if (!rec.passed()) {
        violations.push_back(std::move(rec));
      }
    }

    if (cfg.json) {
      nlohmann::json v = nlohmann::json::array();
      for (const auto& r : violations) {
        v.push_back(json::to_json(r));
      }
      out << nlohmann::json{
               {"version", std::string(io::format_version)},
               {"n", n},
               {"sequences", seqs.size()},
               {"checks", checks},
               {"violations", v}}
               .dump(2)
          << '\n';
    } else {
      out << "checked " << seqs.size() << " index sequences (" << checks << " inequalities), "
          << violations.size() << " with violations\n";
      for (const auto& r : violations) {
        detail::print_record(out, r);
      }
    }
    return violations.empty() ? ok : violation;
  }

  struct FuzzOptions {
    std::size_t count{1000};
    std::size_t n_min{2};
    std::size_t n_max{8};
    std::string inertia{};
    unsigned threads{0};
  };

  inline int
  cmd_fuzz(const FuzzOptions& opt, const CliConfig& cfg, std::ostream& out) {
    harness::CampaignConfig campaign;
    campaign.n_min = opt.n_min;
    campaign.n_max = opt.n_max;
    if (!opt.inertia.empty()) {
      campaign.inertia = parse_inertia(opt.inertia);
    }
    campaign.tol = cfg.tolerances();
    campaign.threads = opt.threads;
    const auto report = harness::run_campaign(opt.count, campaign, cfg.seed.value_or(0));

    if (cfg.json) {
      out << json::to_json(report).dump(2) << '\n';
    } else {
      out << "instances: " << report.total << "  passed: " << report.passed
          << "  failed: " << report.failed << "  records: " << report.records << "  ("
          << detail::fmt(report.wall_time_seconds) << " s)\n";
      out << "branches:";
      for (const auto& [b, c] : report.branch_counts) {
        out << "  " << to_string(b) << "=" << c;
      }
      out << '\n';
      for (const auto& [name, st] : report.checks) {
        out << "  " << name << ": " << st.count << " checks, min slack "
            << detail::fmt(st.min_slack) << ", mean slack " << detail::fmt(st.mean_slack())
            << '\n';
      }
      for (const auto& f : report.failures) {
        out << "failure: instance " << f.instance_id << " seed " << f.seed << '\n';
        detail::print_record(out, f);
      }
    }
    return report.failed == 0 ? ok : violation;
  }

  // ================================================================
  // Worked example
  // ================================================================

  struct ExampleRow {
    std::string label;
    std::vector<std::size_t> indices;
    double upper;
    double actual;
    double lower;
  };

  inline ComplexMatrix
  example_a() {
    return ComplexMatrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, -4}});
  }

  inline ComplexMatrix
  example_b() {
    return ComplexMatrix::from_rows({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}});
  }

  /// Golden (upper, actual, lower) for the three index pairs of the 3×3 example.
  inline const std::vector<ExampleRow>&
  example_golden() {
    static const std::vector<ExampleRow> rows = {
      {"I", {1, 2}, 8, 0, 0},
      {"II", {1, 3}, 5, -5, -9},
      {"III", {2, 3}, -6, -11, -14}};
    return rows;
  }

  inline int
  cmd_example(const CliConfig& cfg, std::ostream& out) {
    constexpr double golden_tol = 1e-9;
    const HermitianMatrix a = validate_hermitian(example_a(), cfg.tol_herm);
    const PsdMatrix b = validate_psd(validate_hermitian(example_b(), cfg.tol_herm), cfg.tol_herm);
    const Spectrum sa = spectrum_of(a);
    const Spectrum sab = product_spectrum(a, b);

    bool all_match = true;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream table;
    table << "case  indices  kappa_A      upper     actual      lower  match\n";
    for (const auto& g : example_golden()) {
      const IndexSequence idx(g.indices, 3);
      const BoundReport r = evaluate_main(sa, b.spectrum(), sab, idx, cfg.tol_class);
      const bool match = std::abs(r.upper - g.upper) <= golden_tol &&
                         std::abs(r.actual - g.actual) <= golden_tol &&
                         std::abs(r.lower - g.lower) <= golden_tol;
      all_match = all_match && match;
      char line[128];
      std::snprintf(
        line, sizeof line, "%-5s (%s)    %7zu %10.6f %10.6f %10.6f  %s\n", g.label.c_str(),
        idx.to_string().c_str(), r.kappa_A, r.upper, r.actual, r.lower, match ? "yes" : "NO");
      table << line;
      rows.push_back(
        {{"case", g.label},
         {"idx", json::to_json(idx)},
         {"kappa_A", r.kappa_A},
         {"upper", r.upper},
         {"actual", r.actual},
         {"lower", r.lower},
         {"match", match}});
    }

    if (cfg.json) {
      out << nlohmann::json{
               {"version", std::string(io::format_version)},
               {"spectrum_A", json::to_json(sa)},
               {"spectrum_B", json::to_json(b.spectrum())},
               {"spectrum_AB", json::to_json(sab)},
               {"cases", rows},
               {"match", all_match}}
               .dump(2)
          << '\n';
    } else {
      out << "spectrum A:  " << detail::fmt(sa) << '\n';
      out << "spectrum B:  " << detail::fmt(b.spectrum()) << '\n';
      out << "spectrum AB: " << detail::fmt(sab) << '\n';
      out << table.str();
    }
    return all_match ? ok : violation;
  }

  // ================================================================
  // Dispatch
  // ================================================================

  /// Full command line entry point; never throws.
  inline int
  run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalue-sum bounds for products of Hermitian and PSD matrices", "eigb"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("EIGB_TOL_VERIFY")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v >= 0.0)) {
        err << "error: EIGB_TOL_VERIFY='" << env << "' is not a nonnegative number\n";
        return input_error;
      }
      cfg.tol_verify = v;
    }
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--tol-class", cfg.tol_class, "Relative zero-classification threshold")
        ->check(CLI::NonNegativeNumber);
      sub->add_option("--tol-verify", cfg.tol_verify, "Relative verification tolerance")
        ->check(CLI::NonNegativeNumber);
      sub->add_option("--tol-herm", cfg.tol_herm, "Relative Hermitian/PSD input tolerance")
        ->check(CLI::NonNegativeNumber);
      sub->add_flag("--json", cfg.json, "Emit JSON");
    };

    std::string a_path;
    std::string b_path;
    std::string indices;
    std::size_t samples = 256;
    FuzzOptions fuzz;

    auto* spectrum = app.add_subcommand("spectrum", "Spectra of A, B and AB");
    spectrum->add_option("--a", a_path, "Hermitian matrix file")->required();
    spectrum->add_option("--b", b_path, "PSD matrix file");
    add_common(spectrum);

    auto* bounds = app.add_subcommand("bounds", "Evaluate every bound for one index sequence");
    bounds->add_option("--a", a_path, "Hermitian matrix file")->required();
    bounds->add_option("--b", b_path, "PSD matrix file")->required();
    bounds->add_option("--indices", indices, "Comma-separated 1-based indices")->required();
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "Check every applicable inequality");
    verify->add_option("--a", a_path, "Hermitian matrix file")->required();
    verify->add_option("--b", b_path, "PSD matrix file")->required();
    verify->add_option("--indices", indices, "Comma-separated 1-based indices");
    verify->add_option("--samples", samples, "Sampled sequences when n > 10")
      ->check(CLI::PositiveNumber);
    auto* verify_seed = verify->add_option("--seed", seed, "Sampling seed");
    add_common(verify);

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized verification campaign");
    fuzz_cmd->add_option("--count", fuzz.count, "Number of instances");
    fuzz_cmd->add_option("--n-min", fuzz.n_min, "Smallest dimension");
    fuzz_cmd->add_option("--n-max", fuzz.n_max, "Largest dimension");
    auto* fuzz_seed = fuzz_cmd->add_option("--seed", seed, "Master seed");
    fuzz_cmd->add_option("--inertia", fuzz.inertia, "Force inertia p,m,z of A");
    fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads (0 = all cores)");
    add_common(fuzz_cmd);

    auto* example = app.add_subcommand("example", "Reproduce the 3x3 worked example");
    add_common(example);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return ok;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    if (verify_seed->count() > 0 || fuzz_seed->count() > 0) {
      cfg.seed = seed;
    }

    try {
      if (*spectrum) {
        return cmd_spectrum(a_path, b_path, cfg, out);
      }
      if (*bounds) {
        return cmd_bounds(a_path, b_path, indices, cfg, out);
      }
      if (*verify) {
        return cmd_verify(a_path, b_path, indices, samples, cfg, out);
      }
      if (*fuzz_cmd) {
        if (fuzz.count == 0) {
          throw Error(Errc::invalid_count, "--count must be at least 1");
        }
        return cmd_fuzz(fuzz, cfg, out);
      }
      if (*example) {
        return cmd_example(cfg, out);
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    return input_error;
  }

} // end of namespace eigb::cli
