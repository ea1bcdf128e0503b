#pragma once

//
// ... Standard header files
//
#include <cmath>
#include <string>

//
// ... Third-party header files
//
#include <json.hpp>

//
// ... eigb header files
//
#include <eigb/bounds.hpp>
#include <eigb/harness.hpp>
#include <eigb/matrix_io.hpp>
#include <eigb/spectrum.hpp>

namespace eigb::json {

  using nlohmann::json;

  /// Non-finite values (the open side of a one-sided check) become null.
  inline json
  number(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
  }

  inline json
  to_json(const Spectrum& s) {
    json arr = json::array();
    for (double v : s.values()) {
      arr.push_back(v);
    }
    return arr;
  }

  inline json
  to_json(const Inertia& in) {
    return {
      {"pi_plus", in.pi_plus},
      {"nu_minus", in.nu_minus},
      {"delta_zero", in.delta_zero},
      {"nu_A", in.nu_A()}};
  }

  inline json
  to_json(const IndexSequence& idx) {
    json arr = json::array();
    for (auto i : idx.indices()) {
      arr.push_back(i);
    }
    return arr;
  }

  inline json
  to_json(const harness::Check& c) {
    return {
      {"name", c.name},
      {"lower", number(c.lower)},
      {"actual", number(c.actual)},
      {"upper", number(c.upper)},
      {"lower_slack", number(c.lower_slack())},
      {"upper_slack", number(c.upper_slack())},
      {"tolerance", c.tolerance},
      {"pass", c.pass()}};
  }

  inline json
  to_json(const harness::VerificationRecord& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back(to_json(c));
    }
    return {
      {"instance_id", r.instance_id},
      {"seed", r.seed},
      {"n", r.n},
      {"idx", to_json(r.idx)},
      {"kappa_A", r.kappa_A},
      {"inertia_A", to_json(r.inertia_A)},
      {"branch", std::string(to_string(r.branch))},
      {"worst_slack", number(r.worst_slack)},
      {"diagnostic", r.diagnostic},
      {"checks", checks}};
  }

  /// Wall time is omitted so equal inputs serialize to equal bytes.
  inline json
  to_json(const harness::CampaignReport& rep) {
    json checks = json::array();
    for (const auto& [name, st] : rep.checks) {
      checks.push_back(
        {{"name", name},
         {"count", st.count},
         {"min_slack", number(st.min_slack)},
         {"mean_slack", number(st.mean_slack())}});
    }
    json failures = json::array();
    for (const auto& f : rep.failures) {
      failures.push_back(to_json(f));
    }
    json branches = json::object();
    for (const auto& [b, count] : rep.branch_counts) {
      branches[std::string(to_string(b))] = count;
    }
    return {
      {"version", std::string(io::format_version)},
      {"total", rep.total},
      {"passed", rep.passed},
      {"failed", rep.failed},
      {"records", rep.records},
      {"branches", branches},
      {"checks", checks},
      {"failures", failures}};
  }

} // end of namespace eigb::json
