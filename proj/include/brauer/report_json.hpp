#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "brauer/detect.hpp"
#include "brauer/resolvent.hpp"
#include "brauer/scan.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kScanSchema = "brauer-scan/1";
inline constexpr const char* kTemplateSchema = "brauer-templates/1";
inline constexpr const char* kCandidateNote =
    "candidate = smooth and (rational root of f or rational root of Phi): a necessary condition for a "
    "nontrivial algebraic Brauer group, so it over-counts; integrality of hyperplane sections is not checked";

template <class It>
Json decimal_array(It first, It last) {
  Json a = Json::array();
  for (; first != last; ++first) a.push_back(first->get_str());
  return a;
}

inline Json resolvent_to_json(const Resolvent10& phi) { return decimal_array(phi.q.begin(), phi.q.end()); }

inline Json verdict_to_json(const DetectionVerdict& v) {
  Json j;
  j["det_a"] = v.det_a.get_str();
  j["f"] = decimal_array(v.f.p.begin(), v.f.p.end());
  j["surface"] = to_string(v.surface.kind);
  j["disc"] = v.surface.disc.get_str();
  j["s1"] = v.s1.found;
  j["s1_witness"] = v.s1.witness ? Json::array({v.s1.witness->lambda.get_str(), v.s1.witness->d.get_str()}) : Json();
  j["s2"] = v.s2.found;
  j["s2_witness"] = v.s2.witness ? Json(v.s2.witness->get_str()) : Json();
  j["factor_type"] = v.factor_type ? Json(*v.factor_type) : Json();
  j["brauer_status"] = to_string(v.brauer_status);
  j["phi"] = resolvent_to_json(v.phi);
  j["note"] = kCandidateNote;
  return j;
}

inline Json templates_to_json(const ResolventTemplates& t) {
  Json j;
  j["schema"] = kTemplateSchema;
  j["variables"] = template_variables();
  Json q = Json::array();
  for (const auto& poly : t.qhat) {
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms()) terms.push_back(Json::array({c.get_str(), e}));
    q.push_back(terms);
  }
  j["q"] = q;
  return j;
}

inline ResolventTemplates templates_from_json(const Json& j) {
  if (j.value("schema", "") != kTemplateSchema) throw Error(ErrorKind::InvalidInput, "unknown template schema");
  const auto& q = j.at("q");
  if (q.size() != 11) throw Error(ErrorKind::InvalidInput, "template block needs 11 polynomials");
  ResolventTemplates t;
  for (std::size_t k = 0; k < 11; ++k)
    for (const auto& term : q[k]) {
      Exponents e = term.at(1).get<Exponents>();
      t.qhat[k].add_term(e, parse_bigint(term.at(0).get<std::string>()));
    }
  return t;
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

inline Json density_json(std::uint64_t count, std::uint64_t total) {
  const auto w = wilson(count, total);
  Json j;
  j["value"] = std::to_string(count) + "/" + std::to_string(total);
  j["estimate"] = format_double(w.estimate);
  j["wilson95"] = Json::array({format_double(w.lo), format_double(w.hi)});
  j["stderr"] = format_double(w.stderr_);
  return j;
}

/// Deterministic report: no timing, no worker count.
inline Json report_to_json(const ScanReport& r) {
  const auto& c = r.counts;
  Json j;
  j["schema"] = kScanSchema;
  j["note"] = kCandidateNote;
  Json cfg;
  cfg["A"] = decimal_array(r.config.a.upper().begin(), r.config.a.upper().end());
  cfg["P"] = r.config.height;
  cfg["mode"] = to_string(r.config.mode);
  cfg["samples"] = std::to_string(r.config.mode == ScanMode::Sample ? r.config.samples : c.total);
  cfg["seed"] = std::to_string(r.config.seed);
  cfg["exact"] = r.config.exact;
  j["config"] = cfg;
  Json counts;
  counts["total"] = std::to_string(c.total);
  counts["disc_zero"] = std::to_string(c.disc_zero);
  counts["s1_true"] = std::to_string(c.s1_true);
  counts["s2_true"] = std::to_string(c.s2_true);
  counts["candidate"] = std::to_string(c.candidate);
  counts["generic_trivial"] = std::to_string(c.generic_trivial);
  if (r.config.exact) {
    counts["exact_linear"] = std::to_string(c.exact_linear);
    counts["exact_quadratic"] = std::to_string(c.exact_quadratic);
    counts["s2_without_exact_split"] = std::to_string(c.s2_without_exact_split);
  }
  j["counts"] = counts;
  Json dens;
  dens["disc_zero"] = density_json(c.disc_zero, c.total);
  dens["s1_true"] = density_json(c.s1_true, c.total);
  dens["s2_true"] = density_json(c.s2_true, c.total);
  dens["candidate"] = density_json(c.candidate, c.total);
  dens["generic_trivial"] = density_json(c.generic_trivial, c.total);
  j["densities"] = dens;
  j["telemetry"] = {{"max_disc_bits", c.max_disc_bits}, {"max_resolvent_bits", c.max_resolvent_bits}};
  Json sums = Json::array();
  for (auto s : r.chunk_checksums) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(s));
    sums.push_back(buf);
  }
  j["chunk_checksums"] = sums;
  return j;
}

inline Json series_to_json(const SeriesReport& s) {
  Json j;
  j["schema"] = kScanSchema;
  j["kind"] = "density_series";
  j["slope_label"] = "empirical decay rate of the candidate density in log-log coordinates; not a test of any asymptotic exponent";
  j["slope"] = format_double(s.slope);
  j["slope_stderr"] = format_double(s.slope_stderr);
  Json pts = Json::array();
  for (const auto& r : s.points) pts.push_back(report_to_json(r));
  j["points"] = pts;
  return j;
}

inline std::string series_csv(const SeriesReport& s) {
  std::ostringstream out;
  out << "P,samples,candidate,candidate_density,candidate_wilson_lo,candidate_wilson_hi,disc_zero,disc_zero_density,"
         "s1_true,s2_true\n";
  for (const auto& r : s.points) {
    const auto& c = r.counts;
    const auto w = wilson(c.candidate, c.total);
    out << r.config.height << ',' << c.total << ',' << c.candidate << ',' << format_double(w.estimate) << ','
        << format_double(w.lo) << ',' << format_double(w.hi) << ',' << c.disc_zero << ','
        << format_double(wilson(c.disc_zero, c.total).estimate) << ',' << c.s1_true << ',' << c.s2_true << '\n';
  }
  return out.str();
}

}  // namespace brauer
