#pragma once

// JSON and CSV renderings of library results. Requires nlohmann/json.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermix/enumeration.hpp"
#include "hermix/spectra.hpp"
#include "hermix/structure.hpp"
#include "hermix/switching.hpp"

namespace hermix {

using json = nlohmann::json;

/// x rounded to 12 significant digits; values below 5e-13 in magnitude
/// print as 0.
inline double round12(double x) {
  if (std::abs(x) < 5e-13) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

inline json to_json(const std::vector<double>& values) {
  json out = json::array();
  for (double x : values) out.push_back(round12(x));
  return out;
}

inline json to_json(const Spectrum& s) {
  return json{{"n", s.size()},
              {"eigenvalues", to_json(s.values)},
              {"rho", round12(s.size() ? s.radius() : 0.0)},
              {"residual", s.residual}};
}

inline json to_json(const Partition& p) {
  return json{{"k", p.parts()}, {"parts", p.assignment()}};
}

inline json to_json(const DoublePartition& dp) {
  json sides = json::array();
  for (auto s : dp.side) sides.push_back(s == Side::Primed ? "prime" : "double_prime");
  return json{{"k", dp.k}, {"parts", dp.part}, {"sides", sides}};
}

inline json to_json(const ConflictCycle& c) {
  return json{{"modulus", c.modulus}, {"walk", c.walk}, {"residue", c.residue}};
}

inline json to_json(const Violation& v) {
  return json{{"kind", v.is_arc ? "arc" : "edge"},
              {"u", v.pair.u},
              {"v", v.pair.v},
              {"type", {v.part_u, v.part_v}}};
}

inline json to_json(const BalanceReport& r) {
  json out{{"balanced", r.combinatorial},
           {"combinatorial", r.combinatorial},
           {"numeric", r.numeric},
           {"spectra_match", r.spectra_match},
           {"lambda1", round12(r.lambda1)},
           {"lambda1_underlying", round12(r.lambda1_underlying)},
           {"spectrum_gap", round12(r.spectrum_gap)}};
  if (auto* p = std::get_if<Partition>(&r.certificate)) out["partition"] = to_json(*p);
  if (auto* c = std::get_if<ConflictCycle>(&r.certificate)) out["conflict_cycle"] = to_json(*c);
  return out;
}

/// {regular, delta, outcome, partition?, conflict_cycle?, rho, borderline}
/// plus the extreme eigenvalues and any secondary certificate.
inline json to_json(const ClassificationReport& r) {
  json out{{"regular", r.regular},
           {"delta", r.delta},
           {"outcome", to_string(r.outcome)},
           {"rho", round12(r.rho)},
           {"lambda_max", round12(r.lambda_max)},
           {"lambda_min", round12(r.lambda_min)},
           {"borderline", r.borderline}};
  switch (r.outcome) {
    case Outcome::PositiveExtremal:
      out["partition"] = to_json(*r.positive_partition);
      if (r.negative_partition) out["negative_partition"] = to_json(*r.negative_partition);
      if (r.negative_double_partition)
        out["negative_partition"] = to_json(*r.negative_double_partition);
      break;
    case Outcome::NegativeExtremalEven: out["partition"] = to_json(*r.negative_partition); break;
    case Outcome::NegativeExtremalOdd: out["partition"] = to_json(*r.negative_double_partition); break;
    case Outcome::NotExtremal:
      out["conflict_cycle"] = to_json(*r.positive_conflict);
      out["negative_conflict_cycle"] = to_json(*r.negative_conflict);
      break;
    case Outcome::NotRegular: break;
  }
  return out;
}

inline json to_json(const CheckTally& t) {
  return json{{"name", t.name},
              {"checked", t.checked},
              {"violations", t.violations},
              {"skipped", t.skipped},
              {"samples", t.samples}};
}

inline json to_json(const SweepReport& r) {
  json spectra = json::array();
  for (const auto& s : r.class_spectra) spectra.push_back(to_json(s));
  json out{{"graph", r.graph_id},
           {"k", r.k},
           {"tol", r.tol},
           {"seed", r.seed},
           {"orientations", r.orientation_count},
           {"class_count", r.class_count},
           {"class_sizes", r.class_sizes},
           {"class_spectra", spectra}};
  if (!r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    out["checks"] = checks;
    out["violations"] = r.total_violations();
  }
  return out;
}

/// orientation_code,class_id,rho,lambda1
inline void write_csv(std::ostream& out, const SweepReport& r) {
  out << "orientation_code,class_id,rho,lambda1\n";
  for (const auto& row : r.rows)
    out << row.code << ',' << row.class_id << ',' << format12(row.rho) << ','
        << format12(row.lambda1) << '\n';
}

}  // namespace hermix
