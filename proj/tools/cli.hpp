#pragma once

// Command-line front end. `run` is separate from main() so tests can drive
// it with in-memory streams.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermix/hermix.hpp"
#include "hermix/json_io.hpp"

namespace hermix::cli {

enum ExitCode : int {
  ok = 0,
  negative = 1,   // a yes/no check answered no
  input = 2,      // bad arguments or input files
  violation = 3,  // internal TheoremViolation
};

struct CliConfig {
  int k = 0;
  double tol = default_cospectral_tolerance;
  std::string format = "text";
  std::uint64_t seed = default_sweep_seed;
  std::size_t cycle_cap = default_cycle_cap;
  std::size_t search_budget = default_search_budget;
  std::size_t orient_cap = default_orientation_cap;
  unsigned threads = 0;
};

namespace detail {

inline MixedGraph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph(file);
}

inline Partition load_partition(const std::string& inline_spec, const std::string& file_path,
                                int parts, std::size_t n) {
  if (!file_path.empty()) {
    std::ifstream file(file_path);
    if (!file) throw InputError("cannot open partition file '" + file_path + "'");
    auto p = parse_partition_file(file, n);
    if (p.parts() != parts)
      throw PartitionMismatch("partition file declares k " + std::to_string(p.parts()) +
                              ", expected " + std::to_string(parts));
    return p;
  }
  if (inline_spec.empty()) throw InputError("a partition is required (--partition or --partition-file)");
  return parse_inline_partition(inline_spec, parts, n);
}

inline std::string join(const std::vector<Vertex>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

inline std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline void print_partition(std::ostream& out, const std::string& label, const Partition& p) {
  out << label << ": " << join(p.assignment()) << '\n';
}

inline void print_double_partition(std::ostream& out, const std::string& label,
                                   const DoublePartition& dp) {
  out << label << ":";
  for (std::size_t v = 0; v < dp.part.size(); ++v)
    out << ' ' << (dp.side[v] == Side::Primed ? "'" : "''") << dp.part[v];
  out << '\n';
}

inline void print_conflict(std::ostream& out, const std::string& label, const ConflictCycle& c) {
  out << label << ": " << join(c.walk) << " (residue " << c.residue << " mod " << c.modulus << ")\n";
}

inline void print_sweep(std::ostream& out, const SweepReport& r) {
  out << "graph: " << r.graph_id << "\nk: " << r.k << "\norientations: " << r.orientation_count
      << "\nclasses: " << r.class_count << '\n';
  for (std::size_t c = 0; c < r.class_count; ++c) {
    out << "class " << c << " size " << r.class_sizes[c] << ":";
    for (double x : r.class_spectra[c]) out << ' ' << format12(x);
    out << '\n';
  }
  for (const auto& t : r.checks) {
    out << "check " << t.name << ": checked " << t.checked << ", violations " << t.violations;
    if (t.skipped) out << ", skipped " << t.skipped;
    out << '\n';
    for (const auto& s : t.samples) out << "  " << s << '\n';
  }
  if (!r.checks.empty()) out << "violations: " << r.total_violations() << '\n';
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Hermitian adjacency spectra of mixed graphs over k-th roots of unity", "hermix"};
  app.require_subcommand(1);
  CliConfig cfg;

  const CLI::Validator k_check(
      [](std::string& s) -> std::string {
        try {
          std::size_t used = 0;
          long v = std::stol(s, &used);
          if (used != s.size()) return "k must be an integer";
          if (v < 3) return "k must be at least 3: omega = exp(2*pi*i/k) requires k >= 3";
        } catch (const std::exception&) {
          return "k must be an integer";
        }
        return {};
      },
      "K>=3");

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "root-of-unity order (omega = exp(2*pi*i/k))")
        ->required()
        ->check(k_check);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "eigenvalue comparison tolerance")->capture_default_str();
  };

  std::string graph_a, graph_b, partition_inline, partition_file, csv_path;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, descending");
  spectrum->add_option("graph", graph_a, "graph file ('-' for stdin)")->required();
  add_k(spectrum);
  add_format(spectrum);

  auto* radius = app.add_subcommand("radius", "spectral radius max |lambda|");
  radius->add_option("graph", graph_a)->required();
  add_k(radius);
  add_format(radius);

  auto* cosp = app.add_subcommand("cospectral", "compare two spectra; exit 1 if they differ");
  cosp->add_option("a", graph_a)->required();
  cosp->add_option("b", graph_b)->required();
  add_k(cosp);
  add_tol(cosp);
  add_format(cosp);

  auto* cw = app.add_subcommand("cycle-weights", "weight of every simple cycle; with two graphs, "
                                                 "also whether all real parts match");
  cw->add_option("a", graph_a)->required();
  cw->add_option("b", graph_b);
  add_k(cw);
  add_format(cw);
  cw->add_option("--cycle-cap", cfg.cycle_cap)->capture_default_str();

  auto* sw = app.add_subcommand("switch", "rewrite a graph");
  sw->require_subcommand(1);
  auto* sw3 = sw->add_subcommand("three-way", "three-way switching for an admissible k-partition");
  sw3->add_option("graph", graph_a)->required();
  add_k(sw3);
  add_format(sw3);
  sw3->add_option("--partition", partition_inline, "inline partition v0:1,v1:2,...");
  sw3->add_option("--partition-file", partition_file);
  auto* sw2 = sw->add_subcommand("two-way", "two-way switching for a bipartition (parts 1, 2)");
  sw2->add_option("graph", graph_a)->required();
  add_format(sw2);
  sw2->add_option("--partition", partition_inline, "inline partition v0:1,v1:2,...");
  sw2->add_option("--partition-file", partition_file);
  auto* swc = sw->add_subcommand("converse", "reverse every arc");
  swc->add_option("graph", graph_a)->required();
  add_format(swc);

  auto* adm = app.add_subcommand("admissible", "check partition admissibility; exit 1 if not");
  adm->add_option("graph", graph_a)->required();
  add_k(adm);
  add_format(adm);
  adm->add_option("--partition", partition_inline);
  adm->add_option("--partition-file", partition_file);

  auto* bal = app.add_subcommand("balance", "cospectrality with the underlying graph; exit 1 if not");
  bal->add_option("graph", graph_a)->required();
  add_k(bal);
  add_tol(bal);
  add_format(bal);

  auto* ext = app.add_subcommand("extremal", "classify whether the spectral radius reaches Delta");
  ext->add_option("graph", graph_a)->required();
  add_k(ext);
  add_tol(ext);
  add_format(ext);

  auto* eqv = app.add_subcommand("equivalent", "bounded search for a switching-equivalence "
                                               "witness; exit 1 unless found");
  eqv->add_option("a", graph_a)->required();
  eqv->add_option("b", graph_b)->required();
  add_k(eqv);
  add_format(eqv);
  eqv->add_option("--search-budget", cfg.search_budget)->capture_default_str();
  eqv->add_option("--cycle-cap", cfg.cycle_cap)->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "cospectral classes over all orientations");
  en->add_option("graph", graph_a, "graph whose underlying graph is swept")->required();
  add_k(en);
  add_tol(en);
  add_format(en);
  en->add_option("--orient-cap", cfg.orient_cap)->capture_default_str();
  en->add_option("--csv", csv_path, "also write per-orientation CSV to this path");
  en->add_option("--threads", cfg.threads, "worker threads (0: all cores)");

  auto* ver = app.add_subcommand("verify", "check every theorem over all orientations; "
                                           "exit 3 on any violation");
  ver->add_option("graph", graph_a)->required();
  add_k(ver);
  add_tol(ver);
  add_format(ver);
  ver->add_option("--seed", cfg.seed)->capture_default_str();
  ver->add_option("--orient-cap", cfg.orient_cap)->capture_default_str();
  ver->add_option("--cycle-cap", cfg.cycle_cap)->capture_default_str();
  ver->add_option("--threads", cfg.threads, "worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input;
  }

  const bool as_json = cfg.format == "json";
  try {
    if (*spectrum) {
      auto g = detail::load_graph(graph_a, in);
      auto s = eigenvalues(g, RootParameter(cfg.k));
      if (as_json)
        out << to_json(s).dump() << '\n';
      else
        for (double x : s.values) out << format12(x) << '\n';
      return ok;
    }

    if (*radius) {
      auto g = detail::load_graph(graph_a, in);
      double rho = spectral_radius(g, RootParameter(cfg.k));
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12f", round12(rho));
      if (as_json)
        out << json{{"rho", round12(rho)}, {"delta", max_degree(g)}}.dump() << '\n';
      else
        out << buf << '\n';
      return ok;
    }

    if (*cosp) {
      auto a = detail::load_graph(graph_a, in);
      auto b = detail::load_graph(graph_b, in);
      auto r = cospectral(a, b, RootParameter(cfg.k), cfg.tol);
      if (as_json) {
        json j{{"cospectral", r.cospectral}, {"tol", cfg.tol}};
        j["max_gap"] = std::isfinite(r.max_gap) ? json(round12(r.max_gap)) : json(nullptr);
        out << j.dump() << '\n';
      } else {
        out << "cospectral: " << (r.cospectral ? "yes" : "no") << '\n'
            << "max_gap: " << (std::isfinite(r.max_gap) ? format12(r.max_gap) : "inf") << '\n';
      }
      return r.cospectral ? ok : negative;
    }

    if (*cw) {
      RootParameter k(cfg.k);
      auto a = detail::load_graph(graph_a, in);
      auto ma = gain_matrix(a, k);
      std::optional<MixedGraph> b;
      if (!graph_b.empty()) {
        b = detail::load_graph(graph_b, in);
        if (!same_underlying(a, *b)) throw UnderlyingMismatch();
      }
      json rows = json::array();
      for (const auto& c : enumerate_simple_cycles(a, cfg.cycle_cap)) {
        int w = cycle_weight(ma, c);
        json row{{"cycle", c}, {"exponent", w}, {"real", round12(real_part(w, k))}};
        if (b) {
          int wb = cycle_weight(gain_matrix(*b, k), c);
          row["exponent_b"] = wb;
          row["real_b"] = round12(real_part(wb, k));
        }
        if (!as_json) {
          out << detail::join(c) << "  exponent " << w << "  real " << format12(real_part(w, k));
          if (b)
            out << "  |  exponent " << row["exponent_b"].get<int>() << "  real "
                << format12(real_part(row["exponent_b"].get<int>(), k));
          out << '\n';
        }
        rows.push_back(std::move(row));
      }
      std::optional<bool> match;
      if (b) match = cycle_realparts_match(a, *b, k, cfg.cycle_cap);
      if (as_json) {
        json j{{"k", cfg.k}, {"cycles", rows}};
        if (match) j["realparts_match"] = *match;
        out << j.dump() << '\n';
      } else if (match) {
        out << "realparts_match: " << (*match ? "yes" : "no") << '\n';
      }
      return ok;
    }

    if (*sw) {
      auto g = detail::load_graph(graph_a, in);
      MixedGraph result;
      if (*sw3) {
        RootParameter k(cfg.k);
        auto p = detail::load_partition(partition_inline, partition_file, cfg.k, g.order());
        auto report = is_admissible(g, p, k);
        if (!report.admissible) {
          err << "partition is not admissible:\n";
          for (const auto& v : report.violations) err << "  " << describe(v) << '\n';
          return input;
        }
        result = three_way_switch(g, p, k);
      } else if (*sw2) {
        auto p = detail::load_partition(partition_inline, partition_file, 2, g.order());
        result = two_way_switch(g, p);
      } else {
        result = converse(g);
      }
      if (as_json) {
        json edges = json::array(), arcs = json::array();
        for (auto [u, v] : result.edges()) edges.push_back({u, v});
        for (auto [u, v] : result.arcs()) arcs.push_back({u, v});
        out << json{{"n", result.order()}, {"edges", edges}, {"arcs", arcs}}.dump() << '\n';
      } else {
        write_graph(out, result);
      }
      return ok;
    }

    if (*adm) {
      auto g = detail::load_graph(graph_a, in);
      auto p = detail::load_partition(partition_inline, partition_file, cfg.k, g.order());
      auto report = is_admissible(g, p, RootParameter(cfg.k));
      if (as_json) {
        json vs = json::array();
        for (const auto& v : report.violations) vs.push_back(to_json(v));
        out << json{{"admissible", report.admissible}, {"violations", vs}}.dump() << '\n';
      } else {
        out << "admissible: " << (report.admissible ? "yes" : "no") << '\n';
        for (const auto& v : report.violations) out << "  " << describe(v) << '\n';
      }
      return report.admissible ? ok : negative;
    }

    if (*bal) {
      auto g = detail::load_graph(graph_a, in);
      auto r = cospectral_to_underlying(g, RootParameter(cfg.k), cfg.tol);
      if (as_json) {
        out << to_json(r).dump() << '\n';
      } else {
        out << "balanced: " << (r.combinatorial ? "yes" : "no") << '\n'
            << "lambda1: " << format12(r.lambda1) << '\n'
            << "lambda1_underlying: " << format12(r.lambda1_underlying) << '\n'
            << "spectrum_gap: " << format12(r.spectrum_gap) << '\n';
        if (auto* p = std::get_if<Partition>(&r.certificate)) detail::print_partition(out, "partition", *p);
        if (auto* c = std::get_if<ConflictCycle>(&r.certificate))
          detail::print_conflict(out, "conflict_cycle", *c);
      }
      return r.combinatorial ? ok : negative;
    }

    if (*ext) {
      auto g = detail::load_graph(graph_a, in);
      auto r = extremal_classification(g, RootParameter(cfg.k), cfg.tol);
      if (as_json) {
        out << to_json(r).dump() << '\n';
      } else {
        out << "outcome: " << to_string(r.outcome) << '\n'
            << "regular: " << (r.regular ? "yes" : "no") << '\n'
            << "delta: " << r.delta << '\n'
            << "rho: " << format12(r.rho) << '\n'
            << "borderline: " << (r.borderline ? "yes" : "no") << '\n';
        if (r.positive_partition) detail::print_partition(out, "positive_partition", *r.positive_partition);
        if (r.negative_partition) detail::print_partition(out, "negative_partition", *r.negative_partition);
        if (r.negative_double_partition)
          detail::print_double_partition(out, "negative_partition", *r.negative_double_partition);
        if (r.outcome == Outcome::NotExtremal) {
          detail::print_conflict(out, "conflict_cycle", *r.positive_conflict);
          detail::print_conflict(out, "negative_conflict_cycle", *r.negative_conflict);
        }
      }
      return ok;
    }

    if (*eqv) {
      auto a = detail::load_graph(graph_a, in);
      auto b = detail::load_graph(graph_b, in);
      SearchOptions opts;
      opts.budget = cfg.search_budget;
      opts.cycle_cap = cfg.cycle_cap;
      auto r = switching_equivalent_search(a, b, RootParameter(cfg.k), opts);
      json moves = json::array();
      for (const auto& m : r.witness) {
        if (const auto* tw = std::get_if<ThreeWayMove>(&m))
          moves.push_back({{"move", "three-way"}, {"partition", tw->partition.assignment()}});
        else
          moves.push_back({{"move", "converse"}});
      }
      if (as_json) {
        out << json{{"verdict", to_string(r.verdict)},
                    {"visited", r.visited},
                    {"rejected_by_cycle_weights", r.rejected_by_invariant},
                    {"witness", moves}}
                   .dump()
            << '\n';
      } else {
        out << "verdict: " << to_string(r.verdict) << '\n' << "visited: " << r.visited << '\n';
        for (const auto& m : moves) {
          out << "  " << m["move"].get<std::string>();
          if (m.contains("partition")) out << ' ' << detail::join(m["partition"].get<std::vector<int>>());
          out << '\n';
        }
      }
      return r.verdict == SearchVerdict::Equivalent ? ok : negative;
    }

    if (*en || *ver) {
      auto g = detail::load_graph(graph_a, in);
      SweepOptions opts;
      opts.tol = cfg.tol;
      opts.orientation_cap = cfg.orient_cap;
      opts.cycle_cap = cfg.cycle_cap;
      opts.seed = cfg.seed;
      opts.threads = cfg.threads;
      RootParameter k(cfg.k);
      auto r = *en ? cospectral_classes(g, k, opts) : verify_theorems(g, k, opts);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw InputError("cannot write '" + csv_path + "'");
        write_csv(csv, r);
      }
      if (as_json)
        out << to_json(r).dump() << '\n';
      else
        detail::print_sweep(out, r);
      return r.total_violations() == 0 ? ok : violation;
    }
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return violation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input;
  }
  return input;
}

}  // namespace hermix::cli
