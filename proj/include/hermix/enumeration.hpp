#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "hermix/cycles.hpp"
#include "hermix/errors.hpp"
#include "hermix/gain.hpp"
#include "hermix/graph.hpp"
#include "hermix/spectra.hpp"
#include "hermix/structure.hpp"
#include "hermix/switching.hpp"

namespace hermix {

/// Direction of one underlying edge {u, v} (u < v).
enum class Orientation : unsigned char {
  Undirected,  // u - v
  Forward,     // u -> v
  Backward,    // v -> u
};

using OrientationCode = std::vector<Orientation>;

inline std::string to_string(const OrientationCode& code) {
  std::string s;
  for (auto o : code) s += o == Orientation::Undirected ? 'U' : o == Orientation::Forward ? 'F' : 'B';
  return s;
}

inline constexpr std::size_t default_orientation_cap = 12;

/// Every mixed graph on a fixed underlying graph, indexed 0..3^m-1 in
/// lexicographic order of codes (first edge most significant, U < F < B).
class OrientationSpace {
 public:
  explicit OrientationSpace(const MixedGraph& g, std::size_t cap = default_orientation_cap)
      : n_(g.order()), pairs_(underlying_pairs(g)) {
    if (pairs_.size() > cap) throw CapExceeded(pairs_.size(), cap);
    count_ = 1;
    for (std::size_t i = 0; i < pairs_.size(); ++i) count_ *= 3;
  }

  std::size_t size() const noexcept { return count_; }
  std::size_t edge_count() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  OrientationCode code_at(std::size_t index) const {
    OrientationCode code(pairs_.size());
    for (std::size_t i = pairs_.size(); i-- > 0;) {
      code[i] = static_cast<Orientation>(index % 3);
      index /= 3;
    }
    return code;
  }

  std::size_t index_of(const OrientationCode& code) const {
    std::size_t index = 0;
    for (auto o : code) index = index * 3 + static_cast<std::size_t>(o);
    return index;
  }

  MixedGraph decode(const OrientationCode& code) const {
    if (code.size() != pairs_.size()) throw InputError("orientation code length mismatch");
    MixedGraph g(n_);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto [u, v] = pairs_[i];
      switch (code[i]) {
        case Orientation::Undirected: g.add_edge(u, v); break;
        case Orientation::Forward: g.add_arc(u, v); break;
        case Orientation::Backward: g.add_arc(v, u); break;
      }
    }
    return g;
  }

  OrientationCode encode(const MixedGraph& g) const {
    if (g.order() != n_ || underlying_pairs(g) != pairs_) throw UnderlyingMismatch();
    OrientationCode code(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto [u, v] = pairs_[i];
      auto link = *g.link(u, v);
      code[i] = link == Link::Undirected ? Orientation::Undirected
                : link == Link::Out      ? Orientation::Forward
                                         : Orientation::Backward;
    }
    return code;
  }

  MixedGraph operator[](std::size_t index) const { return decode(code_at(index)); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MixedGraph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = MixedGraph;

    iterator() = default;
    iterator(const OrientationSpace* space, std::size_t index) : space_(space), index_(index) {}
    MixedGraph operator*() const { return (*space_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const OrientationSpace* space_ = nullptr;
    std::size_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  std::size_t n_;
  std::vector<Pair> pairs_;
  std::size_t count_ = 1;
};

inline OrientationSpace orientations(const MixedGraph& g, std::size_t cap = default_orientation_cap) {
  return OrientationSpace(g, cap);
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::vector<std::string> samples;  // first few violation descriptions
};

struct OrientationRow {
  std::size_t index = 0;
  std::string code;
  std::size_t class_id = 0;
  double rho = 0.0;
  double lambda1 = 0.0;
};

struct SweepReport {
  std::string graph_id;
  int k = 0;
  double tol = default_cospectral_tolerance;
  std::size_t orientation_count = 0;
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<double>> class_spectra;  // representative per class
  std::vector<OrientationRow> rows;
  std::vector<CheckTally> checks;
  std::uint64_t seed = 0;

  std::size_t total_violations() const {
    std::size_t s = 0;
    for (const auto& c : checks) s += c.violations;
    return s;
  }
  const CheckTally* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline constexpr std::uint64_t default_sweep_seed = 20'190'407;

struct SweepOptions {
  double tol = default_cospectral_tolerance;
  std::size_t orientation_cap = default_orientation_cap;
  std::size_t cycle_cap = default_cycle_cap;
  std::uint64_t seed = default_sweep_seed;
  std::size_t exhaustive_partition_limit = 10'000;
  std::size_t sampled_partitions = 1'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

// Runs fn(i) for i in [0, count) across worker threads. Each index is
// handled exactly once, so results written per index are schedule-free.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::string spectrum_key(const std::vector<double>& values) {
  std::string key;
  char buf[32];
  for (double x : values) {
    double r = std::round(x * 1e6) / 1e6;
    if (r == 0.0) r = 0.0;  // fold -0
    std::snprintf(buf, sizeof buf, "%.6f,", r);
    key += buf;
  }
  return key;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct SpectralSweep {
  std::vector<Spectrum> spectra;
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
};

// Spectra of every orientation and their cospectral classes: bucket by
// rounded key, merge within buckets at `tol`, then merge bucket
// representatives pairwise so that rounding boundaries cannot split a class.
inline SpectralSweep spectral_sweep(const OrientationSpace& space, RootParameter k, double tol,
                                    unsigned threads) {
  SpectralSweep s;
  s.spectra.resize(space.size());
  parallel_for(space.size(), threads, [&](std::size_t i) { s.spectra[i] = eigenvalues(space[i], k); });

  UnionFind uf(space.size());
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < space.size(); ++i)
    buckets[spectrum_key(s.spectra[i].values)].push_back(i);
  std::vector<std::size_t> heads;
  for (const auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (uf.find(members[a]) != members[a]) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (spectrum_gap(s.spectra[members[a]], s.spectra[members[b]]) <= tol)
          uf.unite(members[a], members[b]);
    }
    for (auto m : members)
      if (uf.find(m) == m) heads.push_back(m);
  }
  for (std::size_t a = 0; a < heads.size(); ++a)
    for (std::size_t b = a + 1; b < heads.size(); ++b)
      if (spectrum_gap(s.spectra[heads[a]], s.spectra[heads[b]]) <= tol) uf.unite(heads[a], heads[b]);

  // Class ids in order of each class's smallest orientation index.
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id_of_root(space.size(), unset);
  s.class_of.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::size_t root = uf.find(i);
    if (id_of_root[root] == unset) id_of_root[root] = s.class_count++;
    s.class_of[i] = id_of_root[root];
  }
  return s;
}

inline std::string default_graph_id(const MixedGraph& g) {
  std::string id = "n" + std::to_string(g.order());
  for (auto [u, v] : underlying_pairs(g)) id += ":" + std::to_string(u) + "-" + std::to_string(v);
  return id;
}

inline void fill_classes(SweepReport& report, const OrientationSpace& space, const SpectralSweep& s) {
  report.orientation_count = space.size();
  report.class_count = s.class_count;
  report.class_sizes.assign(s.class_count, 0);
  report.class_spectra.assign(s.class_count, {});
  report.rows.clear();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const std::size_t c = s.class_of[i];
    if (report.class_sizes[c]++ == 0) report.class_spectra[c] = s.spectra[i].values;
    report.rows.push_back({i, to_string(space.code_at(i)), c, s.spectra[i].radius(),
                           s.spectra[i].size() ? s.spectra[i].largest() : 0.0});
  }
}

inline void note_violation(CheckTally& t, std::string what) {
  ++t.violations;
  if (t.samples.size() < 5) t.samples.push_back(std::move(what));
}

}  // namespace detail

/// Groups all orientations of g's underlying graph by spectrum.
inline SweepReport cospectral_classes(const MixedGraph& g, RootParameter k,
                                      const SweepOptions& opts = {}) {
  OrientationSpace space(g, opts.orientation_cap);
  SweepReport report;
  report.graph_id = detail::default_graph_id(g);
  report.k = k.value();
  report.tol = opts.tol;
  report.seed = opts.seed;
  detail::fill_classes(report, space, detail::spectral_sweep(space, k, opts.tol, opts.threads));
  return report;
}

/// Checks, for every orientation of g's underlying graph:
///   radius_bound                 rho <= Delta
///   converse_cospectral          spectrum equals the converse's
///   cycle_realparts_sufficient   equal cycle real parts => same class
///   balance_equivalence          unit partition <=> lambda_1 = lambda_1(G)
///   extremal_characterization    extremal partition <=> rho = Delta
///   odd_k_corollary              k odd: -Delta in spectrum => Delta too
///   switching_similarity         three-way switching is an exact similarity
///                                and keeps the spectrum
///   zero_spectrum_empty          all-zero spectrum => no edges
/// Violation tallies are expected to be zero.
inline SweepReport verify_theorems(const MixedGraph& g, RootParameter k, const SweepOptions& opts = {}) {
  OrientationSpace space(g, opts.orientation_cap);
  const auto sweep = detail::spectral_sweep(space, k, opts.tol, opts.threads);

  SweepReport report;
  report.graph_id = detail::default_graph_id(g);
  report.k = k.value();
  report.tol = opts.tol;
  report.seed = opts.seed;
  detail::fill_classes(report, space, sweep);

  auto tally = [](const char* name) {
    CheckTally t;
    t.name = name;
    return t;
  };
  CheckTally radius = tally("radius_bound"), conv = tally("converse_cospectral"), cyc = tally("cycle_realparts_sufficient"),
      bal = tally("balance_equivalence"), ext = tally("extremal_characterization"), odd = tally("odd_k_corollary"),
      sw = tally("switching_similarity"), zero = tally("zero_spectrum_empty");

  const MixedGraph base = space[0];
  const bool connected = is_connected(base);
  const double delta = static_cast<double>(max_degree(base));
  const auto cycles = enumerate_simple_cycles(base, opts.cycle_cap);
  const std::size_t n = base.order();

  // Partitions for the switching check: all of them when k^n is small,
  // otherwise a seeded uniform sample.
  std::vector<Partition> partitions;
  {
    double total = std::pow(static_cast<double>(k.value()), static_cast<double>(n));
    if (total <= static_cast<double>(opts.exhaustive_partition_limit)) {
      std::vector<int> part(n, 1);
      while (true) {
        partitions.emplace_back(k.value(), part);
        std::size_t i = n;
        while (i > 0 && part[i - 1] == k.value()) part[--i] = 1;
        if (i == 0) break;
        ++part[i - 1];
      }
    } else {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<int> pick(1, k.value());
      for (std::size_t s = 0; s < opts.sampled_partitions; ++s) {
        std::vector<int> part(n);
        for (auto& p : part) p = pick(rng);
        partitions.emplace_back(k.value(), std::move(part));
      }
    }
  }

  std::map<std::vector<int>, std::size_t> class_by_realparts;

  for (std::size_t i = 0; i < space.size(); ++i) {
    const MixedGraph m = space[i];
    const Spectrum& spec = sweep.spectra[i];
    const std::string code = to_string(space.code_at(i));

    ++radius.checked;
    if (spec.radius() > delta + opts.tol)
      detail::note_violation(radius, code + ": rho " + std::to_string(spec.radius()) + " > Delta");

    ++conv.checked;
    const std::size_t ci = space.index_of(space.encode(converse(m)));
    if (spectrum_gap(spec, sweep.spectra[ci]) > opts.tol)
      detail::note_violation(conv, code + ": not cospectral with its converse");

    // Equal real parts of all cycle weights <=> equal exponents up to sign.
    ++cyc.checked;
    const auto gm = gain_matrix(m, k);
    std::vector<int> realpart_key;
    for (const auto& c : cycles) {
      int w = cycle_weight(gm, c);
      realpart_key.push_back(std::min(w, k.reduce(-w)));
    }
    auto [it, fresh] = class_by_realparts.emplace(realpart_key, i);
    if (!fresh && sweep.class_of[it->second] != sweep.class_of[i])
      detail::note_violation(cyc, code + ": same cycle real parts as " +
                                      to_string(space.code_at(it->second)) + " but not cospectral");

    if (connected && n > 0) {
      ++bal.checked;
      try {
        auto r = cospectral_to_underlying(m, k, opts.tol);
        if (auto* p = std::get_if<Partition>(&r.certificate); p && !satisfies_positive_partition(m, *p, k))
          detail::note_violation(bal, code + ": unit partition fails re-verification");
        if (auto* c = std::get_if<ConflictCycle>(&r.certificate);
            c && (c->residue == 0 || walk_residue(m, positive_rule(k), c->walk) != c->residue))
          detail::note_violation(bal, code + ": conflict cycle fails re-verification");
      } catch (const TheoremViolation& e) {
        detail::note_violation(bal, code + ": " + e.what());
      }
    } else {
      ++bal.skipped;
    }

    if (connected && m.size() > 0) {
      ++ext.checked;
      try {
        auto r = extremal_classification(m, k, opts.tol);
        bool numeric = std::abs(r.rho - delta) <= opts.tol;
        if (numeric != r.extremal())
          detail::note_violation(ext, code + ": rho = Delta is " + (numeric ? "true" : "false") +
                                          " but outcome is " + to_string(r.outcome));
        if (r.positive_partition && !satisfies_positive_partition(m, *r.positive_partition, k))
          detail::note_violation(ext, code + ": +Delta partition fails re-verification");
        if (r.negative_partition && !satisfies_negative_partition(m, *r.negative_partition, k))
          detail::note_violation(ext, code + ": -Delta partition fails re-verification");
        if (r.negative_double_partition &&
            !satisfies_double_partition(m, *r.negative_double_partition, k))
          detail::note_violation(ext, code + ": double partition fails re-verification");
      } catch (const TheoremViolation& e) {
        detail::note_violation(ext, code + ": " + e.what());
      }
    } else {
      ++ext.skipped;
    }

    if (k.value() % 2 == 1 && connected) {
      ++odd.checked;
      try {
        negative_implies_positive_check(m, k, opts.tol);
      } catch (const TheoremViolation& e) {
        detail::note_violation(odd, code + ": " + e.what());
      }
    } else {
      ++odd.skipped;
    }

    for (const auto& p : partitions) {
      if (!is_admissible(m, p, k).admissible) continue;
      ++sw.checked;
      const MixedGraph switched = three_way_switch(m, p, k);
      if (!verify_similarity(m, switched, p, k).similar)
        detail::note_violation(sw, code + ": similarity check failed");
      const std::size_t si = space.index_of(space.encode(switched));
      if (spectrum_gap(spec, sweep.spectra[si]) > opts.tol)
        detail::note_violation(sw, code + ": switching changed the spectrum");
    }

    ++zero.checked;
    bool all_zero = std::all_of(spec.values.begin(), spec.values.end(),
                                [&](double x) { return std::abs(x) <= opts.tol; });
    if (all_zero && m.size() > 0) detail::note_violation(zero, code + ": zero spectrum with edges");
  }

  report.checks = {radius, conv, cyc, bal, ext, odd, sw, zero};
  return report;
}

}  // namespace hermix
