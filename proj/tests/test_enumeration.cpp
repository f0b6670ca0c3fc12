#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "hermix/enumeration.hpp"
#include "oracles.hpp"

namespace hermix {
namespace {

SweepOptions single_thread() {
  SweepOptions o;
  o.threads = 1;
  return o;
}

void expect_clean(const SweepReport& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.violations, 0u) << c.name << ": " << (c.samples.empty() ? "" : c.samples.front());
  }
}

TEST(Orientations, Counts) {
  EXPECT_EQ(orientations(families::path(2)).size(), 3u);
  EXPECT_EQ(orientations(families::path(3)).size(), 9u);
  EXPECT_EQ(orientations(families::cycle(3)).size(), 27u);
  EXPECT_EQ(orientations(MixedGraph(3)).size(), 1u);
}

TEST(Orientations, EachMixedGraphExactlyOnce) {
  auto base = families::cycle(4);
  auto space = orientations(base);
  std::set<MixedGraph> seen;
  std::size_t i = 0;
  for (const auto& g : space) {
    EXPECT_TRUE(same_underlying(g, base));
    EXPECT_EQ(space.index_of(space.encode(g)), i++);
    seen.insert(g);
  }
  EXPECT_EQ(seen.size(), 81u);
  // First edge is most significant; U < F < B.
  EXPECT_EQ(to_string(space.code_at(0)), "UUUU");
  EXPECT_EQ(to_string(space.code_at(1)), "UUUF");
  EXPECT_EQ(to_string(space.code_at(27)), "FUUU");
  EXPECT_EQ(to_string(space.code_at(80)), "BBBB");
}

TEST(Orientations, CapExceeded) {
  try {
    orientations(families::complete(6));  // 15 edges
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.m(), 15u);
    EXPECT_EQ(e.cap(), 12u);
  }
  EXPECT_EQ(orientations(families::complete(6), 15).size(), 14'348'907u);
}

TEST(CospectralClasses, TreesFormOneClass) {
  for (int kk = 3; kk <= 8; ++kk) {
    for (const auto& t : {families::path(4), families::star(4), parse_graph("n 6\ne 0 1\ne 1 2\ne 1 3\ne 3 4\ne 3 5")}) {
      auto r = cospectral_classes(t, RootParameter(kk), single_thread());
      EXPECT_EQ(r.class_count, 1u) << kk;
      EXPECT_EQ(r.class_sizes, std::vector<std::size_t>{r.orientation_count});
    }
  }
}

TEST(CospectralClasses, TriangleK3HasTwoClasses) {
  auto r = cospectral_classes(families::cycle(3), RootParameter(3), single_thread());
  EXPECT_EQ(r.class_count, 2u);
  EXPECT_EQ(std::accumulate(r.class_sizes.begin(), r.class_sizes.end(), std::size_t{0}), 27u);
  // Class 0 contains the undirected triangle (code UUU, index 0).
  EXPECT_EQ(r.rows[0].class_id, 0u);
  EXPECT_NEAR(r.class_spectra[0][0], 2.0, 1e-10);
}

TEST(CospectralClasses, C6K4SeparatesDirectedCycle) {
  auto base = families::cycle(6);
  auto space = orientations(base);
  auto r = cospectral_classes(base, RootParameter(4), single_thread());
  std::size_t und = space.index_of(space.encode(base));
  std::size_t dir = space.index_of(space.encode(families::directed_cycle(6)));
  EXPECT_NE(r.rows[und].class_id, r.rows[dir].class_id);

  auto r6 = cospectral_classes(base, RootParameter(6), single_thread());
  EXPECT_EQ(r6.rows[und].class_id, r6.rows[dir].class_id);
}

TEST(CospectralClasses, ClosedUnderConverse) {
  auto base = families::complete(4);
  auto space = orientations(base);
  auto r = cospectral_classes(base, RootParameter(5), single_thread());
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::size_t c = space.index_of(space.encode(converse(space[i])));
    EXPECT_EQ(r.rows[i].class_id, r.rows[c].class_id);
  }
}

TEST(CospectralClasses, ThreadCountDoesNotChangeResult) {
  auto base = parse_graph("n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ne 0 2\ne 2 4");
  SweepOptions many;
  many.threads = 4;
  auto a = cospectral_classes(base, RootParameter(5), single_thread());
  auto b = cospectral_classes(base, RootParameter(5), many);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  EXPECT_EQ(a.class_sizes, b.class_sizes);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].class_id, b.rows[i].class_id);
    EXPECT_EQ(a.rows[i].rho, b.rows[i].rho);
  }
}

TEST(VerifyTheorems, TriangleAllK) {
  for (int kk = 3; kk <= 6; ++kk) {
    auto r = verify_theorems(families::cycle(3), RootParameter(kk), single_thread());
    EXPECT_EQ(r.orientation_count, 27u);
    ASSERT_EQ(r.checks.size(), 8u);
    expect_clean(r);
    EXPECT_GT(r.check("switching_similarity")->checked, 0u);
    if (kk % 2 == 0) {
      EXPECT_EQ(r.check("odd_k_corollary")->checked, 0u);
    }
  }
}

TEST(VerifyTheorems, K4K3) {
  auto r = verify_theorems(families::complete(4), RootParameter(3));
  EXPECT_EQ(r.orientation_count, 729u);
  expect_clean(r);
  EXPECT_EQ(r.check("extremal_characterization")->checked, 729u);
}

TEST(VerifyTheorems, P4OneClass) {
  for (int kk = 3; kk <= 8; ++kk) {
    auto r = verify_theorems(families::path(4), RootParameter(kk), single_thread());
    EXPECT_EQ(r.class_count, 1u);
    expect_clean(r);
  }
}

TEST(VerifyTheorems, SmallGraphMatrix) {
  const std::vector<MixedGraph> bases{
      families::cycle(4), families::cycle(5), families::star(3), families::complete_bipartite(2, 3),
      parse_graph("n 4\ne 0 1\ne 1 2\ne 2 0\ne 2 3"),
      MixedGraph(3)};
  for (const auto& base : bases)
    for (int kk = 3; kk <= 7; ++kk) expect_clean(verify_theorems(base, RootParameter(kk)));
}

TEST(VerifyTheorems, SampledPartitionsRecordSeed) {
  SweepOptions o;
  o.exhaustive_partition_limit = 10;
  o.sampled_partitions = 50;
  o.seed = 7;
  auto r = verify_theorems(families::cycle(4), RootParameter(4), o);
  EXPECT_EQ(r.seed, 7u);
  expect_clean(r);
  EXPECT_GT(r.check("switching_similarity")->checked, 0u);
}

}  // namespace
}  // namespace hermix
