#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oddperm/classes.hpp"
#include "oddperm/duality.hpp"

using namespace oddperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Permutation kBigU = Permutation::parse("654172839");
const Permutation kBigV = Permutation::parse("958172634");

// The same poset with its nodes listed in another order.
HasseDiagram relabel(const HasseDiagram& h, const std::vector<int>& perm) {
  const std::size_t n = h.nodes.size();
  HasseDiagram out;
  out.top_rank = h.top_rank;
  out.nodes.resize(n);
  out.rank.resize(n);
  out.up.resize(n);
  out.down.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int j = perm[i];
    out.nodes[j] = h.nodes[i];
    out.rank[j] = h.rank[i];
    for (int k : h.up[i]) out.up[j].push_back(perm[k]);
    for (int k : h.down[i]) out.down[j].push_back(perm[k]);
  }
  for (auto& v : out.up) std::sort(v.begin(), v.end());
  for (auto& v : out.down) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

TEST(TopHeavy, Examples) {
  EXPECT_TRUE(top_heavy_check(Permutation::identity(4)));
  EXPECT_TRUE(top_heavy_check(P("312")));
  for (const auto& w : all_permutations(5)) EXPECT_TRUE(top_heavy_check(w)) << w.to_string();
}

TEST(SelfDual, Examples) {
  EXPECT_TRUE(is_self_dual(interval_elements(P("2413"), P("2413"))));
  EXPECT_TRUE(is_self_dual(interval_elements(P("123"), P("321"))));
  EXPECT_TRUE(is_self_dual(interval_elements(P("5431627"), P("7461523"))));
  EXPECT_FALSE(is_self_dual(class_of(kBigU).as_interval()));
  // Not rank-symmetric, so not self-dual.
  EXPECT_FALSE(is_self_dual(interval_elements(P("1234"), P("3412"))));
}

TEST(SelfDual, EveryClassThroughSevenIsSelfDual) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : classes_of_sn(n))
      EXPECT_TRUE(is_self_dual(c.as_interval())) << c.min_elem.to_string();
}

// Relabeling the nodes of a Hasse diagram cannot change the answer.
TEST(SelfDualProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  std::vector<BruhatInterval> cases;
  cases.push_back(class_of(kBigU).as_interval());
  cases.push_back(interval_elements(P("5431627"), P("7461523")));
  cases.push_back(interval_elements(P("1234"), P("3412")));
  cases.push_back(interval_elements(P("12345"), P("53412")));
  cases.push_back(interval_elements(P("123456"), P("351624")));
  for (const auto& interval : cases) {
    const HasseDiagram h = build_hasse(interval);
    const bool expected = is_self_dual(h);
    std::vector<int> perm(h.nodes.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(is_self_dual(relabel(h, perm)), expected);
      EXPECT_EQ(bipartite_criterion(relabel(h, perm)), bipartite_criterion(h));
    }
  }
}

TEST(Bipartite, BoundaryGraphShapes) {
  const auto [bottom, top] =
      boundary_bipartite_graphs(interval_elements(P("5431627"), P("7461523")));
  EXPECT_EQ(bottom.left.size(), 3u);
  EXPECT_EQ(bottom.right.size(), 5u);
  EXPECT_EQ(top.left.size(), 3u);
  EXPECT_EQ(top.right.size(), 5u);
  EXPECT_EQ(bottom.edges.size(), top.edges.size());

  // Full S_3: both graphs are K_{2,2}.
  const auto [b3, t3] = boundary_bipartite_graphs(interval_elements(P("123"), P("321")));
  EXPECT_EQ(b3.left.size(), 2u);
  EXPECT_EQ(b3.right.size(), 2u);
  EXPECT_EQ(b3.edges.size(), 4u);
  EXPECT_EQ(t3.edges.size(), 4u);

  EXPECT_THROW(boundary_bipartite_graphs(interval_elements(P("213"), P("312"))),
               std::invalid_argument);
}

TEST(Bipartite, Criterion) {
  EXPECT_TRUE(bipartite_criterion(interval_elements(P("213"), P("312"))));
  EXPECT_TRUE(bipartite_criterion(interval_elements(P("321"), P("321"))));
  EXPECT_TRUE(bipartite_criterion(interval_elements(P("123"), P("321"))));
  EXPECT_FALSE(bipartite_criterion(class_of(kBigU).as_interval()));
}

TEST(Bipartite, IsomorphismKeepsSides) {
  BipartiteGraph a, b;
  a.left = {P("12"), P("21")};
  a.right = {P("12")};
  a.edges = {{0, 0}, {1, 0}};
  b.left = {P("12")};
  b.right = {P("12"), P("21")};
  b.edges = {{0, 0}, {0, 1}};
  EXPECT_FALSE(bipartite_isomorphic(a, b));
  EXPECT_TRUE(bipartite_isomorphic(a, a));
}

TEST(Census, SmallDegrees) {
  for (int n = 1; n <= 7; ++n) {
    const CensusResult r = run_census(n);
    EXPECT_EQ(r.non_self_dual, 0u) << n;
    EXPECT_TRUE(r.criterion_disagreements.empty());
  }
  EXPECT_EQ(non_self_dual_census(5), 0u);
  EXPECT_THROW(run_census(0), std::invalid_argument);
  EXPECT_THROW(run_census(10), std::invalid_argument);
  EXPECT_THROW(run_census(11, {.allow_long = true}), std::invalid_argument);
}

TEST(CensusProperty, ParallelMatchesSerial) {
  const CensusResult serial = run_census_serial(7);
  for (int jobs : {1, 3}) {
    const CensusResult parallel = run_census(7, {.allow_long = false, .jobs = jobs});
    EXPECT_EQ(parallel.classes, serial.classes);
    EXPECT_EQ(parallel.non_self_dual, serial.non_self_dual);
    EXPECT_EQ(parallel.non_self_dual_classes, serial.non_self_dual_classes);
    EXPECT_EQ(parallel.criterion_disagreements, serial.criterion_disagreements);
  }
}
