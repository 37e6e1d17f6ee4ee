#include "oddperm/duality.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "isomorphism.hpp"
#include "oddperm/classes.hpp"
#include "oddperm/polynomial.hpp"
#include "parallel.hpp"

namespace oddperm {

bool top_heavy_check(const Permutation& w) {
  const RankVector rv =
      rank_vector(interval_elements(Permutation::identity(w.degree()), w));
  const int l = static_cast<int>(rv.counts.size()) - 1;
  for (int k = 0; 2 * k <= l; ++k)
    if (rv.counts[k] > rv.counts[l - k]) return false;
  return true;
}

bool is_self_dual(const HasseDiagram& hasse) {
  const std::size_t n = hasse.nodes.size();
  std::vector<std::int64_t> counts(hasse.top_rank + 1, 0);
  for (int r : hasse.rank) ++counts[r];
  if (!is_palindromic(IntPolynomial(counts))) return false;

  detail::ColoredGraph g, dual;
  g.color = hasse.rank;
  dual.color.resize(n);
  for (std::size_t i = 0; i < n; ++i) dual.color[i] = hasse.top_rank - hasse.rank[i];
  g.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& a = g.adj[i];
    a = hasse.up[i];
    a.insert(a.end(), hasse.down[i].begin(), hasse.down[i].end());
    std::sort(a.begin(), a.end());
  }
  dual.adj = g.adj;
  return detail::find_isomorphism(g, dual).has_value();
}

bool is_self_dual(const BruhatInterval& interval) {
  return is_self_dual(build_hasse(interval));
}

namespace {

// Covering graph between rank `near` (left) and rank `far` (right).
BipartiteGraph slice(const HasseDiagram& h, int near, int far) {
  BipartiteGraph g;
  std::unordered_map<int, int> left_index, right_index;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (h.rank[i] == near) {
      left_index[static_cast<int>(i)] = static_cast<int>(g.left.size());
      g.left.push_back(h.nodes[i]);
    } else if (h.rank[i] == far) {
      right_index[static_cast<int>(i)] = static_cast<int>(g.right.size());
      g.right.push_back(h.nodes[i]);
    }
  }
  const auto& towards = far > near ? h.up : h.down;
  for (const auto& [node, li] : left_index)
    for (int other : towards[node])
      if (auto it = right_index.find(other); it != right_index.end())
        g.edges.emplace_back(li, it->second);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

detail::ColoredGraph as_colored(const BipartiteGraph& g) {
  const int nl = static_cast<int>(g.left.size());
  detail::ColoredGraph c;
  c.color.assign(nl + g.right.size(), 1);
  std::fill(c.color.begin(), c.color.begin() + nl, 0);
  c.adj.resize(c.color.size());
  for (const auto& [l, r] : g.edges) {
    c.adj[l].push_back(nl + r);
    c.adj[nl + r].push_back(l);
  }
  for (auto& a : c.adj) std::sort(a.begin(), a.end());
  return c;
}

}  // namespace

std::pair<BipartiteGraph, BipartiteGraph> boundary_bipartite_graphs(
    const HasseDiagram& hasse) {
  if (hasse.top_rank < 2)
    throw std::invalid_argument(
        "boundary bipartite graphs need an interval of rank >= 2");
  return {slice(hasse, 1, 2),
          slice(hasse, hasse.top_rank - 1, hasse.top_rank - 2)};
}

std::pair<BipartiteGraph, BipartiteGraph> boundary_bipartite_graphs(
    const BruhatInterval& interval) {
  return boundary_bipartite_graphs(build_hasse(interval));
}

bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.left.size() != b.left.size() || a.right.size() != b.right.size() ||
      a.edges.size() != b.edges.size())
    return false;
  auto degrees = [](const BipartiteGraph& g) {
    std::vector<int> dl(g.left.size(), 0), dr(g.right.size(), 0);
    for (const auto& [l, r] : g.edges) ++dl[l], ++dr[r];
    std::sort(dl.begin(), dl.end());
    std::sort(dr.begin(), dr.end());
    return std::make_pair(dl, dr);
  };
  if (degrees(a) != degrees(b)) return false;
  return detail::find_isomorphism(as_colored(a), as_colored(b)).has_value();
}

bool bipartite_criterion(const HasseDiagram& hasse) {
  if (hasse.top_rank < 2) return true;
  const auto [bottom, top] = boundary_bipartite_graphs(hasse);
  return bipartite_isomorphic(bottom, top);
}

bool bipartite_criterion(const BruhatInterval& interval) {
  return bipartite_criterion(build_hasse(interval));
}

namespace {

void check_census_range(int n, bool allow_long) {
  if (n < 1 || n > kGuardedDegree)
    throw std::invalid_argument("census needs 1 <= n <= " +
                                std::to_string(kGuardedDegree));
  if (n == kGuardedDegree && !allow_long)
    throw std::invalid_argument("census at n = " + std::to_string(n) +
                                " is long-running; enable it explicitly");
}

struct ClassVerdict {
  bool self_dual = true;
  bool criterion = true;
};

ClassVerdict judge(const OddDiagramClass& c) {
  if (c.size() == 1) return {};
  const HasseDiagram h = build_hasse(c.as_interval());
  return {is_self_dual(h), bipartite_criterion(h)};
}

CensusResult tally(int n, const std::vector<OddDiagramClass>& classes,
                   const std::vector<ClassVerdict>& verdicts) {
  CensusResult r;
  r.n = n;
  r.classes = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto extremes = std::make_pair(classes[i].min_elem, classes[i].max_elem);
    if (!verdicts[i].self_dual) r.non_self_dual_classes.push_back(extremes);
    if (verdicts[i].self_dual != verdicts[i].criterion)
      r.criterion_disagreements.push_back(extremes);
  }
  r.non_self_dual = r.non_self_dual_classes.size();
  return r;
}

}  // namespace

CensusResult run_census(int n, const CensusOptions& opts) {
  check_census_range(n, opts.allow_long);
  detail::ThreadCount threads(opts.jobs);
  const auto classes = classes_of_sn(n, {.allow_large = false, .jobs = opts.jobs});
  std::vector<ClassVerdict> verdicts(classes.size());
  detail::parallel_for(
      static_cast<long>(classes.size()),
      [&](long i) { verdicts[i] = judge(classes[i]); }, 16);
  return tally(n, classes, verdicts);
}

CensusResult run_census_serial(int n, bool allow_long) {
  check_census_range(n, allow_long);
  const auto classes = classes_of_sn_serial(n);
  std::vector<ClassVerdict> verdicts;
  verdicts.reserve(classes.size());
  for (const auto& c : classes) verdicts.push_back(judge(c));
  return tally(n, classes, verdicts);
}

std::size_t non_self_dual_census(int n, const CensusOptions& opts) {
  return run_census(n, opts).non_self_dual;
}

}  // namespace oddperm
