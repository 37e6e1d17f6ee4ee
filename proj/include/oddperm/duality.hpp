#ifndef ODDPERM_DUALITY_HPP
#define ODDPERM_DUALITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "oddperm/interval.hpp"
#include "oddperm/permutation.hpp"

namespace oddperm {

/// Two-level slice of an interval's Hasse diagram. Edges are
/// (left index, right index) pairs, sorted and unique.
struct BipartiteGraph {
  std::vector<Permutation> left;
  std::vector<Permutation> right;
  std::vector<std::pair<int, int>> edges;
};

/// Rank sizes of [e, w] satisfy #P_k <= #P_{l(w)-k} for all k <= l(w)/2.
bool top_heavy_check(const Permutation& w);

/// Whether the interval is isomorphic to its order dual. Palindromic rank
/// vector is checked first; then an anti-automorphism of the Hasse diagram
/// is searched for, matching rank r against rank (top - r).
bool is_self_dual(const BruhatInterval& interval);
bool is_self_dual(const HasseDiagram& hasse);

/// The covering graph between ranks 1 and 2 above the bottom, and between
/// ranks 1 and 2 below the top. Throws std::invalid_argument for rank < 2.
std::pair<BipartiteGraph, BipartiteGraph> boundary_bipartite_graphs(
    const BruhatInterval& interval);
std::pair<BipartiteGraph, BipartiteGraph> boundary_bipartite_graphs(
    const HasseDiagram& hasse);

/// Isomorphism of two bipartite graphs that keeps left on left.
bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

/// The two boundary graphs are isomorphic. Vacuously true below rank 2.
bool bipartite_criterion(const BruhatInterval& interval);
bool bipartite_criterion(const HasseDiagram& hasse);

struct CensusOptions {
  /// Required for n = 10.
  bool allow_long = false;
  int jobs = 0;
};

struct CensusResult {
  int n = 0;
  std::size_t classes = 0;
  std::size_t non_self_dual = 0;
  /// Extremes of every non-self-dual class, sorted.
  std::vector<std::pair<Permutation, Permutation>> non_self_dual_classes;
  /// Classes where self-duality and the bipartite criterion disagree.
  std::vector<std::pair<Permutation, Permutation>> criterion_disagreements;
};

/// Self-duality of every odd diagram class of S_n, 1 <= n <= 10. Classes are
/// checked in parallel; the result is independent of the thread count.
CensusResult run_census(int n, const CensusOptions& opts = {});
/// Single-threaded reference for run_census.
CensusResult run_census_serial(int n, bool allow_long = false);

/// Number of non-self-dual odd diagram classes of S_n.
std::size_t non_self_dual_census(int n, const CensusOptions& opts = {});

}  // namespace oddperm

#endif  // ODDPERM_DUALITY_HPP
