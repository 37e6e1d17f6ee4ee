#ifndef ODDPERM_INTERVAL_HPP
#define ODDPERM_INTERVAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "oddperm/permutation.hpp"

namespace oddperm {

/// Histogram of ranks: counts[r] = #{w : length(w) = length(bottom) + r}.
struct RankVector {
  std::vector<int> counts;
  friend bool operator==(const RankVector&, const RankVector&) = default;
};

/// A Bruhat interval [bottom, top] with its full, sorted element list.
/// Immutable once built.
class BruhatInterval {
 public:
  const Permutation& bottom() const { return bottom_; }
  const Permutation& top() const { return top_; }
  int degree() const { return bottom_.degree(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& w) const;
  /// length(top) - length(bottom).
  int rank() const;

  /// Wraps an already known member list of [bottom, top] without
  /// re-enumerating it. The caller vouches for the contents; odd diagram
  /// classes use this after their interval property has been established.
  static BruhatInterval from_members(const Permutation& bottom,
                                     const Permutation& top,
                                     std::vector<Permutation> members);

 private:
  BruhatInterval(Permutation bottom, Permutation top,
                 std::vector<Permutation> elements);
  friend BruhatInterval interval_elements(const Permutation&,
                                          const Permutation&);

  Permutation bottom_;
  Permutation top_;
  std::vector<Permutation> elements_;
};

/// All w with u <= w <= v, found by walking upward covers from u and keeping
/// those still below v. Throws std::invalid_argument if u is not <= v.
BruhatInterval interval_elements(const Permutation& u, const Permutation& v);

RankVector rank_vector(const BruhatInterval& interval);

/// Every covering pair (x, y), x below y, in order of x then y.
std::vector<std::pair<Permutation, Permutation>> hasse_edges(
    const BruhatInterval& interval);

/// Index-based Hasse diagram used by the duality searches. Nodes follow the
/// interval's element order.
struct HasseDiagram {
  std::vector<Permutation> nodes;
  std::vector<int> rank;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;
  int top_rank = 0;

  std::size_t edge_count() const;
};

HasseDiagram build_hasse(const BruhatInterval& interval);

/// Graphviz rendering: nodes labelled by one-line words, grouped by rank,
/// drawn bottom to top with undirected edges.
std::string to_dot(const BruhatInterval& interval);

}  // namespace oddperm

#endif  // ODDPERM_INTERVAL_HPP
