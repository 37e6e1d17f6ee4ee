// Colour-preserving isomorphism search for small undirected graphs.
#ifndef ODDPERM_SRC_ISOMORPHISM_HPP
#define ODDPERM_SRC_ISOMORPHISM_HPP

#include <optional>
#include <vector>

namespace oddperm::detail {

struct ColoredGraph {
  std::vector<int> color;
  std::vector<std::vector<int>> adj;  // sorted, symmetric, no loops
};

/// A bijection f with color(b, f(x)) == color(a, x) and x ~ y iff f(x) ~ f(y),
/// or nullopt if none exists. Joint colour refinement prunes first; the
/// remaining ambiguity is resolved by backtracking.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a,
                                                 const ColoredGraph& b);

}  // namespace oddperm::detail

#endif  // ODDPERM_SRC_ISOMORPHISM_HPP
