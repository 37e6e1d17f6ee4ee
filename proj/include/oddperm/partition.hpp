#ifndef ODDPERM_PARTITION_HPP
#define ODDPERM_PARTITION_HPP

#include <vector>

#include "oddperm/interval.hpp"
#include "oddperm/permutation.hpp"
#include "oddperm/polynomial.hpp"

namespace oddperm {

/// One splitting step of an interval [u, v] inside an odd diagram class.
///
/// k is the first value placed differently in u and v, a and b are its
/// positions in u and v, and `anchors` lists the positions between a and b
/// whose u-values lie in [u(a), u(b)]. Every member of [u, v] keeps k at
/// exactly one anchor, which splits the interval into m equal blocks.
struct PartitionStep {
  int k = 0;
  int a = 0;
  int b = 0;
  std::vector<int> anchors;

  int m() const { return static_cast<int>(anchors.size()); }
};

struct BlockDecomposition {
  PartitionStep step;
  std::vector<BruhatInterval> blocks;  // block i = [u_chain[i], v_chain[i]]
  std::vector<Permutation> u_chain;
  std::vector<Permutation> v_chain;
};

struct FactorizationResult {
  /// Term counts of the factors 1 + t + ... + t^{m-1}, in recursion order.
  std::vector<int> factor_lengths;
  IntPolynomial product;
  /// The step taken at each level of the recursion.
  std::vector<PartitionStep> steps;
};

/// The step for a class [u, v]. Requires u != v sharing an odd diagram, u the
/// class minimum and v the class maximum; throws std::invalid_argument
/// otherwise.
PartitionStep anchors(const Permutation& u, const Permutation& v);

/// The same construction without the class-extreme precondition; used on
/// the shrinking intervals [u_m, v] of the factorization recursion. Throws
/// InvariantViolation if the structural guarantees of a step fail.
PartitionStep compute_step(const Permutation& u, const Permutation& v);

/// The i (1-based) with w^{-1}(k) = a_i. Throws InvariantViolation when k
/// sits at a non-anchor position.
int block_index(const Permutation& w, const PartitionStep& step);

/// u_1 = u, u_{i+1} = u_i (a_i a_{i+1}).
std::vector<Permutation> u_chain(const Permutation& u, const PartitionStep& step);
/// v_m = v, v_i = v_{i+1} (a_i a_{i+1}).
std::vector<Permutation> v_chain(const Permutation& v, const PartitionStep& step);

/// w (a_i a_{i+1}) for w in block i, 1 <= i < m.
Permutation phi(const Permutation& w, const PartitionStep& step, int i);

/// Splits the class [u, v] into its m blocks and checks each one is the
/// interval [u_i, v_i], that the blocks are the phi-images of each other, and
/// that phi raises every element by a cover.
BlockDecomposition decompose(const Permutation& u, const Permutation& v);

/// Repeatedly splits off the factor 1 + ... + t^{m-1} and recurses on
/// [u_m, v] until the interval is a single point. Requires u and v to be the
/// extremes of one class (u == v allowed for singleton classes).
FactorizationResult factorize(const Permutation& u, const Permutation& v);

}  // namespace oddperm

#endif  // ODDPERM_PARTITION_HPP
