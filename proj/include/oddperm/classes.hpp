#ifndef ODDPERM_CLASSES_HPP
#define ODDPERM_CLASSES_HPP

#include <utility>
#include <vector>

#include "oddperm/diagram.hpp"
#include "oddperm/interval.hpp"
#include "oddperm/permutation.hpp"

namespace oddperm {

/// Perm(D): every permutation of S_n whose odd diagram is D.
struct OddDiagramClass {
  Diagram diagram;
  std::vector<Permutation> members;  // lexicographic
  Permutation min_elem;
  Permutation max_elem;

  std::size_t size() const { return members.size(); }
  /// The class as a Bruhat interval, reusing the member list.
  BruhatInterval as_interval() const {
    return BruhatInterval::from_members(min_elem, max_elem, members);
  }
};

// Degrees above this need EnumerationOptions::allow_large.
inline constexpr int kGuardedDegree = 10;

struct EnumerationOptions {
  bool allow_large = false;
  /// Worker count; 0 keeps the OpenMP default.
  int jobs = 0;
};

/// All odd diagram classes of S_n, sorted by minimum element. Work is
/// sharded by first entry across OpenMP threads; the result does not depend
/// on the thread count.
std::vector<OddDiagramClass> classes_of_sn(int n,
                                           const EnumerationOptions& opts = {});

/// Single-threaded reference for classes_of_sn.
std::vector<OddDiagramClass> classes_of_sn_serial(int n,
                                                  bool allow_large = false);

/// Bruhat minimum and maximum of the class, after checking that the member
/// list is exactly the interval between them. Throws InvariantViolation
/// otherwise.
std::pair<Permutation, Permutation> class_extremes(const OddDiagramClass& c);

/// The class containing w, found by walking covers in both directions while
/// the odd diagram stays fixed.
OddDiagramClass class_of(const Permutation& w);

/// True iff no legal transposition of w lowers its length, i.e. w is the
/// minimum of its class.
bool is_class_minimum(const Permutation& w);
/// True iff no legal transposition of w raises its length.
bool is_class_maximum(const Permutation& w);

}  // namespace oddperm

#endif  // ODDPERM_CLASSES_HPP
