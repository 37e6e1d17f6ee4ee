#ifndef ODDPERM_DIAGRAM_HPP
#define ODDPERM_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oddperm/permutation.hpp"

namespace oddperm {

/// A box in matrix coordinates: row i, column j, both 1-indexed.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A set of boxes in an n×n grid, stored as one column bitmask per row so
/// iteration is row-major sorted and equality/hash are a few word compares.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n);

  int size_n() const { return n_; }
  void insert(Box b);
  bool contains(Box b) const;
  int count() const;
  bool empty() const { return count() == 0; }
  /// Boxes sorted by (row, col).
  std::vector<Box> boxes() const;
  bool is_subset_of(const Diagram& other) const;
  /// Column mask of row i (bit j-1 set iff (i, j) is a box).
  std::uint32_t row_mask(int i) const { return rows_[i - 1]; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxDegree> rows_{};
  std::uint8_t n_ = 0;

  friend Diagram odd_diagram(const Permutation& w);
  friend Diagram rothe_diagram(const Permutation& w);
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept { return d.hash(); }
};

/// D(w) = {(i, j) : w(i) > j, i < w^{-1}(j)}.
Diagram rothe_diagram(const Permutation& w);

/// The boxes of D(w) whose row and w^{-1}(column) have opposite parity.
Diagram odd_diagram(const Permutation& w);

/// Number of inversions at positions of opposite parity.
int odd_length(const Permutation& w);

/// Definitional: (i j) is legal for u iff it leaves the odd diagram unchanged.
bool is_legal(const Permutation& u, const Transposition& t);

/// The three-part sufficient condition for legality: equal parity of i and
/// j; u(p) < m at p = i+1, i+3, ..., j-1; u(q) outside [m, M] at
/// q = j+1, j+3, ... (up to n), where m, M are min/max of u(i), u(j).
bool satisfies_legality_criterion(const Permutation& u, const Transposition& t);

/// The least value whose positions differ in u and v. Throws if u == v.
int first_difference(const Permutation& u, const Permutation& v);

/// One legal move from u toward v inside their common odd diagram class:
/// swaps the positions of k = first_difference(u, v) in u and in v.
Permutation legal_move_toward(const Permutation& u, const Permutation& v);

/// ASCII grid: `*` odd-diagram box, `#` Rothe box that is not odd, `.`
/// otherwise. One line per row.
std::string render_diagram(const Permutation& w);

}  // namespace oddperm

#endif  // ODDPERM_DIAGRAM_HPP
