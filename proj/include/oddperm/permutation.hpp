#ifndef ODDPERM_PERMUTATION_HPP
#define ODDPERM_PERMUTATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oddperm {

// Largest supported degree. A word is packed four bits per entry into one
// 64-bit code, so sixteen is the hard ceiling.
inline constexpr int kMaxDegree = 16;

// Raised when an internal consistency check fails, i.e. enumeration
// contradicts a result the library relies on. Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An element of S_n in one-line notation.
///
/// Positions and values are 1-indexed on the public surface. The word is
/// packed with position 1 in the most significant nibble, so comparing codes
/// of equal-degree permutations is lexicographic comparison of the words.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a bijection on [1, values.size()].
  explicit Permutation(std::span<const int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);
  /// The longest element n(n-1)...1.
  static Permutation longest(int n);
  /// Accepts "24513" (degree <= 9) or "10,3,1,..." (any degree).
  static Permutation parse(std::string_view text);
  /// Reconstructs a permutation from its packed code. No validation.
  static Permutation from_code(int n, std::uint64_t code) {
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    p.code_ = code;
    return p;
  }

  int degree() const { return n_; }

  /// w(i), 1-indexed.
  int operator()(int i) const {
    return static_cast<int>((code_ >> shift(i)) & 0xF) + 1;
  }
  /// w^{-1}(value).
  int position_of(int value) const;

  std::vector<int> values() const;
  /// Writes w(1..n) into `out` (1-indexed values, 0-indexed slots).
  void unpack(std::array<int, kMaxDegree>& out) const;
  static Permutation pack(std::span<const int> values_one_based);

  std::uint64_t code() const { return code_; }
  std::string to_string() const;

  /// Swaps the entries at positions i and j (the right action of (i j)).
  Permutation swap_positions(int i, int j) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  static int shift(int i) { return 4 * (kMaxDegree - i); }

  std::uint64_t code_ = 0;
  std::uint8_t n_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t x = p.code() ^ (static_cast<std::uint64_t>(p.degree()) << 1);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

/// A transposition (i j) with 1 <= i < j.
class Transposition {
 public:
  Transposition(int i, int j);
  int i() const { return i_; }
  int j() const { return j_; }
  friend bool operator==(const Transposition&, const Transposition&) = default;

 private:
  int i_;
  int j_;
};

Permutation make_permutation(std::span<const int> values);

Permutation inverse(const Permutation& w);

/// w·(i j): swaps the entries in positions i and j.
Permutation right_transpose(const Permutation& w, const Transposition& t);
/// (i j)·w: swaps the values i and j.
Permutation left_transpose(const Permutation& w, const Transposition& t);

/// Number of inversions.
int length(const Permutation& w);

/// Bruhat comparison by the sorted-prefix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// True iff v covers u in the Bruhat order.
bool covers(const Permutation& u, const Permutation& v);

/// Right descents {i : w(i) > w(i+1)}, ascending.
std::vector<int> descent_set(const Permutation& w);

/// True iff no subsequence of w is order-isomorphic to `pattern`.
bool avoids(const Permutation& w, const Permutation& pattern);

/// Every upward cover w·(i j) of w, in order of (i, j).
std::vector<Permutation> upper_covers(const Permutation& w);
/// Every downward cover of w, in order of (i, j).
std::vector<Permutation> lower_covers(const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Calls `fn` on every permutation of S_n whose first entry is `first`, in
/// lexicographic order.
void for_each_with_first(int n, int first,
                         const std::function<void(const Permutation&)>& fn);

}  // namespace oddperm

#endif  // ODDPERM_PERMUTATION_HPP
