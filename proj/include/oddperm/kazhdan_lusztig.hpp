#ifndef ODDPERM_KAZHDAN_LUSZTIG_HPP
#define ODDPERM_KAZHDAN_LUSZTIG_HPP

#include <cstdint>
#include <unordered_map>

#include "oddperm/interval.hpp"
#include "oddperm/permutation.hpp"
#include "oddperm/polynomial.hpp"

namespace oddperm {

/// Rank generating function t^{-l(u)} Σ_{u<=w<=v} t^{l(w)}.
IntPolynomial poincare(const Permutation& u, const Permutation& v);
IntPolynomial poincare(const BruhatInterval& interval);

namespace detail {
struct PairKey {
  std::uint64_t x;
  std::uint64_t y;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::uint64_t h = k.x * 0x9e3779b97f4a7c15ULL;
    h ^= k.y + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};
}  // namespace detail

/// Memoized R-polynomials R_{x,y}(q) for a single degree. Not thread-safe;
/// give each worker its own table.
class RPolynomialTable {
 public:
  const IntPolynomial& operator()(const Permutation& x, const Permutation& y);

  /// Unfolds the top level of the recursion with the given right descent s
  /// of y (1-based position), then continues with the memoized table.
  IntPolynomial with_descent(const Permutation& x, const Permutation& y, int s);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  IntPolynomial unfold(const Permutation& x, const Permutation& y, int s);

  std::unordered_map<detail::PairKey, IntPolynomial, detail::PairKeyHash> memo_;
  int degree_ = 0;
};

/// Kazhdan–Lusztig polynomials by the defining relation: for fixed y and
/// descending length of x, q^{l(y)-l(x)} P_{x,y}(1/q) - P_{x,y}(q) equals the
/// sum of R_{x,z} P_{z,y} over x < z <= y, and the degree bound isolates
/// P_{x,y} as the negated low half of that sum. Memoizes R and every P_{z,y}
/// it computes. Not thread-safe.
class KazhdanLusztigTable {
 public:
  IntPolynomial operator()(const Permutation& x, const Permutation& y);

  /// P_{z,top} for every z of the interval, aligned with elements().
  std::vector<IntPolynomial> column(const BruhatInterval& interval);

  RPolynomialTable& r_table() { return r_; }

 private:
  const IntPolynomial* cached(const Permutation& z, const Permutation& y) const;

  RPolynomialTable r_;
  std::unordered_map<detail::PairKey, IntPolynomial, detail::PairKeyHash> memo_;
};

IntPolynomial r_polynomial(const Permutation& x, const Permutation& y);
IntPolynomial kl_polynomial(const Permutation& x, const Permutation& y);

/// Every w in [x, y] has exactly l(y) - l(w) reflections t (acting on the
/// left) with w < tw <= y. Throws std::invalid_argument if x is not <= y.
bool carrell_condition(const Permutation& x, const Permutation& y);

}  // namespace oddperm

#endif  // ODDPERM_KAZHDAN_LUSZTIG_HPP
