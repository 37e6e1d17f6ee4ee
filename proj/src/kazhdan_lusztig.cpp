#include "oddperm/kazhdan_lusztig.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oddperm {

IntPolynomial poincare(const BruhatInterval& interval) {
  const RankVector rv = rank_vector(interval);
  return IntPolynomial(std::vector<std::int64_t>(rv.counts.begin(), rv.counts.end()));
}

IntPolynomial poincare(const Permutation& u, const Permutation& v) {
  return poincare(interval_elements(u, v));
}

const IntPolynomial& RPolynomialTable::operator()(const Permutation& x,
                                                   const Permutation& y) {
  if (degree_ == 0) degree_ = y.degree();
  if (x.degree() != degree_ || y.degree() != degree_)
    throw std::invalid_argument("R-polynomial table is fixed to degree " +
                                std::to_string(degree_));
  const detail::PairKey key{x.code(), y.code()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  IntPolynomial r;
  if (x == y) {
    r = IntPolynomial::constant(1);
  } else if (bruhat_leq(x, y)) {
    int s = 1;
    while (y(s) < y(s + 1)) ++s;  // y != e, so a descent exists
    r = unfold(x, y, s);
  }
  return memo_.emplace(key, std::move(r)).first->second;
}

IntPolynomial RPolynomialTable::unfold(const Permutation& x,
                                       const Permutation& y, int s) {
  const Permutation ys = y.swap_positions(s, s + 1);
  const Permutation xs = x.swap_positions(s, s + 1);
  if (x(s) > x(s + 1)) return (*this)(xs, ys);
  // q R_{xs,ys} + (q - 1) R_{x,ys}
  IntPolynomial out = (*this)(xs, ys).shifted(1);
  out.add_product(IntPolynomial{-1, 1}, (*this)(x, ys));
  return out;
}

IntPolynomial RPolynomialTable::with_descent(const Permutation& x,
                                             const Permutation& y, int s) {
  if (s < 1 || s >= y.degree() || y(s) < y(s + 1))
    throw std::invalid_argument(std::to_string(s) + " is not a descent of " +
                                y.to_string());
  if (x == y) return IntPolynomial::constant(1);
  if (!bruhat_leq(x, y)) return {};
  return unfold(x, y, s);
}

const IntPolynomial* KazhdanLusztigTable::cached(const Permutation& z,
                                                 const Permutation& y) const {
  auto it = memo_.find({z.code(), y.code()});
  return it == memo_.end() ? nullptr : &it->second;
}

std::vector<IntPolynomial> KazhdanLusztigTable::column(
    const BruhatInterval& interval) {
  const auto& elems = interval.elements();
  const Permutation& y = interval.top();
  const int ly = length(y);
  const std::size_t n = elems.size();

  std::vector<int> len(n);
  for (std::size_t i = 0; i < n; ++i) len[i] = length(elems[i]);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return len[a] > len[b]; });

  std::vector<IntPolynomial> p(n);
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    const Permutation& z = elems[i];
    if (const IntPolynomial* hit = cached(z, y)) {
      p[i] = *hit;
      continue;
    }
    if (z == y) {
      p[i] = IntPolynomial::constant(1);
    } else {
      const int d = ly - len[i];
      IntPolynomial sum;
      // every strictly longer element has already been filled in
      for (std::size_t oj = 0; oj < oi; ++oj) {
        const std::size_t j = order[oj];
        if (len[j] == len[i]) continue;
        const IntPolynomial& r = r_(z, elems[j]);
        if (!r.is_zero()) sum.add_product(r, p[j]);
      }
      p[i] = -sum.truncated((d - 1) / 2);
      if (p[i].reflected(d) != p[i] + sum)
        throw InvariantViolation("Kazhdan-Lusztig relation fails for (" +
                                 z.to_string() + ", " + y.to_string() + ")");
    }
    memo_.emplace(detail::PairKey{z.code(), y.code()}, p[i]);
  }
  return p;
}

IntPolynomial KazhdanLusztigTable::operator()(const Permutation& x,
                                              const Permutation& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  if (x == y) return IntPolynomial::constant(1);
  if (!bruhat_leq(x, y)) return {};
  if (const IntPolynomial* hit = cached(x, y)) return *hit;
  const BruhatInterval interval = interval_elements(x, y);
  const auto col = column(interval);
  const auto& elems = interval.elements();
  const auto it = std::lower_bound(elems.begin(), elems.end(), x);
  return col[it - elems.begin()];
}

IntPolynomial r_polynomial(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch");
  RPolynomialTable table;
  return table(x, y);
}

IntPolynomial kl_polynomial(const Permutation& x, const Permutation& y) {
  KazhdanLusztigTable table;
  return table(x, y);
}

bool carrell_condition(const Permutation& x, const Permutation& y) {
  const BruhatInterval interval = interval_elements(x, y);
  const int n = y.degree();
  const int ly = length(y);
  for (const Permutation& w : interval.elements()) {
    std::array<int, kMaxDegree> pos{};
    for (int p = 1; p <= n; ++p) pos[w(p) - 1] = p;
    int count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        // (i j)w swaps the values i and j; it lies above w iff i precedes j
        if (pos[i - 1] > pos[j - 1]) continue;
        if (bruhat_leq(w.swap_positions(pos[i - 1], pos[j - 1]), y)) ++count;
      }
    if (count != ly - length(w)) return false;
  }
  return true;
}

}  // namespace oddperm
