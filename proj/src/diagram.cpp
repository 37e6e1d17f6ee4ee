#include "oddperm/diagram.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oddperm {

Diagram::Diagram(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 0 || n > kMaxDegree)
    throw std::invalid_argument("diagram size out of range");
}

void Diagram::insert(Box b) {
  if (b.row < 1 || b.row > n_ || b.col < 1 || b.col > n_)
    throw std::out_of_range("box outside the grid");
  rows_[b.row - 1] |= static_cast<std::uint16_t>(1u << (b.col - 1));
}

bool Diagram::contains(Box b) const {
  if (b.row < 1 || b.row > n_ || b.col < 1 || b.col > n_) return false;
  return (rows_[b.row - 1] >> (b.col - 1)) & 1u;
}

int Diagram::count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += std::popcount(rows_[i]);
  return c;
}

std::vector<Box> Diagram::boxes() const {
  std::vector<Box> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((rows_[i] >> j) & 1u) out.push_back({i + 1, j + 1});
  return out;
}

bool Diagram::is_subset_of(const Diagram& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (rows_[i] & ~other.rows_[i]) return false;
  return true;
}

std::size_t Diagram::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= rows_[i];
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

namespace {

// Shared scan: row i gets column j when w(i) > j and w^{-1}(j) > i; with
// `odd_only`, additionally i and w^{-1}(j) must differ in parity.
std::array<std::uint16_t, kMaxDegree> scan(const Permutation& w,
                                            bool odd_only) {
  const int n = w.degree();
  std::array<int, kMaxDegree> a{}, inv{};
  w.unpack(a);
  for (int i = 0; i < n; ++i) inv[a[i] - 1] = i;
  std::array<std::uint16_t, kMaxDegree> rows{};
  for (int i = 0; i < n; ++i) {
    std::uint16_t mask = 0;
    for (int j = 0; j + 1 < a[i]; ++j) {
      const int p = inv[j];
      if (p > i && (!odd_only || ((p - i) & 1)))
        mask |= static_cast<std::uint16_t>(1u << j);
    }
    rows[i] = mask;
  }
  return rows;
}

}  // namespace

Diagram rothe_diagram(const Permutation& w) {
  Diagram d(w.degree());
  d.rows_ = scan(w, false);
  return d;
}

Diagram odd_diagram(const Permutation& w) {
  Diagram d(w.degree());
  d.rows_ = scan(w, true);
  return d;
}

int odd_length(const Permutation& w) {
  const int n = w.degree();
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; j += 2)
      if (w(i) > w(j)) ++count;
  return count;
}

bool is_legal(const Permutation& u, const Transposition& t) {
  return odd_diagram(u) == odd_diagram(right_transpose(u, t));
}

bool satisfies_legality_criterion(const Permutation& u,
                                  const Transposition& t) {
  const int n = u.degree();
  const int i = t.i(), j = t.j();
  if (j > n) throw std::invalid_argument("transposition outside degree");
  if ((j - i) % 2 != 0) return false;
  const int m = std::min(u(i), u(j));
  const int M = std::max(u(i), u(j));
  for (int p = i + 1; p < j; p += 2)
    if (u(p) >= m) return false;
  for (int q = j + 1; q <= n; q += 2)
    if (u(q) >= m && u(q) <= M) return false;
  return true;
}

int first_difference(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("degree mismatch");
  for (int x = 1; x <= u.degree(); ++x)
    if (u.position_of(x) != v.position_of(x)) return x;
  throw std::invalid_argument("first_difference of equal permutations " +
                              u.to_string());
}

Permutation legal_move_toward(const Permutation& u, const Permutation& v) {
  const int k = first_difference(u, v);
  if (odd_diagram(u) != odd_diagram(v))
    throw std::invalid_argument("odd diagrams of " + u.to_string() + " and " +
                                v.to_string() + " differ");
  const int a = u.position_of(k);
  const int b = v.position_of(k);
  Permutation moved = u.swap_positions(a, b);
  if (odd_diagram(moved) != odd_diagram(u))
    throw InvariantViolation("legal move from " + u.to_string() + " toward " +
                             v.to_string() + " changed the odd diagram");
  return moved;
}

std::string render_diagram(const Permutation& w) {
  const int n = w.degree();
  const Diagram rothe = rothe_diagram(w);
  const Diagram odd = odd_diagram(w);
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (odd.contains({i, j}))
        out += '*';
      else if (rothe.contains({i, j}))
        out += '#';
      else
        out += '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace oddperm
