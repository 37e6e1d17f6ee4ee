#include "oddperm/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace oddperm {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree must lie in [1, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(n));
}

void require_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("degree mismatch: " + u.to_string() + " vs " +
                                v.to_string());
}

}  // namespace

Permutation::Permutation(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  check_degree(n);
  std::uint32_t seen = 0;
  for (int x : values) {
    if (x < 1 || x > n)
      throw std::invalid_argument("entry " + std::to_string(x) +
                                  " outside [1, " + std::to_string(n) + "]");
    if (seen & (1u << (x - 1)))
      throw std::invalid_argument("entry " + std::to_string(x) + " repeated");
    seen |= 1u << (x - 1);
  }
  *this = pack(values);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::span<const int>(values.begin(), values.size())) {}

Permutation Permutation::pack(std::span<const int> values_one_based) {
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(values_one_based.size());
  for (std::size_t i = 0; i < values_one_based.size(); ++i)
    p.code_ |= static_cast<std::uint64_t>(values_one_based[i] - 1)
               << shift(static_cast<int>(i) + 1);
  return p;
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return pack(v);
}

Permutation Permutation::longest(int n) {
  check_degree(n);
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return pack(v);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("malformed permutation '" +
                                    std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed permutation '" +
                                    std::string(text) + "'");
      values.push_back(x);
      start = end + 1;
    }
  }
  if (values.empty())
    throw std::invalid_argument("empty permutation");
  return Permutation(values);
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i) == value) return i;
  throw std::out_of_range("value " + std::to_string(value) +
                          " not in permutation " + to_string());
}

std::vector<int> Permutation::values() const {
  std::vector<int> out(n_);
  for (int i = 1; i <= n_; ++i) out[i - 1] = (*this)(i);
  return out;
}

void Permutation::unpack(std::array<int, kMaxDegree>& out) const {
  for (int i = 1; i <= n_; ++i) out[i - 1] = (*this)(i);
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    if (n_ >= 10) {
      if (i > 1) s += ',';
      s += std::to_string((*this)(i));
    } else {
      s += static_cast<char>('0' + (*this)(i));
    }
  }
  return s;
}

Permutation Permutation::swap_positions(int i, int j) const {
  const std::uint64_t a = (code_ >> shift(i)) & 0xF;
  const std::uint64_t b = (code_ >> shift(j)) & 0xF;
  const std::uint64_t x = a ^ b;
  return from_code(n_, code_ ^ (x << shift(i)) ^ (x << shift(j)));
}

Transposition::Transposition(int i, int j) : i_(i), j_(j) {
  if (i < 1 || j <= i)
    throw std::invalid_argument("transposition needs 1 <= i < j, got (" +
                                std::to_string(i) + " " + std::to_string(j) +
                                ")");
}

Permutation make_permutation(std::span<const int> values) {
  return Permutation(values);
}

Permutation inverse(const Permutation& w) {
  const int n = w.degree();
  std::array<int, kMaxDegree> inv{};
  for (int i = 1; i <= n; ++i) inv[w(i) - 1] = i;
  return Permutation::pack(std::span<const int>(inv.data(), n));
}

Permutation right_transpose(const Permutation& w, const Transposition& t) {
  if (t.j() > w.degree())
    throw std::invalid_argument("transposition outside degree");
  return w.swap_positions(t.i(), t.j());
}

Permutation left_transpose(const Permutation& w, const Transposition& t) {
  if (t.j() > w.degree())
    throw std::invalid_argument("transposition outside degree");
  return w.swap_positions(w.position_of(t.i()), w.position_of(t.j()));
}

int length(const Permutation& w) {
  const int n = w.degree();
  int inv = 0;
  std::uint32_t seen = 0;
  for (int i = 1; i <= n; ++i) {
    const int x = w(i);
    // earlier entries greater than x
    inv += std::popcount(seen >> x);
    seen |= 1u << (x - 1);
  }
  return inv;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require_same_degree(u, v);
  const int n = u.degree();
  std::uint32_t mu = 0, mv = 0;
  for (int i = 1; i < n; ++i) {
    mu |= 1u << (u(i) - 1);
    mv |= 1u << (v(i) - 1);
    if (mu == mv) continue;
    // sorted prefixes compare entrywise iff every upper tail count of u is
    // bounded by that of v
    for (int c = 1; c < n; ++c)
      if (std::popcount(mu >> c) > std::popcount(mv >> c)) return false;
  }
  return true;
}

bool covers(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) return false;
  const int n = u.degree();
  int first = 0, second = 0, diffs = 0;
  for (int p = 1; p <= n; ++p) {
    if (u(p) != v(p)) {
      if (++diffs > 2) return false;
      (diffs == 1 ? first : second) = p;
    }
  }
  if (diffs != 2) return false;
  const int lo = u(first), hi = u(second);
  if (lo > hi) return false;
  for (int p = first + 1; p < second; ++p)
    if (u(p) > lo && u(p) < hi) return false;
  return true;
}

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.degree(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

bool avoids(const Permutation& w, const Permutation& pattern) {
  const int n = w.degree();
  const int k = pattern.degree();
  if (k > n) throw std::invalid_argument("pattern longer than word");
  std::array<int, kMaxDegree> word{}, pat{};
  w.unpack(word);
  pattern.unpack(pat);

  // idx holds the chosen positions (0-based), advanced like an odometer over
  // all k-subsets in lexicographic order
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k; ++b)
        if ((word[idx[a]] < word[idx[b]]) != (pat[a] < pat[b])) {
          iso = false;
          break;
        }
    if (iso) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return true;
}

std::vector<Permutation> upper_covers(const Permutation& w) {
  const int n = w.degree();
  std::array<int, kMaxDegree> a{};
  w.unpack(a);
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i) {
    // walking right from i, the covers are exactly the positions j whose
    // value is above a[i] and below every value above a[i] seen so far
    int ceiling = n + 1;
    for (int j = i + 1; j < n; ++j) {
      if (a[j] > a[i] && a[j] < ceiling) {
        out.push_back(w.swap_positions(i + 1, j + 1));
        ceiling = a[j];
      }
    }
  }
  return out;
}

std::vector<Permutation> lower_covers(const Permutation& w) {
  const int n = w.degree();
  std::array<int, kMaxDegree> a{};
  w.unpack(a);
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i) {
    int floor = 0;
    for (int j = i + 1; j < n; ++j) {
      if (a[j] < a[i] && a[j] > floor) {
        out.push_back(w.swap_positions(i + 1, j + 1));
        floor = a[j];
      }
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::pack(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void for_each_with_first(int n, int first,
                         const std::function<void(const Permutation&)>& fn) {
  check_degree(n);
  if (first < 1 || first > n)
    throw std::invalid_argument("first entry outside [1, n]");
  std::vector<int> v;
  v.reserve(n);
  v.push_back(first);
  for (int x = 1; x <= n; ++x)
    if (x != first) v.push_back(x);
  do {
    fn(Permutation::pack(v));
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

}  // namespace oddperm
