#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Word from_string(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  for (int x : w) s += static_cast<char>('0' + x);
  return s;
}

int inversions(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

Word inverse(const Word& w) {
  Word inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

std::set<std::pair<int, int>> rothe(const Word& w, bool odd_only) {
  const int n = static_cast<int>(w.size());
  const Word inv = inverse(w);
  std::set<std::pair<int, int>> boxes;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (w[i - 1] > j && i < inv[j - 1] && (!odd_only || (inv[j - 1] - i) % 2 != 0))
        boxes.emplace(i, j);
  return boxes;
}

Group::Group(int n) : n_(n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    index_[w] = static_cast<int>(words_.size());
    words_.push_back(w);
    length_.push_back(inversions(w));
  } while (std::next_permutation(w.begin(), w.end()));

  const std::size_t size = words_.size();
  leq_.assign(size, std::vector<char>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<int> stack{static_cast<int>(a)};
    leq_[a][a] = 1;
    while (!stack.empty()) {
      const Word cur = words_[stack.back()];
      stack.pop_back();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (cur[i] > cur[j]) continue;
          Word next = cur;
          std::swap(next[i], next[j]);
          const int k = index_.at(next);
          if (!leq_[a][k]) leq_[a][k] = 1, stack.push_back(k);
        }
    }
  }
}

std::vector<Word> Group::interval(const Word& u, const Word& v) const {
  std::vector<Word> out;
  const int ui = index(u), vi = index(v);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (leq_[ui][k] && leq_[k][vi]) out.push_back(words_[k]);
  return out;
}

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(Poly& acc, const Poly& p, int shift, long long scale) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += scale * p[i];
}

// s_i acting on values: swap i and i+1.
Word left_mult(const Word& w, int i) {
  Word out = w;
  for (int& x : out) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return out;
}

// s_i w < w iff i+1 appears before i.
bool left_descent(const Word& w, int i) {
  const Word inv = inverse(w);
  return inv[i] < inv[i - 1];
}

}  // namespace

Poly Group::kl(int x, int w) {
  if (!leq(x, w)) return {};
  if (x == w) return {1};
  if (auto it = kl_memo_.find({x, w}); it != kl_memo_.end()) return it->second;

  int s = 1;
  while (!left_descent(words_[w], s)) ++s;
  const int v = index(left_mult(words_[w], s));
  const int sx = index(left_mult(words_[x], s));
  const int c = left_descent(words_[x], s) ? 1 : 0;

  Poly result;
  add_shifted(result, kl(sx, v), 1 - c, 1);
  add_shifted(result, kl(x, v), c, 1);
  for (std::size_t z = 0; z < words_.size(); ++z) {
    const int zi = static_cast<int>(z);
    if (zi == v || !leq(zi, v) || !leq(x, zi) || !left_descent(words_[z], s)) continue;
    const int gap = length_[v] - length_[z];
    if (gap % 2 == 0) continue;
    const Poly pzv = kl(zi, v);
    const std::size_t mu_deg = static_cast<std::size_t>((gap - 1) / 2);
    const long long mu = mu_deg < pzv.size() ? pzv[mu_deg] : 0;
    if (mu == 0) continue;
    add_shifted(result, kl(x, zi), (length_[w] - length_[z]) / 2, -mu);
  }
  trim(result);
  kl_memo_[{x, w}] = result;
  return result;
}

std::vector<std::vector<Word>> odd_classes(int n) {
  std::map<std::set<std::pair<int, int>>, std::vector<Word>> groups;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    groups[rothe(w, true)].push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  std::vector<std::vector<Word>> out;
  for (auto& [diagram, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace oracle
