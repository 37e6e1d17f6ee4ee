#include "isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace oddperm::detail {

namespace {

// Refines the colouring of the disjoint union a ⊔ b until stable. Returns
// the final colours, a's vertices first.
std::vector<int> refine(const ColoredGraph& a, const ColoredGraph& b) {
  const int na = static_cast<int>(a.color.size());
  const int total = na + static_cast<int>(b.color.size());
  auto adj = [&](int v) -> const std::vector<int>& {
    return v < na ? a.adj[v] : b.adj[v - na];
  };
  auto offset = [&](int v) { return v < na ? 0 : na; };

  std::vector<int> color(total);
  for (int v = 0; v < total; ++v)
    color[v] = v < na ? a.color[v] : b.color[v - na];

  int classes = -1;
  std::vector<std::vector<int>> sig(total);
  std::vector<int> order(total);
  for (;;) {
    for (int v = 0; v < total; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      const int off = offset(v);
      for (int u : adj(v)) s.push_back(color[u + off]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> next(total);
    int id = 0;
    for (int i = 0; i < total; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      next[order[i]] = id;
    }
    const int now = total == 0 ? 0 : id + 1;
    color.swap(next);
    if (now == classes) break;
    classes = now;
  }
  return color;
}

bool adjacent(const ColoredGraph& g, int x, int y) {
  return std::binary_search(g.adj[x].begin(), g.adj[x].end(), y);
}

class Search {
 public:
  Search(const ColoredGraph& a, const ColoredGraph& b, std::vector<int> ca,
         std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const int n = static_cast<int>(ca_.size());
    map_.assign(n, -1);
    used_.assign(n, 0);
    parent_.assign(n, -1);
    build_order();
  }

  bool run() { return extend(0); }
  std::vector<int> mapping() const { return map_; }

 private:
  void build_order() {
    const int n = static_cast<int>(ca_.size());
    std::vector<int> class_size(2 * n + 1, 0);
    for (int c : ca_) ++class_size[c];
    std::vector<int> seeds(n);
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](int x, int y) {
      return class_size[ca_[x]] < class_size[ca_[y]];
    });
    std::vector<char> seen(n, 0);
    for (int s : seeds) {
      if (seen[s]) continue;
      seen[s] = 1;
      const std::size_t start = order_.size();
      order_.push_back(s);
      for (std::size_t h = start; h < order_.size(); ++h)
        for (int y : a_.adj[order_[h]])
          if (!seen[y]) {
            seen[y] = 1;
            parent_[y] = order_[h];
            order_.push_back(y);
          }
    }
  }

  bool consistent(int x, int c) const {
    int mapped = 0;
    for (int y : a_.adj[x]) {
      if (map_[y] < 0) continue;
      ++mapped;
      if (!adjacent(b_, c, map_[y])) return false;
    }
    int images = 0;
    for (int z : b_.adj[c]) images += used_[z];
    return mapped == images;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    auto attempt = [&](int c) {
      if (used_[c] || cb_[c] != ca_[x] || !consistent(x, c)) return false;
      map_[x] = c;
      used_[c] = 1;
      if (extend(depth + 1)) return true;
      map_[x] = -1;
      used_[c] = 0;
      return false;
    };
    if (parent_[x] >= 0) {
      for (int c : b_.adj[map_[parent_[x]]])
        if (attempt(c)) return true;
    } else {
      for (int c = 0; c < static_cast<int>(cb_.size()); ++c)
        if (attempt(c)) return true;
    }
    return false;
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::vector<int> ca_, cb_;
  std::vector<int> map_, used_, parent_, order_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a,
                                                 const ColoredGraph& b) {
  const std::size_t n = a.color.size();
  if (n != b.color.size()) return std::nullopt;
  std::size_t ea = 0, eb = 0;
  for (const auto& v : a.adj) ea += v.size();
  for (const auto& v : b.adj) eb += v.size();
  if (ea != eb) return std::nullopt;

  const std::vector<int> joint = refine(a, b);
  std::vector<int> ca(joint.begin(), joint.begin() + n);
  std::vector<int> cb(joint.begin() + n, joint.end());
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;

  Search search(a, b, std::move(ca), std::move(cb));
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

}  // namespace oddperm::detail
