#include "oddperm/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace oddperm {

BruhatInterval::BruhatInterval(Permutation bottom, Permutation top,
                               std::vector<Permutation> elements)
    : bottom_(bottom), top_(top), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

BruhatInterval BruhatInterval::from_members(const Permutation& bottom,
                                            const Permutation& top,
                                            std::vector<Permutation> members) {
  return BruhatInterval(bottom, top, std::move(members));
}

bool BruhatInterval::contains(const Permutation& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w);
}

int BruhatInterval::rank() const { return length(top_) - length(bottom_); }

BruhatInterval interval_elements(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v))
    throw std::invalid_argument(u.to_string() + " is not below " +
                                v.to_string() + " in the Bruhat order");
  std::unordered_set<Permutation, PermutationHash> seen{u};
  std::vector<Permutation> order{u};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Permutation& w : upper_covers(order[head])) {
      if (seen.contains(w) || !bruhat_leq(w, v)) continue;
      seen.insert(w);
      order.push_back(w);
    }
  }
  return BruhatInterval(u, v, std::move(order));
}

RankVector rank_vector(const BruhatInterval& interval) {
  const int base = length(interval.bottom());
  RankVector rv;
  rv.counts.assign(interval.rank() + 1, 0);
  for (const Permutation& w : interval.elements()) {
    const int r = length(w) - base;
    if (r < 0 || r >= static_cast<int>(rv.counts.size()))
      throw InvariantViolation("element " + w.to_string() +
                               " outside the rank range of its interval");
    ++rv.counts[r];
  }
  return rv;
}

std::size_t HasseDiagram::edge_count() const {
  std::size_t e = 0;
  for (const auto& u : up) e += u.size();
  return e;
}

HasseDiagram build_hasse(const BruhatInterval& interval) {
  HasseDiagram h;
  h.nodes = interval.elements();
  const std::size_t n = h.nodes.size();
  std::unordered_map<Permutation, int, PermutationHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(h.nodes[i], static_cast<int>(i));
  const int base = length(interval.bottom());
  h.rank.resize(n);
  h.up.resize(n);
  h.down.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.rank[i] = length(h.nodes[i]) - base;
    for (const Permutation& w : upper_covers(h.nodes[i])) {
      auto it = index.find(w);
      if (it == index.end()) continue;
      h.up[i].push_back(it->second);
      h.down[it->second].push_back(static_cast<int>(i));
    }
  }
  for (auto& u : h.up) std::sort(u.begin(), u.end());
  for (auto& d : h.down) std::sort(d.begin(), d.end());
  h.top_rank = interval.rank();
  return h;
}

std::vector<std::pair<Permutation, Permutation>> hasse_edges(
    const BruhatInterval& interval) {
  const HasseDiagram h = build_hasse(interval);
  std::vector<std::pair<Permutation, Permutation>> edges;
  edges.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    for (int j : h.up[i]) edges.emplace_back(h.nodes[i], h.nodes[j]);
  return edges;
}

std::string to_dot(const BruhatInterval& interval) {
  const HasseDiagram h = build_hasse(interval);
  std::ostringstream os;
  os << "graph interval {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int r = 0; r <= h.top_rank; ++r) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
      if (h.rank[i] == r) os << " \"" << h.nodes[i].to_string() << "\";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    for (int j : h.up[i])
      os << "  \"" << h.nodes[i].to_string() << "\" -- \""
         << h.nodes[j].to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace oddperm
