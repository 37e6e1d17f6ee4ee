#include "oddperm/classes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "parallel.hpp"

namespace oddperm {

namespace {

using ClassMap = std::unordered_map<Diagram, std::vector<Permutation>, DiagramHash>;

void check_guard(int n, bool allow_large) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("n must lie in [1, " +
                                std::to_string(kMaxDegree) + "]");
  if (n > kGuardedDegree && !allow_large)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the guarded range; pass an explicit "
                                "override to enumerate it");
}

// Picks extremes by length and cross-checks them against every member.
OddDiagramClass finish_class(Diagram d, std::vector<Permutation> members) {
  OddDiagramClass c{d, std::move(members), {}, {}};
  int lo = -1, hi = -1;
  for (const Permutation& w : c.members) {
    const int l = length(w);
    if (lo < 0 || l < lo) lo = l, c.min_elem = w;
    if (hi < 0 || l > hi) hi = l, c.max_elem = w;
  }
  for (const Permutation& w : c.members)
    if (!bruhat_leq(c.min_elem, w) || !bruhat_leq(w, c.max_elem))
      throw InvariantViolation("class member " + w.to_string() +
                               " is not between " + c.min_elem.to_string() +
                               " and " + c.max_elem.to_string());
  return c;
}

std::vector<OddDiagramClass> collect(std::vector<ClassMap>& shards) {
  // shards are ordered by first entry, so appending keeps members sorted
  ClassMap merged;
  for (ClassMap& shard : shards) {
    for (auto& [d, members] : shard) {
      auto& dst = merged[d];
      if (dst.empty())
        dst = std::move(members);
      else
        dst.insert(dst.end(), members.begin(), members.end());
    }
    ClassMap().swap(shard);
  }
  std::vector<std::pair<Diagram, std::vector<Permutation>>> raw;
  raw.reserve(merged.size());
  for (auto& [d, members] : merged) raw.emplace_back(d, std::move(members));
  merged.clear();

  std::vector<OddDiagramClass> classes(raw.size());
  detail::parallel_for(
      static_cast<long>(raw.size()),
      [&](long i) {
        classes[i] = finish_class(raw[i].first, std::move(raw[i].second));
      },
      256);
  std::sort(classes.begin(), classes.end(),
            [](const OddDiagramClass& a, const OddDiagramClass& b) {
              return a.min_elem < b.min_elem;
            });
  return classes;
}

}  // namespace

std::vector<OddDiagramClass> classes_of_sn_serial(int n, bool allow_large) {
  check_guard(n, allow_large);
  std::vector<ClassMap> shards(1);
  for (int first = 1; first <= n; ++first)
    for_each_with_first(n, first, [&](const Permutation& w) {
      shards[0][odd_diagram(w)].push_back(w);
    });
  std::vector<OddDiagramClass> out;
  for (auto& [d, members] : shards[0])
    out.push_back(finish_class(d, std::move(members)));
  std::sort(out.begin(), out.end(),
            [](const OddDiagramClass& a, const OddDiagramClass& b) {
              return a.min_elem < b.min_elem;
            });
  return out;
}

std::vector<OddDiagramClass> classes_of_sn(int n,
                                           const EnumerationOptions& opts) {
  check_guard(n, opts.allow_large);
  detail::ThreadCount threads(opts.jobs);
  std::vector<ClassMap> shards(n);
  detail::parallel_for(n, [&](long shard) {
    const int first = static_cast<int>(shard) + 1;
    for_each_with_first(n, first, [&](const Permutation& w) {
      shards[shard][odd_diagram(w)].push_back(w);
    });
  });
  return collect(shards);
}

std::pair<Permutation, Permutation> class_extremes(const OddDiagramClass& c) {
  const BruhatInterval interval = interval_elements(c.min_elem, c.max_elem);
  std::vector<Permutation> sorted = c.members;
  std::sort(sorted.begin(), sorted.end());
  if (interval.elements() != sorted)
    throw InvariantViolation("class with minimum " + c.min_elem.to_string() +
                             " is not the Bruhat interval [" +
                             c.min_elem.to_string() + ", " +
                             c.max_elem.to_string() + "]");
  return {c.min_elem, c.max_elem};
}

OddDiagramClass class_of(const Permutation& w) {
  const Diagram d = odd_diagram(w);
  std::unordered_set<Permutation, PermutationHash> seen{w};
  std::vector<Permutation> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Permutation cur = order[head];
    for (const auto& next : {upper_covers(cur), lower_covers(cur)})
      for (const Permutation& x : next) {
        if (seen.contains(x) || odd_diagram(x) != d) continue;
        seen.insert(x);
        order.push_back(x);
      }
  }
  std::sort(order.begin(), order.end());
  return finish_class(d, std::move(order));
}

namespace {

bool has_legal_move(const Permutation& w, bool downward) {
  const int n = w.degree();
  const Diagram d = odd_diagram(w);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if ((w(i) > w(j)) != downward) continue;
      if (odd_diagram(w.swap_positions(i, j)) == d) return true;
    }
  return false;
}

}  // namespace

bool is_class_minimum(const Permutation& w) { return !has_legal_move(w, true); }

bool is_class_maximum(const Permutation& w) { return !has_legal_move(w, false); }

}  // namespace oddperm
