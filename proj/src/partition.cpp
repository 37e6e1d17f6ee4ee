#include "oddperm/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oddperm/classes.hpp"
#include "oddperm/diagram.hpp"

namespace oddperm {

namespace {

void require_class_extremes(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("degree mismatch");
  if (odd_diagram(u) != odd_diagram(v))
    throw std::invalid_argument(u.to_string() + " and " + v.to_string() +
                                " have different odd diagrams");
  if (!is_class_minimum(u))
    throw std::invalid_argument(u.to_string() +
                                " is not the minimum of its odd diagram class");
  if (!is_class_maximum(v))
    throw std::invalid_argument(v.to_string() +
                                " is not the maximum of its odd diagram class");
}

std::string describe(const Permutation& u, const Permutation& v) {
  return "[" + u.to_string() + ", " + v.to_string() + "]";
}

}  // namespace

PartitionStep compute_step(const Permutation& u, const Permutation& v) {
  PartitionStep s;
  s.k = first_difference(u, v);
  s.a = u.position_of(s.k);
  s.b = v.position_of(s.k);
  if (!(s.a < s.b) || !(u(s.a) < u(s.b)))
    throw InvariantViolation("step of " + describe(u, v) +
                             " violates a < b and u(a) < u(b)");
  const int lo = u(s.a), hi = u(s.b);
  for (int i = s.a; i <= s.b; ++i)
    if (u(i) >= lo && u(i) <= hi) s.anchors.push_back(i);
  for (std::size_t i = 1; i < s.anchors.size(); ++i) {
    if ((s.anchors[i] - s.anchors[0]) % 2 != 0)
      throw InvariantViolation("anchors of " + describe(u, v) +
                               " differ in parity");
    if (u(s.anchors[i - 1]) >= u(s.anchors[i]))
      throw InvariantViolation("anchored subsequence of " + describe(u, v) +
                               " is not increasing");
  }
  return s;
}

PartitionStep anchors(const Permutation& u, const Permutation& v) {
  if (u == v)
    throw std::invalid_argument("singleton class " + u.to_string() +
                                " has no partition step");
  require_class_extremes(u, v);
  return compute_step(u, v);
}

int block_index(const Permutation& w, const PartitionStep& step) {
  const int pos = w.position_of(step.k);
  auto it = std::find(step.anchors.begin(), step.anchors.end(), pos);
  if (it == step.anchors.end())
    throw InvariantViolation("value " + std::to_string(step.k) + " of " +
                             w.to_string() + " sits at non-anchor position " +
                             std::to_string(pos));
  return static_cast<int>(it - step.anchors.begin()) + 1;
}

std::vector<Permutation> u_chain(const Permutation& u,
                                 const PartitionStep& step) {
  std::vector<Permutation> chain{u};
  for (int i = 0; i + 1 < step.m(); ++i)
    chain.push_back(chain.back().swap_positions(step.anchors[i],
                                                step.anchors[i + 1]));
  return chain;
}

std::vector<Permutation> v_chain(const Permutation& v,
                                 const PartitionStep& step) {
  std::vector<Permutation> chain(step.m());
  chain.back() = v;
  for (int i = step.m() - 2; i >= 0; --i)
    chain[i] =
        chain[i + 1].swap_positions(step.anchors[i], step.anchors[i + 1]);
  return chain;
}

Permutation phi(const Permutation& w, const PartitionStep& step, int i) {
  if (i < 1 || i >= step.m())
    throw std::invalid_argument("phi index " + std::to_string(i) +
                                " outside [1, m)");
  if (w.position_of(step.k) != step.anchors[i - 1])
    throw std::invalid_argument(w.to_string() + " is not in block " +
                                std::to_string(i));
  return w.swap_positions(step.anchors[i - 1], step.anchors[i]);
}

BlockDecomposition decompose(const Permutation& u, const Permutation& v) {
  BlockDecomposition out;
  out.step = anchors(u, v);
  const PartitionStep& step = out.step;
  const int m = step.m();
  out.u_chain = u_chain(u, step);
  out.v_chain = v_chain(v, step);

  const BruhatInterval whole = interval_elements(u, v);
  std::vector<std::vector<Permutation>> parts(m);
  for (const Permutation& w : whole.elements())
    parts[block_index(w, step) - 1].push_back(w);

  for (int i = 0; i < m; ++i) {
    BruhatInterval block = interval_elements(out.u_chain[i], out.v_chain[i]);
    if (block.elements() != parts[i])
      throw InvariantViolation("block " + std::to_string(i + 1) + " of " +
                               describe(u, v) + " is not the interval " +
                               describe(out.u_chain[i], out.v_chain[i]));
    if (parts[i].size() != parts[0].size())
      throw InvariantViolation("blocks of " + describe(u, v) +
                               " differ in size");
    out.blocks.push_back(std::move(block));
  }

  for (int i = 1; i < m; ++i) {
    std::vector<Permutation> image;
    image.reserve(parts[i - 1].size());
    for (const Permutation& w : parts[i - 1]) {
      Permutation x = phi(w, step, i);
      if (!covers(w, x))
        throw InvariantViolation("phi_" + std::to_string(i) + "(" +
                                 w.to_string() + ") does not cover it");
      image.push_back(x);
    }
    std::sort(image.begin(), image.end());
    if (image != parts[i])
      throw InvariantViolation("phi_" + std::to_string(i) +
                               " is not a bijection onto block " +
                               std::to_string(i + 1) + " of " + describe(u, v));
  }
  return out;
}

FactorizationResult factorize(const Permutation& u, const Permutation& v) {
  require_class_extremes(u, v);
  FactorizationResult result;
  const Diagram d = odd_diagram(u);
  Permutation cur = u;
  int last_k = 0;
  while (cur != v) {
    PartitionStep step = compute_step(cur, v);
    if (step.k <= last_k)
      throw InvariantViolation("first difference did not increase at " +
                               describe(cur, v));
    last_k = step.k;
    cur = u_chain(cur, step).back();
    if (odd_diagram(cur) != d)
      throw InvariantViolation("recursion left the odd diagram class at " +
                               cur.to_string());
    result.factor_lengths.push_back(step.m());
    result.steps.push_back(std::move(step));
  }
  result.product = expand_factors(result.factor_lengths);
  return result;
}

}  // namespace oddperm
