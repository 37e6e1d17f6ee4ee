#include "oddperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "oddperm/classes.hpp"
#include "oddperm/diagram.hpp"
#include "oddperm/duality.hpp"
#include "oddperm/interval.hpp"
#include "oddperm/kazhdan_lusztig.hpp"
#include "oddperm/partition.hpp"
#include "parallel.hpp"

namespace oddperm {

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.failed == 0; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["schema"] = 1;
  out["n"] = n;
  out["jobs"] = jobs;
  out["long"] = long_run;
  out["wall_time"] = wall_time;
  out["ok"] = ok();
  out["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    out["checks"].push_back({{"name", c.name},
                             {"scope", c.scope},
                             {"degree", c.degree},
                             {"passed", c.passed},
                             {"failed", c.failed},
                             {"findings_total", c.findings_total},
                             {"findings", c.findings}});
  }
  return out;
}

namespace {

using nlohmann::json;

// Per-item verdict gathered by the parallel loops. A finding may accompany a
// pass (probes) or a failure (counterexamples).
struct Outcome {
  bool ok = true;
  json finding;
};

void note(CheckResult& r, json finding) {
  ++r.findings_total;
  if (r.findings.size() < kMaxFindings) r.findings.push_back(std::move(finding));
}

template <class Fn>
void tally(CheckResult& r, long count, Fn&& fn, int chunk = 8) {
  std::vector<Outcome> out(count);
  detail::parallel_for(count, [&](long i) { out[i] = fn(i); }, chunk);
  for (Outcome& o : out) {
    if (o.ok)
      ++r.passed;
    else
      ++r.failed;
    if (!o.finding.is_null()) note(r, std::move(o.finding));
  }
}

Outcome failure(json finding) { return {false, std::move(finding)}; }

const IntPolynomial kOne = IntPolynomial::constant(1);

// Non-self-dual class counts for small n, used as the expected census.
std::optional<std::size_t> known_non_self_dual(int n) {
  if (n >= 1 && n <= 8) return 0;
  if (n == 9) return 8;
  if (n == 10) return 118;
  return std::nullopt;
}

struct Verdict {
  bool self_dual = true;
  bool criterion = true;
  bool palindromic = true;
};

class Context {
 public:
  Context(int n, const VerifyOptions& opts) : n_(n), opts_(opts), rng_(opts.seed) {}

  int n() const { return n_; }
  bool long_run() const { return opts_.long_run; }
  std::mt19937_64& rng() { return rng_; }

  int capped(int normal, int extended) const {
    return std::min(n_, opts_.long_run ? extended : normal);
  }

  const std::vector<OddDiagramClass>& classes() {
    if (!classes_)
      classes_ = classes_of_sn(n_, {.allow_large = false, .jobs = opts_.jobs});
    return *classes_;
  }

  const std::vector<Verdict>& verdicts() {
    if (!verdicts_) {
      const auto& cs = classes();
      std::vector<Verdict> v(cs.size());
      detail::parallel_for(
          static_cast<long>(cs.size()),
          [&](long i) {
            if (cs[i].size() == 1) return;
            const BruhatInterval interval = cs[i].as_interval();
            const HasseDiagram h = build_hasse(interval);
            v[i] = {is_self_dual(h), bipartite_criterion(h),
                    is_palindromic(poincare(interval))};
          },
          16);
      verdicts_ = std::move(v);
    }
    return *verdicts_;
  }

  const std::vector<Permutation>& perms(int d) {
    auto it = perms_.find(d);
    if (it == perms_.end()) it = perms_.emplace(d, all_permutations(d)).first;
    return it->second;
  }

  Permutation random_perm(int d) {
    std::vector<int> vals(d);
    std::iota(vals.begin(), vals.end(), 1);
    std::shuffle(vals.begin(), vals.end(), rng_);
    return make_permutation(vals);
  }

  // A random w <= v reached by a random walk down the covers of v.
  Permutation random_below(const Permutation& v) {
    Permutation w = v;
    const int steps = std::uniform_int_distribution<int>(0, length(v))(rng_);
    for (int s = 0; s < steps; ++s) {
      const auto down = lower_covers(w);
      if (down.empty()) break;
      w = down[std::uniform_int_distribution<std::size_t>(0, down.size() - 1)(rng_)];
    }
    return w;
  }

 private:
  int n_;
  const VerifyOptions& opts_;
  std::mt19937_64 rng_;
  std::optional<std::vector<OddDiagramClass>> classes_;
  std::optional<std::vector<Verdict>> verdicts_;
  std::map<int, std::vector<Permutation>> perms_;
};

json pair_json(const Permutation& u, const Permutation& v) {
  return {{"u", u.to_string()}, {"v", v.to_string()}};
}

json class_json(const OddDiagramClass& c) {
  return {{"min", c.min_elem.to_string()}, {"max", c.max_elem.to_string()}};
}

// ---------------------------------------------------------------- order --

// bruhat_leq agrees with reachability along upper_covers, and covers raise
// length by exactly one.
void check_bruhat(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(6, 7);
  const auto& all = ctx.perms(r.degree);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));

  tally(r, static_cast<long>(all.size()), [&](long ui) -> Outcome {
    const Permutation& u = all[ui];
    std::vector<char> reach(all.size(), 0);
    std::vector<int> stack{static_cast<int>(ui)};
    reach[ui] = 1;
    while (!stack.empty()) {
      const Permutation w = all[stack.back()];
      stack.pop_back();
      for (const Permutation& c : upper_covers(w)) {
        if (length(c) != length(w) + 1 || !covers(w, c))
          return failure({{"cover", pair_json(w, c)}});
        const int ci = index.at(c);
        if (!reach[ci]) reach[ci] = 1, stack.push_back(ci);
      }
    }
    for (std::size_t vi = 0; vi < all.size(); ++vi)
      if (static_cast<bool>(reach[vi]) != bruhat_leq(u, all[vi]))
        return failure(pair_json(u, all[vi]));
    return {};
  });
}

// interval_elements against a filter over the whole group, plus gradedness.
void check_bfs(Context& ctx, CheckResult& r) {
  r.scope = "sampled";
  r.degree = ctx.capped(7, 8);
  const int d = r.degree;
  const int samples = d <= 7 ? 500 : 200;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (int s = 0; s < samples; ++s) {
    const Permutation v = ctx.random_perm(d);
    // Every fourth pair is unconstrained, so incomparable pairs show up too.
    pairs.emplace_back(s % 4 == 3 ? ctx.random_perm(d) : ctx.random_below(v), v);
  }
  const auto& all = ctx.perms(d);

  tally(r, samples, [&](long i) -> Outcome {
    const auto& [u, v] = pairs[i];
    std::vector<Permutation> brute;
    for (const Permutation& w : all)
      if (bruhat_leq(u, w) && bruhat_leq(w, v)) brute.push_back(w);
    std::sort(brute.begin(), brute.end());
    if (!bruhat_leq(u, v)) {
      try {
        interval_elements(u, v);
      } catch (const std::invalid_argument&) {
        return brute.empty() ? Outcome{} : failure(pair_json(u, v));
      }
      return failure(pair_json(u, v));
    }
    const BruhatInterval interval = interval_elements(u, v);
    if (interval.elements() != brute) return failure(pair_json(u, v));
    for (const Permutation& w : brute) {
      const auto up = upper_covers(w);
      const auto down = lower_covers(w);
      const bool has_up = std::any_of(up.begin(), up.end(),
                                      [&](const Permutation& c) { return interval.contains(c); });
      const bool has_down = std::any_of(down.begin(), down.end(),
                                        [&](const Permutation& c) { return interval.contains(c); });
      if ((w != v && !has_up) || (w != u && !has_down))
        return failure({{"interval", pair_json(u, v)}, {"ungraded_at", w.to_string()}});
    }
    return {};
  });
}

// ----------------------------------------------------- KL / R polynomials --

// R_{x,y} does not depend on the descent chosen, vanishes off the order, and
// has degree l(y) - l(x) on it.
void check_rpoly(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(5, 6);
  const auto& all = ctx.perms(r.degree);
  RPolynomialTable table;
  for (const Permutation& y : all) {
    const auto descents = descent_set(y);
    for (const Permutation& x : all) {
      const IntPolynomial& base = table(x, y);
      bool ok = bruhat_leq(x, y) ? base.degree() == length(y) - length(x)
                                 : base.is_zero();
      if (x == y) ok = ok && base == kOne;
      for (int s : descents) ok = ok && table.with_descent(x, y, s) == base;
      if (ok) {
        ++r.passed;
      } else {
        ++r.failed;
        note(r, pair_json(x, y));
      }
    }
  }
}

// P_{x,y} has constant term 1, nonnegative coefficients and the degree
// bound, for every x <= y.
void check_kl_properties(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(5, 6);
  const auto& all = ctx.perms(r.degree);
  const Permutation e = Permutation::identity(r.degree);
  std::vector<std::vector<Outcome>> per_y(all.size());
  detail::parallel_for(static_cast<long>(all.size()), [&](long yi) {
    const Permutation& y = all[yi];
    KazhdanLusztigTable kl;
    const BruhatInterval below = interval_elements(e, y);
    const auto col = kl.column(below);
    auto& out = per_y[yi];
    for (std::size_t i = 0; i < col.size(); ++i) {
      const Permutation& z = below.elements()[i];
      const IntPolynomial& p = col[i];
      const int gap = length(y) - length(z);
      bool ok = p.coeff(0) == 1;
      for (std::int64_t c : p.coeffs()) ok = ok && c >= 0;
      ok = ok && (z == y ? p == kOne : 2 * p.degree() <= gap - 1);
      out.push_back(ok ? Outcome{} : failure({{"x", z.to_string()}, {"y", y.to_string()},
                                              {"p", p.to_string('q')}}));
    }
  });
  for (auto& out : per_y)
    for (Outcome& o : out) {
      o.ok ? ++r.passed : ++r.failed;
      if (!o.finding.is_null()) note(r, std::move(o.finding));
    }
}

// Carrell's condition, P_{x,y} = 1 and P_{w,y} = 1 on all of [x, y] coincide.
void check_carrell(Context& ctx, CheckResult& r) {
  r.scope = "sampled";
  r.degree = ctx.capped(5, 6);
  const int d = r.degree;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (int s = 0; s < 200; ++s) {
    const Permutation y = ctx.random_perm(d);
    pairs.emplace_back(ctx.random_below(y), y);
  }
  tally(r, static_cast<long>(pairs.size()), [&](long i) -> Outcome {
    const auto& [x, y] = pairs[i];
    KazhdanLusztigTable kl;
    const BruhatInterval interval = interval_elements(x, y);
    const auto col = kl.column(interval);
    const bool all_one =
        std::all_of(col.begin(), col.end(), [](const IntPolynomial& p) { return p == kOne; });
    const bool bottom_one = col.front() == kOne;
    const bool carrell = carrell_condition(x, y);
    if (carrell == all_one && bottom_one == all_one) return {};
    return failure({{"pair", pair_json(x, y)},
                    {"carrell", carrell},
                    {"p_bottom_is_one", bottom_one},
                    {"p_all_one", all_one}});
  });
}

// Pattern avoidance, palindromic Poincare polynomial, P_{e,w} = 1 and
// Carrell's condition on [e, w] agree for every w.
void check_smoothness(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(6, 6);
  const int d = r.degree;
  const auto& all = ctx.perms(d);
  const Permutation e = Permutation::identity(d);
  const Permutation p3412{3, 4, 1, 2};
  const Permutation p4231{4, 2, 3, 1};
  KazhdanLusztigTable kl;
  for (const Permutation& w : all) {
    const bool avoid = d < 4 || (avoids(w, p3412) && avoids(w, p4231));
    const bool palin = is_palindromic(poincare(e, w));
    const bool kl_one = kl(e, w) == kOne;
    const bool carrell = carrell_condition(e, w);
    if (avoid == palin && palin == kl_one && kl_one == carrell) {
      ++r.passed;
    } else {
      ++r.failed;
      note(r, {{"w", w.to_string()},
               {"avoids", avoid},
               {"palindromic", palin},
               {"kl_is_one", kl_one},
               {"carrell", carrell}});
    }
  }
}

void check_topheavy(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(6, 7);
  const auto& all = ctx.perms(r.degree);
  tally(r, static_cast<long>(all.size()), [&](long i) -> Outcome {
    if (top_heavy_check(all[i])) return {};
    return failure({{"w", all[i].to_string()}});
  });
}

// ------------------------------------------------------------- legality --

// Scans every (u, (i j)) and reports the pairs `pick` selects.
template <class Pick>
void scan_transpositions(Context& ctx, CheckResult& r, bool failing, Pick&& pick) {
  r.scope = "exhaustive";
  r.degree = ctx.capped(8, 9);
  const int d = r.degree;
  const auto& all = ctx.perms(d);
  std::vector<std::vector<json>> hits(all.size());
  detail::parallel_for(
      static_cast<long>(all.size()),
      [&](long ui) {
        const Permutation& u = all[ui];
        for (int i = 1; i <= d; ++i)
          for (int j = i + 1; j <= d; ++j) {
            const Transposition t(i, j);
            if (pick(is_legal(u, t), satisfies_legality_criterion(u, t)))
              hits[ui].push_back({{"u", u.to_string()}, {"i", i}, {"j", j}});
          }
      },
      64);
  const std::size_t pairs = all.size() * static_cast<std::size_t>(d * (d - 1) / 2);
  std::size_t bad = 0;
  for (auto& h : hits)
    for (json& f : h) ++bad, note(r, std::move(f));
  r.failed = failing ? bad : 0;
  r.passed = pairs - r.failed;
}

// The three-part criterion is sufficient for legality.
void check_legality(Context& ctx, CheckResult& r) {
  scan_transpositions(ctx, r, true, [](bool legal, bool crit) { return crit && !legal; });
}

// Probe: legal transpositions the criterion misses.
void check_legality_necessity(Context& ctx, CheckResult& r) {
  scan_transpositions(ctx, r, false, [](bool legal, bool crit) { return legal && !crit; });
}

// -------------------------------------------------------------- classes --

void check_interval(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    try {
      const auto [lo, hi] = class_extremes(cs[i]);
      if (lo == cs[i].min_elem && hi == cs[i].max_elem) return {};
    } catch (const InvariantViolation& ex) {
      return failure({{"class", class_json(cs[i])}, {"error", ex.what()}});
    }
    return failure({{"class", class_json(cs[i])}});
  });
}

// The extremes are exactly the members without a length-lowering (raising)
// legal transposition.
void check_class_minimum(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    for (const Permutation& w : cs[i].members) {
      if (is_class_minimum(w) != (w == cs[i].min_elem) ||
          is_class_maximum(w) != (w == cs[i].max_elem))
        return failure({{"class", class_json(cs[i])}, {"w", w.to_string()}});
    }
    return {};
  });
}

// Each value sits at positions of one parity across a class.
void check_parity(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const int n = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    const Permutation& ref = cs[i].min_elem;
    for (const Permutation& w : cs[i].members)
      for (int x = 1; x <= n; ++x)
        if ((w.position_of(x) - ref.position_of(x)) % 2 != 0)
          return failure({{"class", class_json(cs[i])}, {"w", w.to_string()}, {"value", x}});
    return {};
  });
}

void check_partition(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    const OddDiagramClass& c = cs[i];
    if (c.size() == 1) return {};
    try {
      const BlockDecomposition dec = decompose(c.min_elem, c.max_elem);
      const auto& a = dec.step.anchors;
      bool ok = dec.step.m() >= 2 && std::is_sorted(a.begin(), a.end()) &&
                std::adjacent_find(a.begin(), a.end()) == a.end() &&
                dec.u_chain.front() == c.min_elem && dec.v_chain.back() == c.max_elem &&
                dec.blocks.size() * dec.blocks.front().size() == c.size();
      if (ok) return {};
    } catch (const InvariantViolation& ex) {
      return failure({{"class", class_json(c)}, {"error", ex.what()}});
    }
    return failure({{"class", class_json(c)}});
  });
}

void check_factorization(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    const OddDiagramClass& c = cs[i];
    try {
      const FactorizationResult f = factorize(c.min_elem, c.max_elem);
      const IntPolynomial p = poincare(c.as_interval());
      std::size_t product = 1;
      int rank = 0;
      for (int m : f.factor_lengths) product *= m, rank += m - 1;
      if (f.product == p && is_palindromic(p) && product == c.size() &&
          rank == length(c.max_elem) - length(c.min_elem))
        return {};
      return failure({{"class", class_json(c)},
                      {"factor_lengths", f.factor_lengths},
                      {"poincare", p.to_string()}});
    } catch (const InvariantViolation& ex) {
      return failure({{"class", class_json(c)}, {"error", ex.what()}});
    }
  });
}

void check_kl(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  tally(r, static_cast<long>(cs.size()), [&](long i) -> Outcome {
    const OddDiagramClass& c = cs[i];
    if (c.size() == 1) return {};
    KazhdanLusztigTable kl;
    const IntPolynomial p = kl(c.min_elem, c.max_elem);
    if (p == kOne) return {};
    return failure({{"class", class_json(c)}, {"p", p.to_string('q')}});
  });
}

// ------------------------------------------------------------- duality --

void check_self_duality(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& v = ctx.verdicts();
  std::size_t non_self_dual = 0;
  for (const Verdict& x : v) {
    if (!x.self_dual) ++non_self_dual;
    // Self-dual forces a palindromic rank vector.
    if (x.self_dual && !x.palindromic) ++r.failed;
  }
  const auto expected = known_non_self_dual(ctx.n());
  if (expected && *expected != non_self_dual) {
    ++r.failed;
    note(r, {{"expected_non_self_dual", *expected}, {"observed", non_self_dual}});
  }
  r.passed = v.size() - std::min(r.failed, v.size());
}

// Probe: classes where the boundary bipartite criterion and self-duality
// disagree.
void check_bipartite_probe(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  const auto& v = ctx.verdicts();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ++r.passed;
    if (v[i].self_dual != v[i].criterion)
      note(r, {{"class", class_json(cs[i])},
               {"self_dual", v[i].self_dual},
               {"bipartite_criterion", v[i].criterion}});
  }
}

// Probe: palindromic classes that are not self-dual.
void check_duality_converse(Context& ctx, CheckResult& r) {
  r.scope = "exhaustive";
  r.degree = ctx.n();
  const auto& cs = ctx.classes();
  const auto& v = ctx.verdicts();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ++r.passed;
    if (v[i].palindromic && !v[i].self_dual) note(r, class_json(cs[i]));
  }
}

using CheckFn = void (*)(Context&, CheckResult&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"bruhat", check_bruhat},
      {"bfs", check_bfs},
      {"rpoly", check_rpoly},
      {"kl_properties", check_kl_properties},
      {"carrell", check_carrell},
      {"smoothness", check_smoothness},
      {"topheavy", check_topheavy},
      {"legality", check_legality},
      {"legality_necessity", check_legality_necessity},
      {"interval", check_interval},
      {"class_minimum", check_class_minimum},
      {"parity", check_parity},
      {"partition", check_partition},
      {"factorization", check_factorization},
      {"kl", check_kl},
      {"self_duality", check_self_duality},
      {"bipartite_probe", check_bipartite_probe},
      {"duality_converse", check_duality_converse},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_verification(int n, std::span<const std::string> checks,
                                    const VerifyOptions& opts) {
  if (n < 1 || n > kGuardedDegree)
    throw std::invalid_argument("verify needs 1 <= n <= " + std::to_string(kGuardedDegree));
  if (n == kGuardedDegree && !opts.long_run)
    throw std::invalid_argument("verify at n = " + std::to_string(n) +
                                " is long-running; enable it explicitly");
  std::vector<CheckFn> selected;
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) {
    const bool wanted = checks.empty() ||
                        std::find(checks.begin(), checks.end(), name) != checks.end();
    if (wanted) selected.push_back(fn), names.push_back(name);
  }
  for (const std::string& c : checks)
    if (std::find(names.begin(), names.end(), c) == names.end())
      throw std::invalid_argument("unknown check: " + c);

  const auto start = std::chrono::steady_clock::now();
  detail::ThreadCount threads(opts.jobs);
  VerificationReport report;
  report.n = n;
  report.jobs = opts.jobs;
  report.long_run = opts.long_run;
  Context ctx(n, opts);
  for (std::size_t i = 0; i < selected.size(); ++i) {
    CheckResult r;
    r.name = names[i];
    selected[i](ctx, r);
    report.checks.push_back(std::move(r));
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oddperm
