#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "oddperm/classes.hpp"
#include "oddperm/diagram.hpp"
#include "oddperm/duality.hpp"
#include "oddperm/interval.hpp"
#include "oddperm/kazhdan_lusztig.hpp"
#include "oddperm/partition.hpp"
#include "oddperm/permutation.hpp"
#include "oddperm/report.hpp"
#include "oddperm/verify.hpp"

namespace oddperm::cli {
namespace {

// Bad input the user can fix; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int jobs = 0;
  std::string perm;
  std::vector<std::string> interval;
  std::string x, y;
  std::string dot_path;
  std::string out_path;
  std::string json_path;
  std::string checks;
  int n = 0;
  bool long_run = false;
  bool override_guard = false;
  bool no_kl = false;
  bool list = false;
  bool members = false;
};

Permutation parse_perm(const std::string& text) { return Permutation::parse(text); }

std::pair<Permutation, Permutation> parse_interval(const Options& o) {
  Permutation u = parse_perm(o.interval.at(0));
  Permutation v = parse_perm(o.interval.at(1));
  if (u.degree() != v.degree()) throw UsageError("interval endpoints differ in degree");
  return {u, v};
}

// n = 10 is long-running, anything above is opt-in and unbounded in cost.
void guard_degree(const Options& o) {
  if (o.n < 1 || o.n > kMaxDegree)
    throw UsageError("--n must lie in [1, " + std::to_string(kMaxDegree) + "]");
  if (o.n > kGuardedDegree && !o.override_guard)
    throw UsageError("n > " + std::to_string(kGuardedDegree) + " requires --override");
  if (o.n == kGuardedDegree && !o.long_run)
    throw UsageError("n = " + std::to_string(kGuardedDegree) + " requires --long");
}

std::string boxes_text(const Diagram& d) {
  std::string s = "{";
  bool first = true;
  for (const Box& b : d.boxes()) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
  }
  return s + "}";
}

// One-line notation with the given positions bracketed.
std::string marked(const Permutation& w, const std::set<int>& positions) {
  std::string s;
  const bool wide = w.degree() >= 10;
  for (int i = 1; i <= w.degree(); ++i) {
    if (wide && i > 1) s += ' ';
    const std::string entry = std::to_string(w(i));
    s += positions.count(i) ? "[" + entry + "]" : entry;
  }
  return s;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string counts_text(const RankVector& rv) {
  std::string s;
  for (std::size_t i = 0; i < rv.counts.size(); ++i)
    s += (i ? "," : "") + std::to_string(rv.counts[i]);
  return s;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const Permutation w = parse_perm(o.perm);
  out << "w: " << w.to_string() << "\n";
  out << "length: " << length(w) << ", odd length: " << odd_length(w) << "\n";
  out << "D(w): " << boxes_text(rothe_diagram(w)) << "\n";
  out << "D_o(w): " << boxes_text(odd_diagram(w)) << "\n";
  out << render_diagram(w);
  return kExitOk;
}

int cmd_class(const Options& o, std::ostream& out) {
  const Permutation w = parse_perm(o.perm);
  const OddDiagramClass c = class_of(w);
  out << "D_o: " << boxes_text(c.diagram) << "\n";
  out << "size: " << c.size() << "\n";
  out << "min: " << c.min_elem.to_string() << "\n";
  out << "max: " << c.max_elem.to_string() << "\n";
  out << "rank vector: [" << counts_text(rank_vector(c.as_interval())) << "]\n";
  if (o.members)
    for (const Permutation& m : c.members) out << "  " << m.to_string() << "\n";
  return kExitOk;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const auto [u, v] = parse_interval(o);
  const BruhatInterval interval = interval_elements(u, v);
  out << "rank vector: [" << counts_text(rank_vector(interval)) << "]\n";
  out << poincare(interval).to_string() << "\n";
  return kExitOk;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const auto [u, v] = parse_interval(o);
  const FactorizationResult f = factorize(u, v);
  out << "[" << join(f.factor_lengths) << "] = " << f.product.to_string() << "\n";
  return kExitOk;
}

int cmd_partition(const Options& o, std::ostream& out) {
  const auto [u, v] = parse_interval(o);
  const BlockDecomposition dec = decompose(u, v);
  const PartitionStep& s = dec.step;
  const std::set<int> anchor_set(s.anchors.begin(), s.anchors.end());
  out << "k = " << s.k << ", a = " << s.a << ", b = " << s.b << ", anchors = {"
      << join(s.anchors) << "}, m = " << s.m() << "\n";
  out << "u = " << marked(u, anchor_set) << "\n";
  for (int i = 0; i < s.m(); ++i) {
    const BruhatInterval& block = dec.blocks[i];
    out << "block " << i + 1 << ": [" << dec.u_chain[i].to_string() << ", "
        << dec.v_chain[i].to_string() << "], " << block.size() << " elements\n";
    for (const Permutation& w : block.elements())
      out << "  " << marked(w, {w.position_of(s.k)}) << "\n";
  }
  return kExitOk;
}

int cmd_kl(const Options& o, std::ostream& out) {
  out << kl_polynomial(parse_perm(o.x), parse_perm(o.y)).to_string('q') << "\n";
  return kExitOk;
}

int cmd_rpoly(const Options& o, std::ostream& out) {
  out << r_polynomial(parse_perm(o.x), parse_perm(o.y)).to_string('q') << "\n";
  return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const auto [u, v] = parse_interval(o);
  write_text(o.dot_path, to_dot(interval_elements(u, v)), out);
  return kExitOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
  guard_degree(o);
  const auto classes =
      classes_of_sn(o.n, {.allow_large = o.override_guard, .jobs = o.jobs});
  const nlohmann::json report =
      class_report(o.n, classes, {.with_kl = !o.no_kl}, o.jobs);
  write_text(o.out_path, report.dump() + "\n", out);
  if (!o.out_path.empty() && o.out_path != "-")
    out << "classes: " << classes.size() << " -> " << o.out_path << "\n";
  return kExitOk;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> names;
  if (list.empty() || list == "all") return names;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) names.push_back(item);
  return names;
}

int cmd_verify(const Options& o, std::ostream& out) {
  guard_degree(o);
  if (o.n > kGuardedDegree) throw UsageError("verify supports n <= 10");
  const auto names = split_checks(o.checks);
  const VerificationReport report =
      run_verification(o.n, names, {.long_run = o.long_run, .jobs = o.jobs});
  out << std::left << std::setw(20) << "check" << std::setw(12) << "scope" << std::right
      << std::setw(3) << "n" << std::setw(10) << "passed" << std::setw(8) << "failed"
      << std::setw(10) << "findings" << "\n";
  for (const CheckResult& c : report.checks)
    out << std::left << std::setw(20) << c.name << std::setw(12) << c.scope << std::right
        << std::setw(3) << c.degree << std::setw(10) << c.passed << std::setw(8)
        << c.failed << std::setw(10) << c.findings_total << "\n";
  out << (report.ok() ? "OK" : "FAILED") << " in " << std::fixed << std::setprecision(2)
      << report.wall_time << " s\n";
  if (!o.json_path.empty()) write_text(o.json_path, report.to_json().dump(2) + "\n", out);
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_census(const Options& o, std::ostream& out) {
  guard_degree(o);
  if (o.n > kGuardedDegree) throw UsageError("census supports n <= 10");
  const CensusResult r = run_census(o.n, {.allow_long = o.long_run, .jobs = o.jobs});
  out << "classes: " << r.classes << ", non-self-dual: " << r.non_self_dual << "\n";
  out << "bipartite criterion disagreements: " << r.criterion_disagreements.size() << "\n";
  if (o.list)
    for (const auto& [lo, hi] : r.non_self_dual_classes)
      out << "  [" << lo.to_string() << ", " << hi.to_string() << "]\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd diagram classes of permutations and their Bruhat intervals", "oddperm"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads (default: available parallelism)")
      ->check(CLI::NonNegativeNumber);

  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--interval", o.interval, "Endpoints U V in one-line notation")
        ->expected(2)
        ->required();
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree")->required();
    sub->add_flag("--long", o.long_run, "Allow n = 10");
  };

  auto* diagram = app.add_subcommand("diagram", "Rothe and odd diagram of a permutation");
  diagram->add_option("--perm", o.perm, "Permutation, e.g. 2143")->required();

  auto* klass = app.add_subcommand("class", "Odd diagram class containing a permutation");
  klass->add_option("--perm", o.perm, "Permutation")->required();
  klass->add_flag("--members", o.members, "List every member");

  auto* poin = app.add_subcommand("poincare", "Rank generating function of [U, V]");
  add_interval(poin);
  auto* fact = app.add_subcommand("factorize", "Factor the Poincare polynomial of a class");
  add_interval(fact);
  auto* part = app.add_subcommand("partition", "One splitting step of a class interval");
  add_interval(part);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y}");
  kl->add_option("--x", o.x)->required();
  kl->add_option("--y", o.y)->required();
  auto* rp = app.add_subcommand("rpoly", "R-polynomial R_{x,y}");
  rp->add_option("--x", o.x)->required();
  rp->add_option("--y", o.y)->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of [U, V] in DOT");
  add_interval(hasse);
  hasse->add_option("--dot", o.dot_path, "Output path (default stdout)");

  auto* cls = app.add_subcommand("classes", "JSON report of every class of S_n");
  add_degree(cls);
  cls->add_option("--out", o.out_path, "Output path (default stdout)");
  cls->add_flag("--override", o.override_guard, "Allow n > 10");
  cls->add_flag("--no-kl", o.no_kl, "Skip the KL polynomial of each class");

  auto* ver = app.add_subcommand("verify", "Run the invariant checks on S_n");
  add_degree(ver);
  ver->add_option("--checks", o.checks, "Comma-separated check names or 'all'");
  ver->add_option("--json", o.json_path, "Also write the report as JSON");

  auto* cen = app.add_subcommand("census", "Count non-self-dual classes of S_n");
  add_degree(cen);
  cen->add_flag("--list", o.list, "List the non-self-dual classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

#ifdef _OPENMP
  if (o.jobs == 0) o.jobs = omp_get_max_threads();
#endif

  try {
    if (*diagram) return cmd_diagram(o, out);
    if (*klass) return cmd_class(o, out);
    if (*poin) return cmd_poincare(o, out);
    if (*fact) return cmd_factorize(o, out);
    if (*part) return cmd_partition(o, out);
    if (*kl) return cmd_kl(o, out);
    if (*rp) return cmd_rpoly(o, out);
    if (*hasse) return cmd_hasse(o, out);
    if (*cls) return cmd_classes(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*cen) return cmd_census(o, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace oddperm::cli
