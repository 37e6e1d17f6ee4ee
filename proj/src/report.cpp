#include "oddperm/report.hpp"

#include "oddperm/duality.hpp"
#include "oddperm/kazhdan_lusztig.hpp"
#include "oddperm/partition.hpp"
#include "parallel.hpp"

namespace oddperm {

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (std::int64_t c : p.coeffs()) out.push_back(c);
  return out;
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const Box& b : d.boxes()) out.push_back({b.row, b.col});
  return out;
}

nlohmann::json class_record(const OddDiagramClass& c,
                            const ClassRecordOptions& opts) {
  const BruhatInterval interval = c.as_interval();
  const RankVector rv = rank_vector(interval);
  const FactorizationResult f = factorize(c.min_elem, c.max_elem);
  nlohmann::json rec;
  rec["diagram"] = to_json(c.diagram);
  rec["size"] = c.size();
  rec["min"] = c.min_elem.to_string();
  rec["max"] = c.max_elem.to_string();
  rec["rank_vector"] = rv.counts;
  rec["poincare_coeffs"] = to_json(poincare(interval));
  rec["factor_lengths"] = f.factor_lengths;
  rec["self_dual"] = c.size() == 1 || is_self_dual(interval);
  if (opts.with_kl) {
    KazhdanLusztigTable kl;
    rec["kl_is_one"] = kl(c.min_elem, c.max_elem) == IntPolynomial::constant(1);
  } else {
    rec["kl_is_one"] = nullptr;
  }
  return rec;
}

nlohmann::json class_report(int n, const std::vector<OddDiagramClass>& classes,
                            const ClassRecordOptions& opts, int jobs) {
  detail::ThreadCount threads(jobs);
  std::vector<nlohmann::json> records(classes.size());
  detail::parallel_for(
      static_cast<long>(classes.size()),
      [&](long i) { records[i] = class_record(classes[i], opts); }, 64);
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["n"] = n;
  out["jobs"] = jobs;
  out["classes"] = std::move(records);
  return out;
}

}  // namespace oddperm
