#ifndef ODDPERM_REPORT_HPP
#define ODDPERM_REPORT_HPP

#include <vector>

#include <json.hpp>

#include "oddperm/classes.hpp"
#include "oddperm/polynomial.hpp"

namespace oddperm {

inline constexpr int kReportSchema = 1;

/// Ascending coefficient array, e.g. [1,3,5,5,3,1].
nlohmann::json to_json(const IntPolynomial& p);
/// [[r,c],...] in row-major order.
nlohmann::json to_json(const Diagram& d);

struct ClassRecordOptions {
  /// Compute kl_is_one; when false the field is null.
  bool with_kl = true;
};

/// {diagram, size, min, max, rank_vector, poincare_coeffs, factor_lengths,
///  self_dual, kl_is_one}
nlohmann::json class_record(const OddDiagramClass& c,
                            const ClassRecordOptions& opts = {});

/// {"schema": 1, "n": n, "jobs": jobs, "classes": [...]} with the records in
/// the order of `classes`. Records are built in parallel.
nlohmann::json class_report(int n, const std::vector<OddDiagramClass>& classes,
                            const ClassRecordOptions& opts = {}, int jobs = 0);

}  // namespace oddperm

#endif  // ODDPERM_REPORT_HPP
