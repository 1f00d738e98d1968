#pragma once

#include "hstar/numeric.hpp"

#include <string>
#include <vector>

namespace hstar {

/// Outcome of one named check on one instance. Identities pass iff every
/// residual is zero; inequality checks carry their slack as residuals and
/// pass iff every inequality holds.
struct VerificationReport {
  std::string check;
  std::string instance;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::vector<Integer> residuals;
  bool pass = false;
  /// Hypotheses of the check do not apply; pass is vacuous.
  bool skipped = false;
  std::vector<std::string> notes;
};

using ReportList = std::vector<VerificationReport>;

inline bool all_pass(const ReportList& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string render(const std::vector<Integer>& values);
std::vector<std::string> render_each(const std::vector<Integer>& values);

}  // namespace hstar
