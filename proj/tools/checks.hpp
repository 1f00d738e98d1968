#pragma once

// Named verification checks on one polytope, as exposed by `verify` and run
// in bulk by `corpus run`.

#include "formats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hstar::cli {

struct CheckOptions {
  /// Weight file or built-in name; each check picks a default when unset.
  std::optional<std::string> weights;
  std::uint64_t seed = 0;
};

/// betke-mcmullen, stapledon, sturmfels, boundary-sturmfels, dehn-sommerville,
/// g-theorem, glbt, reflexive-propagation, bounds, reciprocity.
const std::vector<std::string>& check_names();

/// Reports of one check, each tagged with the instance name. Throws
/// InputError for an unknown check name. Checks whose triangulation
/// hypothesis cannot be certified come back skipped.
ReportList run_check(const std::string& check, const PolytopeFile& file, const CheckOptions& options);

/// Every check with default weights.
ReportList run_all_checks(const PolytopeFile& file, std::uint64_t seed);

}  // namespace hstar::cli
