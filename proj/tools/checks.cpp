#include "checks.hpp"

#include "hstar/analysis.hpp"
#include "hstar/groebner.hpp"
#include "hstar/simplicial.hpp"

namespace hstar::cli {

namespace {

VerificationReport skipped(std::string check, std::string why) {
  VerificationReport r;
  r.check = std::move(check);
  r.pass = true;
  r.skipped = true;
  r.notes.push_back(std::move(why));
  return r;
}

std::optional<RUTCertificate> full_certificate(const PointConfiguration& config, const CheckOptions& options) {
  if (options.weights)
    return RUTCertificate::certify(config, load_weights_arg(*options.weights, config, WeightSupport::Full));
  const auto t = find_unimodular_triangulation(config, options.seed);
  if (!t) return std::nullopt;
  return RUTCertificate::certify(config, *t->inducing_weights);
}

std::optional<BoundaryRUTCertificate> boundary_certificate(const PointConfiguration& config,
                                                           const CheckOptions& options) {
  if (options.weights) {
    const auto w = load_weights_arg(*options.weights, config, WeightSupport::Boundary);
    try {
      return BoundaryRUTCertificate::certify(config, w);
    } catch (const BoundaryNotTriangulated&) {
      return std::nullopt;
    }
  }
  const auto bt = find_unimodular_boundary_triangulation(config, options.seed);
  if (!bt) return std::nullopt;
  return BoundaryRUTCertificate::certify(config, bt->boundary_weights);
}

bool triangulates_boundary(const PointConfiguration& config, const WeightFunction& w) {
  try {
    boundary_triangulation(config, w);
    return true;
  } catch (const BoundaryNotTriangulated&) {
    return false;
  }
}

// sqnorm, or if that leaves a facet untriangulated, seeded random weights.
WeightFunction default_boundary_weights(const PointConfiguration& config, std::uint64_t seed, std::string& note) {
  auto w = sqnorm_weights(config, WeightSupport::Boundary);
  if (triangulates_boundary(config, w)) return w;
  for (std::uint64_t s = seed; s < seed + 64; ++s) {
    w = random_weights(config, WeightSupport::Boundary, s);
    if (triangulates_boundary(config, w)) {
      note = "sqnorm does not triangulate the boundary; used random:" + std::to_string(s);
      return w;
    }
  }
  throw ExtensionFailed("no boundary weights triangulating every facet were found");
}

ReportList boundary_gated(const std::string& check, const PointConfiguration& config, const CheckOptions& options) {
  const auto cert = boundary_certificate(config, options);
  if (!cert) return {skipped(check, "no regular unimodular boundary triangulation certified")};
  const auto h = hstar_pair(config.polytope());
  const int d = h.dim;
  if (check == "stapledon") return {stapledon(config, *cert)};
  if (check == "g-theorem") return g_theorem_checks(h.boundary, d);
  if (check == "glbt") return {glbt_report(h.boundary, d)};
  if (check == "reflexive-propagation") return {reflexive_propagation(h.polytope, d)};
  return {bounds_check(h.polytope, h.boundary, d, is_balanced(cert->delta()))};
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"betke-mcmullen", "stapledon",  "sturmfels",
                                                 "boundary-sturmfels", "dehn-sommerville", "g-theorem",
                                                 "glbt", "reflexive-propagation", "bounds", "reciprocity"};
  return names;
}

ReportList run_check(const std::string& check, const PolytopeFile& file, const CheckOptions& options) {
  if (std::find(check_names().begin(), check_names().end(), check) == check_names().end())
    throw InputError("unknown check '" + check + "'");
  const PointConfiguration config(to_polytope(file));
  const int d = config.dim();
  ReportList out;

  if (check == "reciprocity") {
    out.push_back(reciprocity_check(ehrhart_profile(config.polytope(), d + 1)));
  } else if (check == "dehn-sommerville") {
    const auto h = hstar_pair(config.polytope());
    out.push_back(dehn_sommerville(h.polytope, h.boundary, d));
  } else if (check == "betke-mcmullen") {
    const auto cert = full_certificate(config, options);
    out.push_back(cert ? betke_mcmullen(config, *cert)
                       : skipped("betke_mcmullen", "no regular unimodular triangulation certified"));
  } else if (check == "sturmfels") {
    out.push_back(verify_sturmfels(config, load_weights_arg(options.weights.value_or("sqnorm"), config,
                                                            WeightSupport::Full)));
  } else if (check == "boundary-sturmfels") {
    std::string note;
    const auto w = options.weights ? load_weights_arg(*options.weights, config, WeightSupport::Boundary)
                                   : default_boundary_weights(config, options.seed, note);
    if (!triangulates_boundary(config, w)) {
      out.push_back(skipped("boundary_sturmfels", "weights do not triangulate every facet"));
    } else {
      out = verify_boundary_sturmfels(config, w, options.seed);
      if (!note.empty()) out.front().notes.push_back(note);
    }
  } else {
    out = boundary_gated(check, config, options);
  }
  for (auto& r : out) r.instance = file.name;
  return out;
}

ReportList run_all_checks(const PolytopeFile& file, std::uint64_t seed) {
  ReportList out;
  for (const auto& check : check_names()) {
    auto reports = run_check(check, file, CheckOptions{std::nullopt, seed});
    out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  return out;
}

}  // namespace hstar::cli
