#include "hstar/triangulate.hpp"

#include "hstar/lattice.hpp"

#include <algorithm>
#include <random>

namespace hstar {

PointConfiguration::PointConfiguration(LatticePolytope polytope)
    : polytope_(std::move(polytope)), points_(enumerate_dilation(polytope_, 1)) {
  for (const auto& p : points_) boundary_.push_back(classify_point(polytope_, p) == PointLocation::Boundary);
}

std::vector<int> PointConfiguration::boundary_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (boundary_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::vector<int> PointConfiguration::interior_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!boundary_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::vector<int> PointConfiguration::all_indices() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

int PointConfiguration::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p, lex_less<Integer>);
  if (it == points_.end() || !equal(*it, p)) return -1;
  return static_cast<int>(it - points_.begin());
}

std::vector<int> PointConfiguration::facet_points(const FacetInequality& facet) const {
  const auto& fs = polytope_.facets();
  if (std::find(fs.begin(), fs.end(), facet) == fs.end()) throw NotAFacet("inequality is not a facet of P");
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (facet.slack(points_[static_cast<std::size_t>(i)]) == 0) out.push_back(i);
  return out;
}

WeightFunction WeightFunction::restricted(const std::vector<int>& indices, WeightSupport s) const {
  WeightFunction w;
  w.support = s;
  for (int i : indices) w.values[i] = at(i);
  return w;
}

namespace {

std::vector<int> support_indices(const PointConfiguration& config, WeightSupport support) {
  return support == WeightSupport::Full ? config.all_indices() : config.boundary_indices();
}

template <typename F>
WeightFunction weights_from(const PointConfiguration& config, WeightSupport support, F&& value) {
  WeightFunction w;
  w.support = support;
  for (int i : support_indices(config, support)) w.values[i] = value(i);
  return w;
}

Rat sqnorm(const LatticePoint& p) { return Rat(p.squaredNorm()); }

bool cell_has_volume(const Face& cell, const PointConfiguration& config, std::size_t expected) {
  if (cell.size() != expected) return false;
  std::vector<LatticePoint> pts;
  for (int i : cell) pts.push_back(config.points()[static_cast<std::size_t>(i)]);
  return relative_normalized_volume(pts) > 0;
}

Integer cell_volume(const Face& cell, const PointConfiguration& config) {
  std::vector<LatticePoint> pts;
  for (int i : cell) pts.push_back(config.points()[static_cast<std::size_t>(i)]);
  return relative_normalized_volume(pts);
}

}  // namespace

WeightFunction make_weights(const PointConfiguration& config, WeightSupport support,
                            const std::vector<Rat>& values_on_support) {
  const auto idx = support_indices(config, support);
  if (idx.size() != values_on_support.size()) throw DimensionMismatch("one weight per supported point required");
  WeightFunction w;
  w.support = support;
  for (std::size_t k = 0; k < idx.size(); ++k) w.values[idx[k]] = values_on_support[k];
  return w;
}

WeightFunction sqnorm_weights(const PointConfiguration& config, WeightSupport support) {
  return weights_from(config, support, [&](int i) { return sqnorm(config.points()[static_cast<std::size_t>(i)]); });
}

WeightFunction zero_weights(const PointConfiguration& config, WeightSupport support) {
  return weights_from(config, support, [](int) { return Rat(0); });
}

WeightFunction random_weights(const PointConfiguration& config, WeightSupport support, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 999999);
  return weights_from(config, support, [&](int) { return Rat(dist(rng)); });
}

WeightFunction named_weights(const PointConfiguration& config, WeightSupport support, const std::string& name) {
  if (name == "sqnorm") return sqnorm_weights(config, support);
  if (name == "zero") return zero_weights(config, support);
  const std::string prefix = "random:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad seed in weight name '" + name + "'");
    }
    return random_weights(config, support, std::stoull(digits));
  }
  throw std::invalid_argument("unknown weight name '" + name + "' (expected sqnorm, zero or random:<seed>)");
}

Subdivision regular_subdivision(const PointConfiguration& config, const WeightFunction& weights) {
  std::vector<Rat> heights;
  for (int i = 0; i < config.size(); ++i) heights.push_back(weights.at(i));
  return lower_hull(config.points(), heights);
}

bool is_triangulation(const Subdivision& cells, const PointConfiguration& config) {
  const auto n = static_cast<std::size_t>(config.dim() + 1);
  return !cells.empty() &&
         std::all_of(cells.begin(), cells.end(), [&](const Face& c) { return cell_has_volume(c, config, n); });
}

bool is_unimodular(const Subdivision& cells, const PointConfiguration& config) {
  if (!is_triangulation(cells, config)) return false;
  return std::all_of(cells.begin(), cells.end(), [&](const Face& c) { return cell_volume(c, config) == 1; });
}

Subdivision restrict_to_face(const Subdivision& cells, const PointConfiguration& config,
                             const FacetInequality& facet) {
  const auto on_facet = config.facet_points(facet);
  const int d = config.dim();
  Subdivision out;
  for (const auto& cell : cells) {
    Face meet;
    std::set_intersection(cell.begin(), cell.end(), on_facet.begin(), on_facet.end(), std::back_inserter(meet));
    if (meet.empty()) continue;
    std::vector<LatticePoint> pts;
    for (int i : meet) pts.push_back(config.points()[static_cast<std::size_t>(i)]);
    if (affine_rank(as_columns(pts)) == d - 1) out.push_back(meet);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subdivision facet_subdivision(const PointConfiguration& config, const FacetInequality& facet,
                              const WeightFunction& weights) {
  const auto idx = config.facet_points(facet);
  const int d = config.dim();
  if (d == 1) return {idx};
  // Dropping a coordinate with nonzero normal entry is an affine bijection of
  // the facet hyperplane onto R^{d-1}; lower hulls are preserved.
  Eigen::Index drop = 0;
  while (facet.normal(drop) == 0) ++drop;
  std::vector<LatticePoint> projected;
  std::vector<Rat> heights;
  for (int i : idx) {
    const auto& p = config.points()[static_cast<std::size_t>(i)];
    LatticePoint q(d - 1);
    for (Eigen::Index k = 0, j = 0; k < d; ++k)
      if (k != drop) q(j++) = p(k);
    projected.push_back(q);
    heights.push_back(weights.at(i));
  }
  Subdivision out;
  for (const auto& cell : lower_hull(projected, heights)) {
    Face global;
    for (int local : cell) global.push_back(idx[static_cast<std::size_t>(local)]);
    out.push_back(make_face(global));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex as_complex(const Subdivision& cells, const PointConfiguration& config) {
  return SimplicialComplex(config.all_indices(), cells);
}

SimplicialComplex boundary_complex(const Subdivision& cells, const PointConfiguration& config) {
  return boundary_complex(as_complex(cells, config));
}

SimplicialComplex boundary_triangulation(const PointConfiguration& config, const WeightFunction& boundary_weights) {
  Subdivision all;
  const auto n = static_cast<std::size_t>(config.dim());
  for (const auto& facet : config.polytope().facets()) {
    for (auto& cell : facet_subdivision(config, facet, boundary_weights)) {
      if (!cell_has_volume(cell, config, n)) {
        std::string pts;
        for (int i : cell) pts += (pts.empty() ? "" : " ") + to_string(config.points()[static_cast<std::size_t>(i)]);
        throw BoundaryNotTriangulated("boundary weights do not triangulate a facet; cell {" + pts + "}");
      }
      all.push_back(std::move(cell));
    }
  }
  return SimplicialComplex(config.all_indices(), all);
}

bool is_boundary_unimodular(const SimplicialComplex& delta, const PointConfiguration& config) {
  const auto n = static_cast<std::size_t>(config.dim());
  return std::all_of(delta.facets().begin(), delta.facets().end(),
                     [&](const Face& c) { return c.size() == n && cell_volume(c, config) == 1; });
}

Extension extend_boundary_weights(const PointConfiguration& config, const WeightFunction& boundary_weights,
                                  std::uint64_t seed, int max_attempts) {
  const auto delta = boundary_triangulation(config, boundary_weights);
  const auto interior = config.interior_indices();
  const auto boundary = config.boundary_indices();
  const long n = config.size();

  Rat bound = 0;
  for (int i : boundary) bound = std::max(bound, Rat(abs(boundary_weights.at(i))));
  const Rat big = 2 * bound + 1;
  const long denominator = 1000000;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, denominator);

  Extension ext;
  auto accept = [&](const WeightFunction& w) {
    auto cells = regular_subdivision(config, w);
    if (!is_triangulation(cells, config) || !(boundary_complex(cells, config) == delta)) return false;
    ext.weights = w;
    ext.cells = std::move(cells);
    return true;
  };

  WeightFunction w;
  w.support = WeightSupport::Full;
  for (int i : boundary) w.values[i] = boundary_weights.at(i);

  if (interior.empty()) {
    ++ext.attempts;
    if (accept(w)) return ext;
  } else {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      ++ext.attempts;
      for (std::size_t k = 0; k < interior.size(); ++k) {
        const Rat delta_k = attempt == 0 ? Rat(static_cast<long>(k) + 1, 2 * n)
                                         : Rat(dist(rng), 2 * n * denominator);
        w.values[interior[k]] = -big + delta_k;
      }
      if (accept(w)) {
        if (ext.attempts > 1) ext.notes.push_back("extension needed " + std::to_string(ext.attempts) + " attempts");
        return ext;
      }
    }
  }

  // No interior choice triangulates (e.g. A = B): perturb boundary weights by
  // shrinking amounts until the facet triangulations survive.
  Rat eps(1, 1000);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ++ext.attempts;
    for (int i : boundary) w.values[i] = boundary_weights.at(i) + eps * Rat(dist(rng), denominator);
    for (std::size_t k = 0; k < interior.size(); ++k)
      w.values[interior[k]] = -big + Rat(dist(rng), 2 * n * denominator);
    if (accept(w)) {
      ext.boundary_perturbed = true;
      ext.notes.push_back("boundary weights perturbed by at most " + to_string(eps) +
                          " to reach a triangulation; the boundary complex is unchanged");
      return ext;
    }
    if (attempt % 4 == 3) eps /= 1000;
  }
  throw ExtensionFailed("no extension of the boundary weights triangulates P after " +
                        std::to_string(ext.attempts) + " attempts");
}

std::optional<Triangulation> find_unimodular_triangulation(const PointConfiguration& config, std::uint64_t seed,
                                                           int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 999999);
  const auto base = sqnorm_weights(config, WeightSupport::Full);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    WeightFunction w = base;
    if (attempt > 0) {
      const bool pure_random = attempt >= max_attempts / 2;
      for (auto& [i, v] : w.values) v = pure_random ? Rat(dist(rng)) : v + Rat(dist(rng), 1000000);
    }
    auto cells = regular_subdivision(config, w);
    if (is_unimodular(cells, config)) return Triangulation{std::move(cells), std::move(w)};
  }
  return std::nullopt;
}

std::optional<BoundaryTriangulation> find_unimodular_boundary_triangulation(const PointConfiguration& config,
                                                                            std::uint64_t seed,
                                                                            int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, 999999);
  const auto base = sqnorm_weights(config, WeightSupport::Boundary);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    WeightFunction w = base;
    if (attempt > 0) {
      const bool pure_random = attempt >= max_attempts / 2;
      for (auto& [i, v] : w.values) v = pure_random ? Rat(dist(rng)) : v + Rat(dist(rng), 1000000);
    }
    try {
      auto delta = boundary_triangulation(config, w);
      if (is_boundary_unimodular(delta, config)) return BoundaryTriangulation{std::move(w), std::move(delta)};
    } catch (const BoundaryNotTriangulated&) {
    }
  }
  return std::nullopt;
}

std::optional<RUTCertificate> RUTCertificate::certify(const PointConfiguration& config,
                                                      const WeightFunction& weights) {
  auto cells = regular_subdivision(config, weights);
  if (!is_unimodular(cells, config)) return std::nullopt;
  return RUTCertificate(weights, std::move(cells));
}

std::optional<BoundaryRUTCertificate> BoundaryRUTCertificate::certify(const PointConfiguration& config,
                                                                      const WeightFunction& boundary_weights) {
  try {
    auto delta = boundary_triangulation(config, boundary_weights);
    if (!is_boundary_unimodular(delta, config)) return std::nullopt;
    return BoundaryRUTCertificate(boundary_weights, std::move(delta));
  } catch (const BoundaryNotTriangulated&) {
    return std::nullopt;
  }
}

}  // namespace hstar
