#pragma once

// Regular subdivisions of lattice point configurations, their restriction to
// facets, and extension of boundary weights to the whole configuration.

#include "hstar/exactgeom.hpp"
#include "hstar/simplicial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstar {

struct NotAFacet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BoundaryNotTriangulated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExtensionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The lattice points A = P ∩ Z^d in lexicographic order with boundary flags.
/// Indices into points() are the variable indices used everywhere else.
class PointConfiguration {
 public:
  explicit PointConfiguration(LatticePolytope polytope);

  const LatticePolytope& polytope() const { return polytope_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<bool>& boundary_mask() const { return boundary_; }
  int dim() const { return polytope_.dim(); }
  int size() const { return static_cast<int>(points_.size()); }

  std::vector<int> boundary_indices() const;
  std::vector<int> interior_indices() const;
  /// Indices 0..size()-1.
  std::vector<int> all_indices() const;
  /// Index of a point of A, or -1.
  int index_of(const LatticePoint& p) const;
  /// Indices of A ∩ F; throws NotAFacet unless F is one of the polytope's facets.
  std::vector<int> facet_points(const FacetInequality& facet) const;

 private:
  LatticePolytope polytope_;
  std::vector<LatticePoint> points_;
  std::vector<bool> boundary_;
};

enum class WeightSupport { Full, Boundary };

struct WeightFunction {
  WeightSupport support = WeightSupport::Full;
  std::map<int, Rat> values;

  /// Throws std::out_of_range outside the support.
  const Rat& at(int index) const { return values.at(index); }
  /// Restriction to a subset of indices of the support.
  WeightFunction restricted(const std::vector<int>& indices, WeightSupport support) const;
};

WeightFunction make_weights(const PointConfiguration& config, WeightSupport support,
                            const std::vector<Rat>& values_on_support);
/// |α|^2 on the support.
WeightFunction sqnorm_weights(const PointConfiguration& config, WeightSupport support);
WeightFunction zero_weights(const PointConfiguration& config, WeightSupport support);
/// Uniform integers in [0, 10^6) drawn from a seeded generator.
WeightFunction random_weights(const PointConfiguration& config, WeightSupport support, std::uint64_t seed);
/// "sqnorm", "zero" or "random:<seed>"; throws std::invalid_argument otherwise.
WeightFunction named_weights(const PointConfiguration& config, WeightSupport support, const std::string& name);

/// Cells are sorted index sets into the configuration.
using Subdivision = std::vector<Face>;

struct Triangulation {
  Subdivision cells;
  std::optional<WeightFunction> inducing_weights;
};

/// Lower hull of {(α, ω(α))}; each cell lists every point on its lower facet.
Subdivision regular_subdivision(const PointConfiguration& config, const WeightFunction& weights);

/// Every cell has d + 1 points and positive volume.
bool is_triangulation(const Subdivision& cells, const PointConfiguration& config);
/// Every cell has normalized volume 1.
bool is_unimodular(const Subdivision& cells, const PointConfiguration& config);

/// Cells {C ∩ F : dim(C ∩ F) = d - 1} as indices of the whole configuration.
Subdivision restrict_to_face(const Subdivision& cells, const PointConfiguration& config,
                             const FacetInequality& facet);

/// Regular subdivision of A ∩ F induced by ω restricted to F, in global indices.
Subdivision facet_subdivision(const PointConfiguration& config, const FacetInequality& facet,
                              const WeightFunction& weights);

/// The complex generated by the cells on the ground set 0..|A|-1.
SimplicialComplex as_complex(const Subdivision& cells, const PointConfiguration& config);

/// Boundary complex of a triangulation of P, on the ground set 0..|A|-1.
SimplicialComplex boundary_complex(const Subdivision& cells, const PointConfiguration& config);

/// Δ: the union over facets of the triangulations induced by boundary
/// weights. Throws BoundaryNotTriangulated if some facet is not triangulated.
SimplicialComplex boundary_triangulation(const PointConfiguration& config, const WeightFunction& boundary_weights);

/// Every (d-1)-cell of Δ has normalized volume 1 in the lattice of its hyperplane.
bool is_boundary_unimodular(const SimplicialComplex& delta, const PointConfiguration& config);

struct Extension {
  WeightFunction weights;
  Subdivision cells;
  int attempts = 0;
  /// True if no interior-only choice worked and boundary weights were
  /// perturbed (by amounts that keep Δ unchanged).
  bool boundary_perturbed = false;
  std::vector<std::string> notes;
};

/// ω on A inducing a triangulation whose boundary complex is Δ(ω_∂).
Extension extend_boundary_weights(const PointConfiguration& config, const WeightFunction& boundary_weights,
                                  std::uint64_t seed, int max_attempts = 64);

/// Regular unimodular triangulation: squared norm first, then seeded
/// perturbations of it. nullopt if none is found within the attempt budget.
std::optional<Triangulation> find_unimodular_triangulation(const PointConfiguration& config, std::uint64_t seed,
                                                           int max_attempts = 64);

struct BoundaryTriangulation {
  WeightFunction boundary_weights;
  SimplicialComplex delta;
};

/// Boundary weights whose Δ is unimodular, searched like the full case.
std::optional<BoundaryTriangulation> find_unimodular_boundary_triangulation(const PointConfiguration& config,
                                                                            std::uint64_t seed,
                                                                            int max_attempts = 64);

/// Evidence that ω induces a regular unimodular triangulation of A. Only
/// obtainable through certify(), which checks it.
class RUTCertificate {
 public:
  static std::optional<RUTCertificate> certify(const PointConfiguration& config, const WeightFunction& weights);
  const WeightFunction& weights() const { return weights_; }
  const Subdivision& cells() const { return cells_; }

 private:
  RUTCertificate(WeightFunction w, Subdivision c) : weights_(std::move(w)), cells_(std::move(c)) {}
  WeightFunction weights_;
  Subdivision cells_;
};

/// Evidence that ω_∂ induces a regular unimodular triangulation Δ of ∂P.
class BoundaryRUTCertificate {
 public:
  static std::optional<BoundaryRUTCertificate> certify(const PointConfiguration& config,
                                                       const WeightFunction& boundary_weights);
  const WeightFunction& boundary_weights() const { return weights_; }
  const SimplicialComplex& delta() const { return delta_; }

 private:
  BoundaryRUTCertificate(WeightFunction w, SimplicialComplex d) : weights_(std::move(w)), delta_(std::move(d)) {}
  WeightFunction weights_;
  SimplicialComplex delta_;
};

}  // namespace hstar
