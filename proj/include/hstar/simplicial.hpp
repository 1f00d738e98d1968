#pragma once

// Abstract simplicial complexes stored by their maximal faces.

#include "hstar/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace hstar {

/// A face is a strictly increasing list of vertex ids.
using Face = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Complex generated by `generators` on the ground set `vertex_ids`, which
  /// must contain every vertex used. Ground-set elements outside every
  /// generator are not faces (they are minimal non-faces).
  SimplicialComplex(std::vector<int> vertex_ids, const std::vector<Face>& generators);

  /// Ground set taken as the union of the generators.
  explicit SimplicialComplex(const std::vector<Face>& generators);

  const std::vector<int>& vertex_ids() const& { return vertex_ids_; }
  std::vector<int> vertex_ids() && { return std::move(vertex_ids_); }
  /// Maximal faces, sorted lexicographically.
  const std::vector<Face>& facets() const& { return facets_; }
  std::vector<Face> facets() && { return std::move(facets_); }
  /// Largest facet cardinality minus one; -1 for the complex {∅} or the void complex.
  int dim() const;
  bool is_pure() const;

  bool contains(const Face& face) const;
  /// All faces including ∅, ordered by size then lexicographically.
  std::vector<Face> faces() const;
  /// Faces of dimension k.
  std::vector<Face> faces(int k) const;
  /// Vertices that lie in some face.
  std::vector<int> vertices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<int> vertex_ids_;
  std::vector<Face> facets_;
};

struct FHVector {
  std::vector<Integer> f;  ///< f_{-1}, ..., f_dim
  std::vector<Integer> h;  ///< h_0, ..., h_{dim+1}
};

/// Sorted, duplicate-free face from arbitrary ids.
Face make_face(std::vector<int> ids);

std::vector<Integer> f_vector(const SimplicialComplex& complex);

/// Coefficients of sum_{k=-1}^{dim} f_k z^{k+1} (1 - z)^{dim-k}.
std::vector<Integer> h_vector(const SimplicialComplex& complex);
std::vector<Integer> h_from_f(const std::vector<Integer>& f);
FHVector fh_vector(const SimplicialComplex& complex);

/// Faces of codimension one that lie in exactly one facet of the pure complex
/// `cells`, on the same ground set.
SimplicialComplex boundary_complex(const SimplicialComplex& cells);

/// Inclusion-minimal subsets of the ground set that are not faces, ordered by
/// size then lexicographically.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Proper (dim + 1)-coloring of the 1-skeleton, vertex -> color in 0..dim,
/// if one exists.
std::optional<std::map<int, int>> balanced_coloring(const SimplicialComplex& complex);
bool is_balanced(const SimplicialComplex& complex);

/// lk(F) = {G : F ∪ G ∈ K, F ∩ G = ∅}; empty complex if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

}  // namespace hstar
