#pragma once

// Lattice points of dilations and the Ehrhart h*-data of P, its boundary and
// its interior.

#include "hstar/exactgeom.hpp"
#include "hstar/report.hpp"

#include <stdexcept>
#include <vector>

namespace hstar {

/// Dilation counts L_P(m), L_dP(m), L_P°(m) for m = 0..max_dilation, with
/// L_P(0) = L_dP(0) = 1 and L_P°(0) = 0.
struct EhrhartProfile {
  int dim = 0;
  long max_dilation = 0;
  std::vector<Integer> counts_polytope;
  std::vector<Integer> counts_boundary;
  std::vector<Integer> counts_interior;
};

enum class EhrhartPart { Polytope, Boundary, Interior };

/// Numerator coefficients of an Ehrhart series over (1 - z)^denominator_exponent.
struct HStarVector {
  std::vector<Integer> coeffs;
  int denominator_exponent = 0;

  /// Coefficient i, reading out-of-range indices as 0.
  Integer operator[](long i) const {
    return (i < 0 || i >= static_cast<long>(coeffs.size())) ? Integer(0) : coeffs[static_cast<std::size_t>(i)];
  }
  /// Index of the last nonzero coefficient, -1 for the zero polynomial.
  long degree() const;
  Integer sum() const;
};

struct InconsistentCounts : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Points of mP ∩ Z^d in lexicographic order.
std::vector<LatticePoint> enumerate_dilation(const LatticePolytope& polytope, long m);

/// Number of points of mP ∩ Z^d and how many of them lie on the boundary.
struct DilationCount {
  Integer total;
  Integer boundary;
};
DilationCount count_dilation(const LatticePolytope& polytope, long m);

EhrhartProfile ehrhart_profile(const LatticePolytope& polytope, long max_dilation);

/// Coefficients of (sum_m counts[m] z^m) (1 - z)^e, i.e.
/// h_k = sum_j (-1)^j C(e, j) counts[k - j]. Coefficients past `max_degree`
/// must vanish (InconsistentCounts otherwise) and are dropped.
HStarVector hstar_from_counts(const std::vector<Integer>& counts, int e, long max_degree);
HStarVector hstar_from_counts(const std::vector<Integer>& counts, int e);

/// h* of one part of the profile: exponent d + 1 and degree <= d for P,
/// exponent d and degree <= d for the boundary, exponent d + 1 and degree
/// <= d + 1 for the interior (read up to degree M when M = d). Requires M >= d.
HStarVector hstar_vector(const EhrhartProfile& profile, EhrhartPart part);

/// Re-expands the series numerator / (1 - z)^e into its first `length` terms.
std::vector<Integer> series_counts(const HStarVector& h, std::size_t length);

/// Checks h*_i(P°) = h*_{d+1-i}(P) for 0 <= i <= min(M, d + 1).
VerificationReport reciprocity_check(const EhrhartProfile& profile);

/// Palindromy h*_j = h*_{d-j}, the h*-characterization of reflexivity.
bool is_reflexive(const HStarVector& hstar_polytope, int d);
bool is_reflexive(const LatticePolytope& polytope);

}  // namespace hstar
