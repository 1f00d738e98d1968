#pragma once

// Checks on h*-data: Dehn-Sommerville relations between P and its boundary,
// g*-vectors, Macaulay M-sequences, the g-theorem and lower bound transfer to
// boundaries, reflexive propagation and the bounds on g*_i(P).
//
// Functions taking bare vectors evaluate the stated relation and nothing else.
// Relations that need a regular unimodular triangulation of the boundary are
// only asserted by the certified_* entry points, which require a certificate.

#include "hstar/lattice.hpp"
#include "hstar/report.hpp"
#include "hstar/triangulate.hpp"

#include <optional>
#include <vector>

namespace hstar {

/// g*_i = h*_i(∂P) - h*_{i-1}(∂P) and alt_i = h*_i(P) - h*_{d-i+1}(P) for
/// 0 <= i <= floor(d/2).
struct GStarVector {
  std::vector<Integer> entries;
  std::vector<Integer> alt_entries;
  bool definitions_agree() const { return entries == alt_entries; }
};

GStarVector g_star(const HStarVector& h_polytope, const HStarVector& h_boundary, int d);

/// Residuals (h*_i(P) - h*_{d-i+1}(P)) - (h*_i(∂P) - h*_{i-1}(∂P)), 0 <= i <= d.
VerificationReport dehn_sommerville(const HStarVector& h_polytope, const HStarVector& h_boundary, int d);

/// ν^<i> from the i-binomial expansion of ν; 0 maps to 0.
Integer macaulay_pseudopower(const Integer& nu, int i);

/// (1, ν_1, ν_2, ...) with 0 <= ν_{i+1} <= ν_i^<i>.
bool is_M_sequence(const std::vector<Integer>& v);

/// Palindromy, unimodality up to floor(d/2) and the M-sequence property of g*(∂P).
ReportList g_theorem_checks(const HStarVector& h_boundary, int d);

/// Smallest r <= floor(d/2) with h*_j(∂P) = h*_{j-1}(∂P) for r <= j <= floor(d/2).
std::optional<int> glbt_equality_r(const HStarVector& h_boundary, int d);
VerificationReport glbt_report(const HStarVector& h_boundary, int d);

/// If h*_j = h*_{d-j+1} for some j >= 1, h* must be constant on [j, d-j+1].
/// Skipped unless h* is palindromic.
VerificationReport reflexive_propagation(const HStarVector& h_polytope, int d);

/// 0 <= g*_i(P) <= C(h*_1(∂P)+i-2, i), the summed form over [l, k], and with
/// a balanced Δ the lower bound i·g*_i(P) >= (d-2i+1)·h*_{i-1}(∂P).
/// `balanced` unset means no witness is known and the lower bound is not evaluated.
VerificationReport bounds_check(const HStarVector& h_polytope, const HStarVector& h_boundary, int d,
                                std::optional<bool> balanced);

/// h*(P) and h*(∂P) of a polytope, read off counts up to dilation d + 1.
struct HStarPair {
  int dim = 0;
  HStarVector polytope;
  HStarVector boundary;
};
HStarPair hstar_pair(const LatticePolytope& polytope);

/// h(𝒯) = h*(P) padded with zeros.
VerificationReport betke_mcmullen(const PointConfiguration& config, const RUTCertificate& certificate);
/// h(Δ) = h*(∂P).
VerificationReport stapledon(const PointConfiguration& config, const BoundaryRUTCertificate& certificate);

/// Every boundary-gated check of this module: Stapledon, g-theorem, GLBT,
/// reflexive propagation and bounds, with balancedness taken from Δ.
ReportList certified_checks(const PointConfiguration& config, const BoundaryRUTCertificate& certificate);

}  // namespace hstar
