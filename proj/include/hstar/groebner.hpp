#pragma once

// Binomial and monomial ideals in K[x_α : α ∈ A]: toric ideals, the interior
// monomial ideal, weight-order Gröbner bases, initial ideals and Hilbert
// functions. All ideals handled here have generators x^u - x^v or x^u, so the
// engine never needs coefficients other than ±1.

#include "hstar/report.hpp"
#include "hstar/triangulate.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hstar {

struct CapTooLowForQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Exponents = Eigen::VectorXi;

class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(int n) : e_(Exponents::Zero(n)) {}
  explicit Monomial(Exponents e);
  static Monomial variable(int n, int i);
  /// Product of the variables in `support`, each to the first power.
  static Monomial squarefree(int n, const std::vector<int>& support);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return e_(i); }
  const Exponents& exponents() const { return e_; }
  bool is_one() const { return degree_ == 0; }
  std::vector<int> support() const;
  bool is_squarefree() const { return (e_.array() <= 1).all(); }

  bool divides(const Monomial& other) const { return (e_.array() <= other.e_.array()).all(); }
  bool coprime(const Monomial& other) const { return (e_.array().min(other.e_.array()) == 0).all(); }
  Monomial lcm(const Monomial& other) const { return Monomial(Exponents(e_.cwiseMax(other.e_))); }
  Monomial gcd(const Monomial& other) const { return Monomial(Exponents(e_.cwiseMin(other.e_))); }
  Monomial radical() const { return Monomial(Exponents((e_.array() > 0).cast<int>())); }
  Monomial operator*(const Monomial& other) const { return Monomial(Exponents(e_ + other.e_)); }
  /// Exact quotient; requires other | *this.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Degree, then lexicographic on exponents; a container order, not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  Exponents e_;
  int degree_ = 0;
};

/// x1^2*x3 style rendering with 1-based variable names, or "1".
std::string to_string(const Monomial& m);
/// Same, with caller-provided variable names.
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

/// ω-weight first, then graded reverse lexicographic order. The reverse-lex
/// tie-break looks at variables in the order given by `grevlex_rank` (the
/// variable of highest rank is compared first and is the "smallest").
class TermOrder {
 public:
  /// Plain grevlex on x_0 > x_1 > ... > x_{n-1}.
  static TermOrder grevlex(int n);
  /// Grevlex with variable `last` moved to the end (smallest).
  static TermOrder grevlex_last(int n, int last);
  /// ω on all n variables, grevlex tie-break. Weights are shifted to be
  /// positive and scaled to integers; on homogeneous ideals this does not
  /// change initial terms. Throws std::overflow_error if they do not fit.
  static TermOrder weighted(const std::vector<Rat>& weights);
  static TermOrder weighted(const WeightFunction& weights, int n);

  int nvars() const { return n_; }
  /// -1, 0, 1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  /// Restriction to a subset of variables, keeping relative tie-break order.
  TermOrder restricted(const std::vector<int>& variables) const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> weight_;  // empty for pure grevlex
  std::vector<int> rank_;              // rank_[var], distinct in 0..n-1
  std::vector<int> by_rank_;           // inverse of rank_
};

/// x^lead - x^trail, or the monomial x^lead when `trail` is empty.
struct Binomial {
  Monomial lead;
  std::optional<Monomial> trail;

  bool is_monomial() const { return !trail.has_value(); }
  int degree() const { return lead.degree(); }
  /// Swaps terms so that lead is the larger term under `order`.
  Binomial oriented(const TermOrder& order) const;
  friend bool operator==(const Binomial& a, const Binomial& b) { return a.lead == b.lead && a.trail == b.trail; }
};

std::string to_string(const Binomial& b);
std::string to_string(const Binomial& b, const std::vector<std::string>& names);

/// A monomial ideal with minimal generators sorted by degree then exponents.
/// `valid_through` caps the degrees for which the generator list is complete.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> generators, std::optional<int> valid_through = std::nullopt);

  int nvars() const { return n_; }
  const std::vector<Monomial>& generators() const& { return gens_; }
  std::vector<Monomial> generators() && { return std::move(gens_); }
  std::optional<int> valid_through() const { return valid_through_; }
  bool contains(const Monomial& m) const;
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
  std::optional<int> valid_through_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical_monomial(const MonomialIdeal& ideal);
bool is_squarefree(const MonomialIdeal& ideal);
/// Squarefree monomials x^σ for σ in `sets` (e.g. minimal non-faces).
MonomialIdeal squarefree_ideal(int nvars, const std::vector<std::vector<int>>& sets);

/// Number of degree-m monomials in nvars variables outside the ideal.
/// Throws CapTooLowForQuery if m exceeds the ideal's valid_through.
Integer hilbert_function(const MonomialIdeal& ideal, int m);

class GroebnerBasis {
 public:
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements, std::optional<int> degree_cap)
      : order_(std::move(order)), elements_(std::move(elements)), cap_(degree_cap) {}

  const TermOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const& { return elements_; }
  std::optional<int> degree_cap() const { return cap_; }

  /// Remainder of f, fully reduced; nullopt if it reduces to zero.
  std::optional<Binomial> normal_form(const Binomial& f) const;
  /// Ideal membership (exact below the cap).
  bool contains(const Binomial& f) const { return !normal_form(f).has_value(); }

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
  std::optional<int> cap_;
};

/// Reduced Gröbner basis of a homogeneous binomial/monomial ideal. With a
/// cap D, S-pairs of degree > D are skipped and the basis is valid in degrees <= D.
GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& order,
                         std::optional<int> degree_cap = std::nullopt);

/// Minimal generators of the initial ideal (valid through the basis cap).
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// Toric ideal of the points {(α, 1)} as a reduced grevlex Gröbner basis.
/// Variables follow the order of `points`.
std::vector<Binomial> toric_ideal_generators(const std::vector<LatticePoint>& points);
std::vector<Binomial> toric_ideal_generators(const PointConfiguration& config);

/// Oracle: binomials connecting all degree-m representations of each lattice
/// point of mP for 2 <= m <= D, by a spanning star per fiber.
std::vector<Binomial> fiber_generators(const PointConfiguration& config, int max_degree);

/// M_P: squarefree x^σ for inclusion-minimal σ ⊆ A lying in no facet of P.
MonomialIdeal interior_monomial_ideal(const PointConfiguration& config);
/// γ(c) = Σ c_α (α, 1) lies in the interior of the cone over P × {1}.
bool gamma_in_interior(const PointConfiguration& config, const Monomial& m);

struct BoundaryIdeal {
  std::vector<Binomial> toric;
  MonomialIdeal interior;
  /// Generators of I_∂P = I_P + M_P.
  std::vector<Binomial> generators() const;
};
BoundaryIdeal boundary_ideal(const PointConfiguration& config);

std::vector<Binomial> as_generators(const MonomialIdeal& ideal);

/// √in_ω(I_P) equals the Stanley-Reisner ideal of the regular subdivision S_ω.
VerificationReport verify_sturmfels(const PointConfiguration& config, const WeightFunction& weights);

/// Boundary correspondence for ω_∂: √in(I_∂P) = I_Δ, squarefreeness vs
/// unimodularity of Δ, in(I_∂P) = in(I_P) + M_P, the Hilbert function of
/// in(I_∂P) against L_∂P(m) for m <= d, and per facet in(I_∂P) ∩ R_F = in(I_F).
ReportList verify_boundary_sturmfels(const PointConfiguration& config, const WeightFunction& boundary_weights,
                                     std::uint64_t seed);

}  // namespace hstar
