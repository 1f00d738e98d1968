#include "hstar/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>

namespace hstar {

namespace {

// Halfspaces a . (x_0..x_{k-1}) <= m b describing the projection of P onto
// its first k coordinates, for k = 1..d. Points are enumerated coordinate by
// coordinate, each range cut out by the next projection.
struct ProjectionTower {
  std::vector<std::vector<FacetInequality>> levels;
};

ProjectionTower build_tower(const LatticePolytope& polytope) {
  const int d = polytope.dim();
  ProjectionTower tower;
  for (int k = 1; k < d; ++k) {
    std::vector<LatticePoint> projected;
    for (const auto& v : polytope.vertices()) projected.push_back(v.head(k));
    tower.levels.push_back(facet_enumeration(projected));
  }
  tower.levels.push_back(polytope.facets());
  return tower;
}

template <typename S>
S floor_div(const S& a, const S& b) {
  S q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename S>
S ceil_div(const S& a, const S& b) {
  return -floor_div<S>(-a, b);
}

template <typename S>
S convert(const Integer& x) {
  if constexpr (std::is_same_v<S, Integer>) {
    return x;
  } else {
    return static_cast<S>(to_int64(x));
  }
}

template <typename S>
struct Walker {
  struct Row {
    std::vector<S> a;
    S rhs;  // m * b
  };
  std::vector<std::vector<Row>> levels;
  std::vector<S> x;

  Walker(const ProjectionTower& tower, long m) {
    for (const auto& level : tower.levels) {
      std::vector<Row> rows;
      for (const auto& f : level) {
        Row r;
        for (Eigen::Index i = 0; i < f.normal.size(); ++i) r.a.push_back(convert<S>(f.normal(i)));
        r.rhs = convert<S>(f.offset * m);
        rows.push_back(std::move(r));
      }
      levels.push_back(std::move(rows));
    }
    x.assign(levels.size(), S(0));
  }

  // Residual m b - sum_{i<k} a_i x_i for each row of level k.
  std::vector<S> residuals(std::size_t k) const {
    std::vector<S> out;
    for (const auto& row : levels[k]) {
      S r = row.rhs;
      for (std::size_t i = 0; i < k; ++i) r -= row.a[i] * x[i];
      out.push_back(r);
    }
    return out;
  }

  // Range of x_k compatible with the fixed prefix; nullopt if empty.
  std::optional<std::pair<S, S>> range(std::size_t k, const std::vector<S>& res) const {
    std::optional<S> lo, hi;
    for (std::size_t j = 0; j < levels[k].size(); ++j) {
      const S& ak = levels[k][j].a[k];
      if (ak > 0) {
        S h = floor_div<S>(res[j], ak);
        if (!hi || h < *hi) hi = h;
      } else if (ak < 0) {
        S l = ceil_div<S>(res[j], ak);
        if (!lo || l > *lo) lo = l;
      } else if (res[j] < 0) {
        return std::nullopt;
      }
    }
    if (!lo || !hi) throw std::logic_error("unbounded projection in lattice enumeration");
    if (*lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  template <typename F>
  void enumerate(std::size_t k, F& visit) {
    const auto res = residuals(k);
    const auto r = range(k, res);
    if (!r) return;
    for (S v = r->first; v <= r->second; v += 1) {
      x[k] = v;
      if (k + 1 < levels.size()) {
        enumerate(k + 1, visit);
      } else {
        bool tight = false;
        for (std::size_t j = 0; j < res.size() && !tight; ++j) tight = (res[j] == levels[k][j].a[k] * v);
        visit(x, tight);
      }
    }
  }

  // Counts the last coordinate as an interval instead of visiting it.
  void count(std::size_t k, Integer& total, Integer& boundary) {
    const auto res = residuals(k);
    const auto r = range(k, res);
    if (!r) return;
    if (k + 1 < levels.size()) {
      for (S v = r->first; v <= r->second; v += 1) {
        x[k] = v;
        count(k + 1, total, boundary);
      }
      return;
    }
    const S length = r->second - r->first + 1;
    total += Integer(length);
    std::set<S> tight;
    for (std::size_t j = 0; j < res.size(); ++j) {
      const S& ak = levels[k][j].a[k];
      if (ak == 0) {
        if (res[j] == 0) {
          boundary += Integer(length);
          return;
        }
      } else if (floor_div<S>(res[j], ak) * ak == res[j]) {
        const S v = res[j] / ak;
        if (r->first <= v && v <= r->second) tight.insert(v);
      }
    }
    boundary += Integer(tight.size());
  }
};

// True when every intermediate quantity of the walk fits comfortably in int64.
bool fits_int64(const LatticePolytope& polytope, const ProjectionTower& tower, long m) {
  Integer coord = 0;
  for (const auto& v : polytope.vertices())
    for (Eigen::Index i = 0; i < v.size(); ++i) coord = std::max(coord, Integer(abs(v(i))));
  coord *= m;
  const Integer limit = Integer(1) << 60;
  for (const auto& level : tower.levels) {
    for (const auto& f : level) {
      Integer total = abs(f.offset) * m;
      for (Eigen::Index i = 0; i < f.normal.size(); ++i) total += abs(f.normal(i)) * (coord + 1);
      if (total >= limit) return false;
    }
  }
  return true;
}

void require_dilation(long m) {
  if (m < 0) throw std::invalid_argument("dilation factor must be nonnegative");
}

}  // namespace

long HStarVector::degree() const {
  for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Integer HStarVector::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

std::vector<LatticePoint> enumerate_dilation(const LatticePolytope& polytope, long m) {
  require_dilation(m);
  const auto tower = build_tower(polytope);
  std::vector<LatticePoint> out;
  auto collect = [&](const auto& x, bool) {
    LatticePoint p(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) p(static_cast<Eigen::Index>(i)) = Integer(x[i]);
    out.push_back(std::move(p));
  };
  if (fits_int64(polytope, tower, m)) {
    Walker<std::int64_t> w(tower, m);
    w.enumerate(0, collect);
  } else {
    Walker<Integer> w(tower, m);
    w.enumerate(0, collect);
  }
  return out;
}

DilationCount count_dilation(const LatticePolytope& polytope, long m) {
  require_dilation(m);
  const auto tower = build_tower(polytope);
  DilationCount c{0, 0};
  if (fits_int64(polytope, tower, m)) {
    Walker<std::int64_t> w(tower, m);
    w.count(0, c.total, c.boundary);
  } else {
    Walker<Integer> w(tower, m);
    w.count(0, c.total, c.boundary);
  }
  return c;
}

EhrhartProfile ehrhart_profile(const LatticePolytope& polytope, long max_dilation) {
  require_dilation(max_dilation);
  EhrhartProfile profile;
  profile.dim = polytope.dim();
  profile.max_dilation = max_dilation;
  profile.counts_polytope.push_back(1);
  profile.counts_boundary.push_back(1);
  profile.counts_interior.push_back(0);
  for (long m = 1; m <= max_dilation; ++m) {
    const auto c = count_dilation(polytope, m);
    profile.counts_polytope.push_back(c.total);
    profile.counts_boundary.push_back(c.boundary);
    profile.counts_interior.push_back(c.total - c.boundary);
  }
  return profile;
}

HStarVector hstar_from_counts(const std::vector<Integer>& counts, int e, long max_degree) {
  if (e < 0) throw std::invalid_argument("negative denominator exponent");
  HStarVector h;
  h.denominator_exponent = e;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    Integer c = 0;
    for (long j = 0; j <= std::min<long>(static_cast<long>(k), e); ++j) {
      const Integer term = binomial(e, j) * counts[k - static_cast<std::size_t>(j)];
      c += (j % 2) ? Integer(-term) : term;
    }
    if (static_cast<long>(k) <= max_degree) {
      h.coeffs.push_back(c);
    } else if (c != 0) {
      throw InconsistentCounts("coefficient " + std::to_string(k) + " of the numerator is " + to_string(c) +
                               ", expected 0 beyond degree " + std::to_string(max_degree));
    }
  }
  return h;
}

HStarVector hstar_from_counts(const std::vector<Integer>& counts, int e) {
  return hstar_from_counts(counts, e, static_cast<long>(counts.size()) - 1);
}

HStarVector hstar_vector(const EhrhartProfile& profile, EhrhartPart part) {
  const int d = profile.dim;
  const std::vector<Integer>* counts = nullptr;
  int e = d + 1;
  long degree = d;
  switch (part) {
    case EhrhartPart::Polytope:
      counts = &profile.counts_polytope;
      break;
    case EhrhartPart::Boundary:
      counts = &profile.counts_boundary;
      e = d;
      break;
    case EhrhartPart::Interior:
      counts = &profile.counts_interior;
      degree = std::min<long>(profile.max_dilation, d + 1);
      break;
  }
  if (profile.max_dilation < std::max<long>(degree, d)) {
    throw std::invalid_argument("profile needs dilations up to " + std::to_string(d));
  }
  auto h = hstar_from_counts(*counts, e, degree);
  h.coeffs.resize(static_cast<std::size_t>(degree) + 1, Integer(0));
  return h;
}

std::vector<Integer> series_counts(const HStarVector& h, std::size_t length) {
  // 1 / (1 - z)^e has coefficients C(n + e - 1, e - 1).
  std::vector<Integer> out(length, Integer(0));
  const long e = h.denominator_exponent;
  for (std::size_t n = 0; n < length; ++n) {
    for (std::size_t i = 0; i <= n && i < h.coeffs.size(); ++i) {
      const long k = static_cast<long>(n - i);
      const Integer c = e == 0 ? Integer(k == 0 ? 1 : 0) : binomial(k + e - 1, e - 1);
      out[n] += h.coeffs[i] * c;
    }
  }
  return out;
}

VerificationReport reciprocity_check(const EhrhartProfile& profile) {
  const int d = profile.dim;
  const auto hp = hstar_vector(profile, EhrhartPart::Polytope);
  const auto hi = hstar_vector(profile, EhrhartPart::Interior);
  VerificationReport r;
  r.check = "reciprocity";
  r.pass = true;
  for (long i = 0; i < static_cast<long>(hi.coeffs.size()); ++i) {
    r.lhs.push_back(to_string(hi[i]));
    r.rhs.push_back(to_string(hp[d + 1 - i]));
    r.residuals.push_back(hi[i] - hp[d + 1 - i]);
    if (r.residuals.back() != 0) r.pass = false;
  }
  return r;
}

bool is_reflexive(const HStarVector& h, int d) {
  for (long j = 0; j <= d; ++j)
    if (h[j] != h[d - j]) return false;
  return h.degree() <= d;
}

bool is_reflexive(const LatticePolytope& polytope) {
  const int d = polytope.dim();
  return is_reflexive(hstar_vector(ehrhart_profile(polytope, d + 1), EhrhartPart::Polytope), d);
}

}  // namespace hstar
