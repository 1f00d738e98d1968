#include "hstar/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>

namespace hstar {

IntMatrix as_columns(const std::vector<IntVector>& points) {
  if (points.empty()) return IntMatrix(0, 0);
  IntMatrix m(points.front().size(), static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != m.rows()) throw DimensionMismatch("points of different lengths");
    m.col(static_cast<Eigen::Index>(j)) = points[j];
  }
  return m;
}

std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index n = a.cols();
  IntMatrix m(rows + n, n);
  m.topRows(rows) = a;
  m.bottomRows(n).setIdentity();

  Eigen::Index pivot_col = 0;
  for (Eigen::Index row = 0; row < rows && pivot_col < n; ++row) {
    for (Eigen::Index j = pivot_col + 1; j < n; ++j) {
      if (m(row, j) == 0) continue;
      if (m(row, pivot_col) == 0) {
        m.col(pivot_col).swap(m.col(j));
        continue;
      }
      const Integer x = m(row, pivot_col);
      const Integer y = m(row, j);
      auto [g, s, t] = extended_gcd(x, y);
      // [s  -y/g; t  x/g] has determinant 1.
      IntVector left = m.col(pivot_col) * s + m.col(j) * t;
      IntVector right = m.col(pivot_col) * Integer(-y / g) + m.col(j) * Integer(x / g);
      m.col(pivot_col) = left;
      m.col(j) = right;
    }
    if (m(row, pivot_col) != 0) ++pivot_col;
  }
  return m.bottomRightCorner(n, n - pivot_col);
}

Integer maximal_minor_gcd(const IntMatrix& m) {
  const Eigen::Index d = m.rows();
  const Eigen::Index k = m.cols();
  if (k == 0) return 1;
  if (k > d) return 0;
  std::vector<int> pick(static_cast<std::size_t>(d), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  Integer g = 0;
  IntMatrix sub(k, k);
  do {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (pick[static_cast<std::size_t>(i)]) sub.row(r++) = m.row(i);
    }
    g = boost::multiprecision::gcd(g, Integer(abs(exact_determinant(sub))));
    if (g == 1) break;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits zeros;
};

Integer dot(const IntVector& a, const IntMatrix& g, Eigen::Index row) {
  Integer s = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) s += a(k) * g(row, k);
  return s;
}

}  // namespace

std::vector<ConeFacet> cone_facets(const IntMatrix& generators) {
  const Eigen::Index m = generators.rows();
  const Eigen::Index dim = generators.cols();
  if (dim == 0) return {};

  // Greedy choice of `dim` independent rows, in input order.
  std::vector<Eigen::Index> basis;
  {
    IntMatrix chosen(0, dim);
    for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(basis.size()) < dim; ++i) {
      IntMatrix trial(chosen.rows() + 1, dim);
      trial.topRows(chosen.rows()) = chosen;
      trial.row(chosen.rows()) = generators.row(i);
      if (exact_rank(trial) == trial.rows()) {
        chosen = trial;
        basis.push_back(i);
      }
    }
    if (static_cast<Eigen::Index>(basis.size()) < dim) {
      throw std::invalid_argument("cone_facets: generators do not span the ambient space");
    }
  }

  // Initial simplicial cone: the rays are the columns of B^{-1}.
  RatMatrix b(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) b(r, c) = Rat(generators(basis[static_cast<std::size_t>(r)], c));
  }
  RatMatrix aug(dim, 2 * dim);
  aug.leftCols(dim) = b;
  aug.rightCols(dim).setZero();
  for (Eigen::Index i = 0; i < dim; ++i) aug(i, dim + i) = 1;
  for (Eigen::Index c = 0; c < dim; ++c) {
    Eigen::Index p = c;
    while (aug(p, c) == 0) ++p;
    aug.row(p).swap(aug.row(c));
    const Rat inv = Rat(1) / aug(c, c);
    aug.row(c) *= inv;
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r != c && aug(r, c) != 0) {
        const Rat f = aug(r, c);
        aug.row(r) -= aug.row(c) * f;
      }
    }
  }

  std::vector<Ray> rays;
  for (Eigen::Index k = 0; k < dim; ++k) {
    Integer lcm = 1;
    for (Eigen::Index r = 0; r < dim; ++r) lcm = boost::multiprecision::lcm(lcm, denominator(aug(r, dim + k)));
    IntVector v(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const Rat& x = aug(r, dim + k);
      v(r) = numerator(x) * (lcm / denominator(x));
    }
    Ray ray{primitive(std::move(v)), Bits(static_cast<std::size_t>(m))};
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (j != k) ray.zeros.set(static_cast<std::size_t>(basis[static_cast<std::size_t>(j)]));
    }
    rays.push_back(std::move(ray));
  }

  Bits inserted(static_cast<std::size_t>(m));
  for (Eigen::Index i : basis) inserted.set(static_cast<std::size_t>(i));

  for (Eigen::Index row = 0; row < m; ++row) {
    if (inserted.test(static_cast<std::size_t>(row))) continue;
    inserted.set(static_cast<std::size_t>(row));

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rays[r].v, generators, row);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(static_cast<std::size_t>(row));
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] >= 0) next.push_back(rays[r]);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (static_cast<Eigen::Index>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v = rays[q].v * value[p] - rays[p].v * value[q];
        common.set(static_cast<std::size_t>(row));
        next.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<ConeFacet> facets;
  facets.reserve(rays.size());
  for (const Ray& ray : rays) {
    ConeFacet f{ray.v, {}};
    for (Eigen::Index i = 0; i < m; ++i) {
      if (dot(ray.v, generators, i) == 0) f.tight.push_back(static_cast<int>(i));
    }
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const ConeFacet& a, const ConeFacet& b) { return lex_less(a.normal, b.normal); });
  return facets;
}

}  // namespace hstar
