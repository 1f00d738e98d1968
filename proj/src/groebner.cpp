#include "hstar/groebner.hpp"

#include "hstar/lattice.hpp"
#include "hstar/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace hstar {

Monomial::Monomial(Exponents e) : e_(std::move(e)), degree_(e_.sum()) {
  if ((e_.array() < 0).any()) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::variable(int n, int i) {
  Exponents e = Exponents::Zero(n);
  e(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree(int n, const std::vector<int>& support) {
  Exponents e = Exponents::Zero(n);
  for (int i : support) e(i) = 1;
  return Monomial(std::move(e));
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (e_(i) > 0) out.push_back(i);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  return Monomial(Exponents(e_ - other.e_));
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return std::lexicographical_compare(a.e_.data(), a.e_.data() + a.e_.size(), b.e_.data(),
                                      b.e_.data() + b.e_.size());
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<std::size_t>(i)];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

std::string to_string(const Monomial& m) { return to_string(m, default_names(m.nvars())); }

std::string to_string(const Binomial& b, const std::vector<std::string>& names) {
  if (b.is_monomial()) return to_string(b.lead, names);
  return to_string(b.lead, names) + " - " + to_string(*b.trail, names);
}

std::string to_string(const Binomial& b) { return to_string(b, default_names(b.lead.nvars())); }

TermOrder TermOrder::grevlex(int n) {
  TermOrder t;
  t.n_ = n;
  for (int i = 0; i < n; ++i) t.rank_.push_back(i);
  t.by_rank_ = t.rank_;
  return t;
}

TermOrder TermOrder::grevlex_last(int n, int last) {
  TermOrder t;
  t.n_ = n;
  t.rank_.assign(static_cast<std::size_t>(n), 0);
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (i != last) t.rank_[static_cast<std::size_t>(i)] = r++;
  t.rank_[static_cast<std::size_t>(last)] = n - 1;
  t.by_rank_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) t.by_rank_[static_cast<std::size_t>(t.rank_[static_cast<std::size_t>(i)])] = i;
  return t;
}

TermOrder TermOrder::weighted(const std::vector<Rat>& weights) {
  TermOrder t = grevlex(static_cast<int>(weights.size()));
  if (weights.empty()) return t;
  Integer scale = 1;
  for (const Rat& w : weights) scale = boost::multiprecision::lcm(scale, denominator(w));
  std::vector<Integer> scaled;
  for (const Rat& w : weights) scaled.push_back(numerator(w) * (scale / denominator(w)));
  const Integer low = *std::min_element(scaled.begin(), scaled.end());
  const Integer limit = Integer(1) << 62;
  for (const Integer& w : scaled) {
    const Integer shifted = w - low + 1;
    if (shifted >= limit) throw std::overflow_error("term order weights do not fit in 62 bits after scaling");
    t.weight_.push_back(static_cast<std::int64_t>(shifted));
  }
  return t;
}

TermOrder TermOrder::weighted(const WeightFunction& weights, int n) {
  std::vector<Rat> w;
  for (int i = 0; i < n; ++i) w.push_back(weights.at(i));
  return weighted(w);
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!weight_.empty()) {
    __int128 wa = 0, wb = 0;
    for (int i = 0; i < n_; ++i) {
      wa += static_cast<__int128>(weight_[static_cast<std::size_t>(i)]) * a[i];
      wb += static_cast<__int128>(weight_[static_cast<std::size_t>(i)]) * b[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int r = n_ - 1; r >= 0; --r) {
    const int v = by_rank_[static_cast<std::size_t>(r)];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

TermOrder TermOrder::restricted(const std::vector<int>& variables) const {
  TermOrder t;
  t.n_ = static_cast<int>(variables.size());
  for (int v : variables)
    if (!weight_.empty()) t.weight_.push_back(weight_[static_cast<std::size_t>(v)]);
  std::vector<int> order(variables.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return rank_[static_cast<std::size_t>(variables[static_cast<std::size_t>(x)])] <
           rank_[static_cast<std::size_t>(variables[static_cast<std::size_t>(y)])];
  });
  t.rank_.assign(variables.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) t.rank_[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
  t.by_rank_ = order;
  return t;
}

Binomial Binomial::oriented(const TermOrder& order) const {
  if (is_monomial() || order.compare(lead, *trail) >= 0) return *this;
  return Binomial{*trail, lead};
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators, std::optional<int> valid_through)
    : n_(nvars), valid_through_(valid_through) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& g : generators) {
    if (g.nvars() != n_) throw DimensionMismatch("generator has the wrong number of variables");
    if (std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(g); }))
      gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::optional<int> cap = a.valid_through();
  if (b.valid_through()) cap = cap ? std::min(*cap, *b.valid_through()) : b.valid_through();
  return MonomialIdeal(std::max(a.nvars(), b.nvars()), std::move(gens), cap);
}

MonomialIdeal radical_monomial(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.radical());
  return MonomialIdeal(ideal.nvars(), std::move(gens), ideal.valid_through());
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal squarefree_ideal(int nvars, const std::vector<std::vector<int>>& sets) {
  std::vector<Monomial> gens;
  for (const auto& s : sets) gens.push_back(Monomial::squarefree(nvars, s));
  return MonomialIdeal(nvars, std::move(gens));
}

namespace {

// Standard monomials of degree m by splitting on a pivot variable x:
// S(I, m) = S(I + <x>, m) + S(I : x, m - 1).
class HilbertCounter {
 public:
  Integer count(const std::vector<Monomial>& gens, int alive, int m) {
    if (m < 0) return 0;
    if (gens.empty()) return binomial(alive + m - 1, m);
    if (gens.front().is_one()) return 0;
    std::string key = std::to_string(alive) + ":" + std::to_string(m);
    for (const auto& g : gens) {
      key += "|";
      for (int i = 0; i < g.nvars(); ++i) key += std::to_string(g[i]) + ",";
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int n = gens.front().nvars();
    std::vector<int> freq(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens)
      for (int i = 0; i < n; ++i)
        if (g[i] > 0) ++freq[static_cast<std::size_t>(i)];
    const int x = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<Monomial> without, quotient;
    for (const auto& g : gens) {
      if (g[x] == 0) without.push_back(g);
      Exponents e = g.exponents();
      if (e(x) > 0) e(x) -= 1;
      quotient.emplace_back(std::move(e));
    }
    const Integer total = count(MonomialIdeal(n, without).generators(), alive - 1, m) +
                          count(MonomialIdeal(n, quotient).generators(), alive, m - 1);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::string, Integer> memo_;
};

}  // namespace

Integer hilbert_function(const MonomialIdeal& ideal, int m) {
  if (ideal.valid_through() && m > *ideal.valid_through()) {
    throw CapTooLowForQuery("Hilbert function queried in degree " + std::to_string(m) +
                            " but the ideal is only known through degree " +
                            std::to_string(*ideal.valid_through()));
  }
  HilbertCounter counter;
  return counter.count(ideal.generators(), ideal.nvars(), m);
}

namespace {

// One reduction step of f's term `t` by g, where lead(g) | t. Returns the
// replacement term, or nullopt if g is a monomial (the term vanishes).
std::optional<Monomial> rewrite(const Monomial& t, const Binomial& g) {
  if (g.is_monomial()) return std::nullopt;
  return (t / g.lead) * *g.trail;
}

const Binomial* find_reducer(const std::vector<Binomial>& basis, const Monomial& t, const Binomial* skip = nullptr) {
  for (const auto& g : basis)
    if (&g != skip && g.lead.divides(t)) return &g;
  return nullptr;
}

// Full reduction of f modulo the basis; nullopt for zero.
std::optional<Binomial> reduce(Binomial f, const std::vector<Binomial>& basis, const TermOrder& order,
                               const Binomial* skip = nullptr) {
  f = f.oriented(order);
  while (true) {
    if (const Binomial* g = find_reducer(basis, f.lead, skip)) {
      auto t = rewrite(f.lead, *g);
      if (f.is_monomial()) {
        if (!t) return std::nullopt;
        f.lead = *t;
      } else if (!t) {
        f = Binomial{*f.trail, std::nullopt};
      } else if (*t == *f.trail) {
        return std::nullopt;
      } else {
        f = Binomial{*t, f.trail}.oriented(order);
      }
      continue;
    }
    if (!f.is_monomial()) {
      if (const Binomial* g = find_reducer(basis, *f.trail, skip)) {
        auto t = rewrite(*f.trail, *g);
        if (!t) {
          f.trail.reset();
        } else if (*t == f.lead) {
          return std::nullopt;
        } else {
          f = Binomial{f.lead, *t}.oriented(order);
        }
        continue;
      }
    }
    return f;
  }
}

std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g) {
  const Monomial l = f.lead.lcm(g.lead);
  const auto a = f.is_monomial() ? std::nullopt : std::optional<Monomial>((l / f.lead) * *f.trail);
  const auto b = g.is_monomial() ? std::nullopt : std::optional<Monomial>((l / g.lead) * *g.trail);
  if (!a && !b) return std::nullopt;
  if (!a) return Binomial{*b, std::nullopt};
  if (!b) return Binomial{*a, std::nullopt};
  if (*a == *b) return std::nullopt;
  return Binomial{*a, *b};
}

void check_homogeneous(const Binomial& f) {
  if (!f.is_monomial() && f.lead.degree() != f.trail->degree())
    throw std::invalid_argument("buchberger expects homogeneous binomials");
}

}  // namespace

std::optional<Binomial> GroebnerBasis::normal_form(const Binomial& f) const {
  if (cap_ && f.degree() > *cap_) {
    throw CapTooLowForQuery("normal form in degree " + std::to_string(f.degree()) + " beyond cap " +
                            std::to_string(*cap_));
  }
  return reduce(f, elements_, order_);
}

GroebnerBasis buchberger(const std::vector<Binomial>& generators, const TermOrder& order,
                         std::optional<int> degree_cap) {
  std::vector<Binomial> basis;
  basis.reserve(generators.size() * 4);

  // Pairs ordered by degree of the lcm, then the term order on it, then indices.
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  auto later = [&order](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::set<std::pair<int, int>> pending;

  auto add = [&](Binomial h) {
    const int k = static_cast<int>(basis.size());
    basis.push_back(std::move(h));
    for (int i = 0; i < k; ++i) {
      Monomial l = basis[static_cast<std::size_t>(i)].lead.lcm(basis[static_cast<std::size_t>(k)].lead);
      if (degree_cap && l.degree() > *degree_cap) continue;
      queue.push(Pair{i, k, std::move(l)});
      pending.emplace(i, k);
    }
  };

  for (const auto& f : generators) {
    check_homogeneous(f);
    if (degree_cap && f.degree() > *degree_cap) continue;
    if (auto h = reduce(f, basis, order)) add(std::move(*h));
  }

  while (!queue.empty()) {
    const Pair p = queue.top();
    queue.pop();
    pending.erase({p.i, p.j});
    const Binomial& f = basis[static_cast<std::size_t>(p.i)];
    const Binomial& g = basis[static_cast<std::size_t>(p.j)];
    if (f.lead.coprime(g.lead)) continue;
    // Chain criterion: some lead divides the lcm and both partner pairs are done.
    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == p.i || k == p.j || !basis[static_cast<std::size_t>(k)].lead.divides(p.lcm)) continue;
      chain = !pending.count({std::min(p.i, k), std::max(p.i, k)}) &&
              !pending.count({std::min(p.j, k), std::max(p.j, k)});
    }
    if (chain) continue;
    auto s = s_polynomial(f, g);
    if (!s) continue;
    if (auto h = reduce(*s, basis, order)) add(std::move(*h));
  }

  // Reduced basis: drop elements whose lead is divisible by another lead,
  // then reduce the trails.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead.divides(basis[i].lead)) continue;
      redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Binomial> reduced;
  for (const auto& g : minimal) {
    auto r = reduce(g, minimal, order, &g);
    if (r) reduced.push_back(std::move(*r));
  }
  std::sort(reduced.begin(), reduced.end(), [&order](const Binomial& a, const Binomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const int c = order.compare(a.lead, b.lead);
    if (c != 0) return c < 0;
    return a.is_monomial() > b.is_monomial();
  });
  return GroebnerBasis(order, std::move(reduced), degree_cap);
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.elements()) leads.push_back(g.lead);
  return MonomialIdeal(gb.order().nvars(), std::move(leads), gb.degree_cap());
}

namespace {

int to_exponent(const Integer& x) {
  if (x > std::numeric_limits<int>::max()) throw std::overflow_error("exponent exceeds int range");
  return static_cast<int>(x);
}

// Pairwise size reduction of the columns: b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j
// until no norm drops. The lattice is unchanged; short vectors keep the
// saturation Gröbner bases small.
void size_reduce(IntMatrix& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < basis.cols(); ++i) {
      for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        if (i == j) continue;
        const Integer bj = basis.col(j).squaredNorm();
        const Integer ij = basis.col(i).dot(basis.col(j));
        // Nearest integer to ij / bj.
        Integer q = (2 * ij + bj) / (2 * bj);
        if (2 * ij + bj < 0 && (2 * ij + bj) % (2 * bj) != 0) q -= 1;
        if (q == 0) continue;
        const IntVector candidate = basis.col(i) - q * basis.col(j);
        if (candidate.squaredNorm() < basis.col(i).squaredNorm()) {
          basis.col(i) = candidate;
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::vector<Binomial> toric_ideal_generators(const std::vector<LatticePoint>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return {};
  const Eigen::Index d = points.front().size();
  IntMatrix a(d + 1, n);
  for (int j = 0; j < n; ++j) {
    a.col(j).head(d) = points[static_cast<std::size_t>(j)];
    a(d, j) = 1;
  }
  IntMatrix kernel = integer_kernel_basis(a);
  size_reduce(kernel);
  std::vector<Binomial> gens;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    Exponents plus = Exponents::Zero(n), minus = Exponents::Zero(n);
    for (int i = 0; i < n; ++i) {
      const Integer& u = kernel(i, c);
      if (u > 0) plus(i) = to_exponent(u);
      if (u < 0) minus(i) = to_exponent(-u);
    }
    gens.push_back(Binomial{Monomial(plus), Monomial(minus)});
  }
  if (gens.empty()) return {};

  // I_A = I_L : (x_0 ... x_{n-1})^∞, one variable at a time. In grevlex with
  // x_i last, dividing each basis element by its x_i-content saturates by x_i.
  for (int i = 0; i < n; ++i) {
    const auto gb = buchberger(gens, TermOrder::grevlex_last(n, i));
    gens.clear();
    for (const auto& g : gb.elements()) {
      const int k = std::min(g.lead[i], (*g.trail)[i]);
      if (k == 0) {
        gens.push_back(g);
        continue;
      }
      Exponents common = Exponents::Zero(n);
      common(i) = k;
      const Monomial x(common);
      gens.push_back(Binomial{g.lead / x, *g.trail / x});
    }
  }
  return buchberger(gens, TermOrder::grevlex(n)).elements();
}

std::vector<Binomial> toric_ideal_generators(const PointConfiguration& config) {
  return toric_ideal_generators(config.points());
}

std::vector<Binomial> fiber_generators(const PointConfiguration& config, int max_degree) {
  const int n = config.size();
  const TermOrder order = TermOrder::grevlex(n);
  std::vector<Binomial> out;
  for (int m = 2; m <= max_degree; ++m) {
    std::map<std::vector<Integer>, std::vector<Exponents>> fibers;
    std::vector<int> choice(static_cast<std::size_t>(m), 0);
    while (true) {
      Exponents e = Exponents::Zero(n);
      std::vector<Integer> sum(static_cast<std::size_t>(config.dim()), Integer(0));
      for (int c : choice) {
        ++e(c);
        const auto& p = config.points()[static_cast<std::size_t>(c)];
        for (int k = 0; k < config.dim(); ++k) sum[static_cast<std::size_t>(k)] += p(k);
      }
      fibers[sum].push_back(e);
      // Next nondecreasing sequence.
      int k = m - 1;
      while (k >= 0 && choice[static_cast<std::size_t>(k)] == n - 1) --k;
      if (k < 0) break;
      ++choice[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < m; ++j) choice[static_cast<std::size_t>(j)] = choice[static_cast<std::size_t>(k)];
    }
    for (const auto& [sum, reps] : fibers)
      for (std::size_t r = 1; r < reps.size(); ++r)
        out.push_back(Binomial{Monomial(reps[0]), Monomial(reps[r])}.oriented(order));
  }
  return out;
}

bool gamma_in_interior(const PointConfiguration& config, const Monomial& m) {
  for (const auto& f : config.polytope().facets()) {
    Integer lhs = 0;
    for (int i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) lhs += f.normal.dot(config.points()[static_cast<std::size_t>(i)]) * m[i];
    if (lhs >= f.offset * m.degree()) return false;
  }
  return true;
}

MonomialIdeal interior_monomial_ideal(const PointConfiguration& config) {
  const int n = config.size();
  std::vector<std::vector<bool>> on_facet;
  for (const auto& f : config.polytope().facets()) {
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    for (int i : config.facet_points(f)) mask[static_cast<std::size_t>(i)] = true;
    on_facet.push_back(std::move(mask));
  }
  auto covered = [&](const std::vector<int>& s) {
    return std::any_of(on_facet.begin(), on_facet.end(), [&](const std::vector<bool>& mask) {
      return std::all_of(s.begin(), s.end(), [&](int i) { return mask[static_cast<std::size_t>(i)]; });
    });
  };

  std::vector<Monomial> gens;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < n; ++i) {
    if (covered({i})) {
      level.push_back({i});
    } else {
      gens.push_back(Monomial::variable(n, i));
    }
  }
  // A minimal uncovered set has every maximal proper subset covered.
  while (!level.empty()) {
    const std::set<std::vector<int>> previous(level.begin(), level.end());
    std::vector<std::vector<int>> next;
    for (const auto& t : level) {
      for (int v = t.back() + 1; v < n; ++v) {
        if (!config.boundary_mask()[static_cast<std::size_t>(v)]) continue;
        std::vector<int> s = t;
        s.push_back(v);
        bool faces_covered = true;
        for (std::size_t skip = 0; skip + 1 < s.size() && faces_covered; ++skip) {
          std::vector<int> sub;
          for (std::size_t k = 0; k < s.size(); ++k)
            if (k != skip) sub.push_back(s[k]);
          faces_covered = previous.count(sub) > 0;
        }
        if (!faces_covered) continue;
        if (covered(s)) {
          next.push_back(std::move(s));
        } else {
          gens.push_back(Monomial::squarefree(n, s));
        }
      }
    }
    level = std::move(next);
  }
  for (const auto& g : gens) {
    if (!gamma_in_interior(config, g)) throw std::logic_error("interior monomial generator fails the γ criterion");
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<Binomial> as_generators(const MonomialIdeal& ideal) {
  std::vector<Binomial> out;
  for (const auto& g : ideal.generators()) out.push_back(Binomial{g, std::nullopt});
  return out;
}

std::vector<Binomial> BoundaryIdeal::generators() const {
  std::vector<Binomial> out = toric;
  const auto mono = as_generators(interior);
  out.insert(out.end(), mono.begin(), mono.end());
  return out;
}

BoundaryIdeal boundary_ideal(const PointConfiguration& config) {
  return BoundaryIdeal{toric_ideal_generators(config), interior_monomial_ideal(config)};
}

namespace {

std::vector<std::string> render(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

// Generators on one side only, as residual counts (lhs-only, rhs-only).
std::vector<Integer> ideal_residuals(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  long only_lhs = 0, only_rhs = 0;
  for (const auto& g : lhs.generators())
    if (std::find(rhs.generators().begin(), rhs.generators().end(), g) == rhs.generators().end()) ++only_lhs;
  for (const auto& g : rhs.generators())
    if (std::find(lhs.generators().begin(), lhs.generators().end(), g) == lhs.generators().end()) ++only_rhs;
  return {Integer(only_lhs), Integer(only_rhs)};
}

VerificationReport compare_ideals(std::string check, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  VerificationReport r;
  r.check = std::move(check);
  r.lhs = render(lhs);
  r.rhs = render(rhs);
  r.residuals = ideal_residuals(lhs, rhs);
  r.pass = lhs == rhs;
  return r;
}

std::string facet_label(const FacetInequality& f) {
  return to_string(f.normal) + ".x<=" + to_string(f.offset);
}

// ω - Σ ε^(n-i) e_i with ε below every minor of the lifted point matrix, so the
// induced subdivision is the triangulation selected by the grevlex tie-break.
WeightFunction grevlex_refinement(const PointConfiguration& config, const WeightFunction& weights) {
  const int n = config.size();
  Integer scale = 1;
  for (const auto& [i, w] : weights.values) scale = boost::multiprecision::lcm(scale, denominator(w));
  Integer bound = 1;
  for (const auto& [i, w] : weights.values) bound = std::max(bound, Integer(abs(numerator(w)) * (scale / denominator(w))));
  for (const auto& p : config.points())
    for (Eigen::Index k = 0; k < p.size(); ++k) bound = std::max(bound, Integer(abs(p(k))));
  Integer minor = 1;
  for (int k = 1; k <= config.dim() + 2; ++k) minor *= k * (bound + 1);
  const Rat eps(Integer(1), minor + 1);
  std::vector<Rat> refined;
  Rat step = 1;
  std::vector<Rat> powers(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    step *= eps;
    powers[static_cast<std::size_t>(i)] = step;
  }
  for (int i = 0; i < n; ++i)
    refined.push_back(weights.at(i) * Rat(scale) - powers[static_cast<std::size_t>(i)]);
  return make_weights(config, WeightSupport::Full, refined);
}

}  // namespace

VerificationReport verify_sturmfels(const PointConfiguration& config, const WeightFunction& weights) {
  const int n = config.size();
  const auto gb = buchberger(toric_ideal_generators(config), TermOrder::weighted(weights, n));
  const auto in = initial_ideal(gb);
  auto cells = regular_subdivision(config, weights);
  const bool generic = is_triangulation(cells, config);
  if (!generic) cells = regular_subdivision(config, grevlex_refinement(config, weights));
  const auto sr = squarefree_ideal(n, minimal_nonfaces(as_complex(cells, config)));
  auto r = compare_ideals("sturmfels", radical_monomial(in), sr);
  if (!generic) r.notes.push_back("weights are not generic: compared against the grevlex refinement of the subdivision");
  r.notes.push_back(std::string("initial ideal is ") + (is_squarefree(in) ? "squarefree" : "not squarefree"));
  r.notes.push_back(std::string("triangulation is ") + (is_unimodular(cells, config) ? "unimodular" : "not unimodular"));
  return r;
}

ReportList verify_boundary_sturmfels(const PointConfiguration& config, const WeightFunction& boundary_weights,
                                     std::uint64_t seed) {
  const int n = config.size();
  const auto delta = boundary_triangulation(config, boundary_weights);
  const auto ext = extend_boundary_weights(config, boundary_weights, seed);
  const auto order = TermOrder::weighted(ext.weights, n);

  const auto parts = boundary_ideal(config);
  const auto in_p = initial_ideal(buchberger(parts.toric, order));
  const auto in_b = initial_ideal(buchberger(parts.generators(), order));
  const auto i_delta = squarefree_ideal(n, minimal_nonfaces(delta));

  ReportList reports;
  auto main = compare_ideals("boundary_sturmfels", radical_monomial(in_b), i_delta);
  main.notes = ext.notes;
  for (const auto& g : parts.interior.generators())
    if (g.degree() >= 3) main.notes.push_back("interior monomial generator of degree >= 3: " + to_string(g));
  reports.push_back(std::move(main));

  VerificationReport sq;
  sq.check = "boundary_squarefree_iff_unimodular";
  const bool squarefree = is_squarefree(in_b);
  const bool unimodular = is_boundary_unimodular(delta, config);
  sq.lhs = {squarefree ? "squarefree" : "not squarefree"};
  sq.rhs = {unimodular ? "unimodular" : "not unimodular"};
  sq.residuals = {Integer(squarefree == unimodular ? 0 : 1)};
  sq.pass = squarefree == unimodular;
  reports.push_back(std::move(sq));

  reports.push_back(compare_ideals("initial_decomposition", in_b, in_p + parts.interior));

  VerificationReport hilb;
  hilb.check = "boundary_hilbert";
  const int d = config.dim();
  const auto profile = ehrhart_profile(config.polytope(), d);
  hilb.pass = true;
  for (int m = 0; m <= d; ++m) {
    const Integer h = hilbert_function(in_b, m);
    const Integer& l = profile.counts_boundary[static_cast<std::size_t>(m)];
    hilb.lhs.push_back(to_string(h));
    hilb.rhs.push_back(to_string(l));
    hilb.residuals.push_back(h - l);
    if (h != l) hilb.pass = false;
  }
  reports.push_back(std::move(hilb));

  for (const auto& facet : config.polytope().facets()) {
    const auto idx = config.facet_points(facet);
    std::vector<LatticePoint> pts;
    for (int i : idx) pts.push_back(config.points()[static_cast<std::size_t>(i)]);
    const auto facet_order = order.restricted(idx);
    const auto in_f_local = initial_ideal(buchberger(toric_ideal_generators(pts), facet_order));
    // Lift facet-local variables back to global indices.
    std::vector<Monomial> in_f;
    for (const auto& g : in_f_local.generators()) {
      Exponents e = Exponents::Zero(n);
      for (std::size_t k = 0; k < idx.size(); ++k) e(idx[k]) = g[static_cast<int>(k)];
      in_f.emplace_back(std::move(e));
    }
    std::vector<Monomial> on_f;
    for (const auto& g : in_b.generators()) {
      const auto s = g.support();
      if (std::includes(idx.begin(), idx.end(), s.begin(), s.end())) on_f.push_back(g);
    }
    auto r = compare_ideals("facet_restriction", MonomialIdeal(n, on_f), MonomialIdeal(n, in_f));
    r.notes.push_back("facet " + facet_label(facet));
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace hstar
