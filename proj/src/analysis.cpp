#include "hstar/analysis.hpp"

#include "hstar/simplicial.hpp"

namespace hstar {

namespace {

Integer choose(const Integer& n, int k) {
  if (k < 0 || n < k) return 0;
  Integer result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Largest a with C(a, i) <= nu, for nu >= 1.
Integer top_of_expansion(const Integer& nu, int i) {
  Integer lo = i, hi = i + 1;
  while (choose(hi, i) <= nu) hi *= 2;
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    (choose(mid, i) <= nu ? lo : hi) = mid;
  }
  return lo;
}

std::string indexed(const char* name, long i, const Integer& value) {
  return std::string(name) + "_" + std::to_string(i) + "=" + to_string(value);
}

}  // namespace

GStarVector g_star(const HStarVector& hp, const HStarVector& hb, int d) {
  GStarVector g;
  for (long i = 0; i <= d / 2; ++i) {
    g.entries.push_back(hb[i] - hb[i - 1]);
    g.alt_entries.push_back(hp[i] - hp[d - i + 1]);
  }
  return g;
}

VerificationReport dehn_sommerville(const HStarVector& hp, const HStarVector& hb, int d) {
  VerificationReport r;
  r.check = "dehn_sommerville";
  r.pass = true;
  for (long i = 0; i <= d; ++i) {
    const Integer lhs = hp[i] - hp[d - i + 1];
    const Integer rhs = hb[i] - hb[i - 1];
    r.lhs.push_back(to_string(lhs));
    r.rhs.push_back(to_string(rhs));
    r.residuals.push_back(lhs - rhs);
    if (lhs != rhs) r.pass = false;
  }
  return r;
}

Integer macaulay_pseudopower(const Integer& nu, int i) {
  if (nu < 0 || i < 1) throw std::invalid_argument("macaulay_pseudopower needs nu >= 0 and i >= 1");
  Integer rest = nu, out = 0;
  for (int k = i; k >= 1 && rest > 0; --k) {
    const Integer a = top_of_expansion(rest, k);
    rest -= choose(a, k);
    out += choose(a + 1, k + 1);
  }
  return out;
}

bool is_M_sequence(const std::vector<Integer>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i + 1] > macaulay_pseudopower(v[i], static_cast<int>(i))) return false;
  }
  return true;
}

ReportList g_theorem_checks(const HStarVector& hb, int d) {
  ReportList out;

  VerificationReport pal;
  pal.check = "palindromy";
  pal.pass = true;
  for (long j = 0; j <= d; ++j) {
    pal.lhs.push_back(to_string(hb[j]));
    pal.rhs.push_back(to_string(hb[d - j]));
    pal.residuals.push_back(hb[j] - hb[d - j]);
    if (hb[j] != hb[d - j]) pal.pass = false;
  }
  out.push_back(std::move(pal));

  VerificationReport uni;
  uni.check = "unimodality";
  uni.pass = true;
  for (long j = 1; j <= d / 2; ++j) {
    uni.lhs.push_back(indexed("h", j - 1, hb[j - 1]));
    uni.rhs.push_back(indexed("h", j, hb[j]));
    uni.residuals.push_back(hb[j] - hb[j - 1]);
    if (hb[j] < hb[j - 1]) uni.pass = false;
  }
  out.push_back(std::move(uni));

  VerificationReport m;
  m.check = "g_star_m_sequence";
  std::vector<Integer> g;
  for (long i = 0; i <= d / 2; ++i) g.push_back(hb[i] - hb[i - 1]);
  m.lhs = render_each(g);
  m.pass = is_M_sequence(g);
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    const Integer bound = g[i] < 0 ? Integer(0) : macaulay_pseudopower(g[i], static_cast<int>(i));
    m.rhs.push_back("<=" + to_string(bound));
    m.residuals.push_back(bound - g[i + 1]);
  }
  out.push_back(std::move(m));
  return out;
}

std::optional<int> glbt_equality_r(const HStarVector& hb, int d) {
  std::optional<int> best;
  for (int r = d / 2; r >= 1; --r) {
    if (hb[r] != hb[r - 1]) break;
    best = r;
  }
  return best;
}

VerificationReport glbt_report(const HStarVector& hb, int d) {
  VerificationReport r;
  r.check = "glbt";
  r.pass = true;
  const auto eq = glbt_equality_r(hb, d);
  r.lhs.push_back(eq ? "r=" + std::to_string(*eq) : "r=none");
  if (eq) r.notes.push_back("boundary triangulation is " + std::to_string(*eq - 1) + "-stacked (by equivalence, no witness built)");
  for (long j = 1; j <= d / 2; ++j) r.residuals.push_back(hb[j] - hb[j - 1]);
  return r;
}

VerificationReport reflexive_propagation(const HStarVector& hp, int d) {
  VerificationReport r;
  r.check = "reflexive_propagation";
  r.pass = true;
  if (!is_reflexive(hp, d)) {
    r.skipped = true;
    r.notes.push_back("not applicable: h* is not palindromic, so P is not reflexive");
    return r;
  }
  for (long j = 1; j <= d - j + 1; ++j) {
    if (hp[j] != hp[d - j + 1]) continue;
    for (long i = j; i <= d - j + 1; ++i) {
      r.lhs.push_back(indexed("h*", i, hp[i]));
      r.rhs.push_back(indexed("h*", j, hp[j]));
      r.residuals.push_back(hp[i] - hp[j]);
      if (hp[i] != hp[j]) r.pass = false;
    }
    r.notes.push_back("equality at j=" + std::to_string(j));
    break;
  }
  if (r.residuals.empty()) r.notes.push_back("no j with h*_j = h*_{d-j+1}; vacuous");
  return r;
}

VerificationReport bounds_check(const HStarVector& hp, const HStarVector& hb, int d, std::optional<bool> balanced) {
  VerificationReport r;
  r.check = "bounds";
  r.pass = true;
  auto record = [&r](std::string lhs, std::string rhs, Integer slack) {
    r.lhs.push_back(std::move(lhs));
    r.rhs.push_back(std::move(rhs));
    if (slack < 0) r.pass = false;
    r.residuals.push_back(std::move(slack));
  };
  const int half = d / 2;
  const Integer h1 = hb[1];
  std::vector<Integer> g(static_cast<std::size_t>(half) + 1, Integer(0));
  for (int i = 1; i <= half; ++i) {
    g[static_cast<std::size_t>(i)] = hp[i] - hp[d - i + 1];
    const Integer& gi = g[static_cast<std::size_t>(i)];
    const Integer upper = choose(h1 + i - 2, i);
    record(indexed("g*", i, gi), ">=0", gi);
    record(indexed("g*", i, gi), "<=" + to_string(upper), upper - gi);
  }
  for (int l = 1; l <= half; ++l) {
    Integer sum = 0;
    for (int k = l; k <= half; ++k) {
      sum += g[static_cast<std::size_t>(k)];
      const Integer upper = choose(h1 + k - 1, k) - choose(h1 + l - 2, l - 1);
      const std::string label = "sum_" + std::to_string(l) + ".." + std::to_string(k) + "=" + to_string(sum);
      record(label, ">=0", sum);
      record(label, "<=" + to_string(upper), upper - sum);
    }
  }
  if (balanced.value_or(false)) {
    for (int i = 1; i <= half; ++i) {
      const Integer lhs = i * g[static_cast<std::size_t>(i)];
      const Integer rhs = (d - 2 * i + 1) * hb[i - 1];
      record(std::to_string(i) + "*" + indexed("g*", i, g[static_cast<std::size_t>(i)]), ">=" + to_string(rhs),
             lhs - rhs);
    }
    r.notes.push_back("lower bound evaluated with a balanced boundary triangulation");
  } else {
    r.notes.push_back(balanced ? "boundary triangulation is not balanced; lower bound not evaluated"
                               : "no balancedness witness; lower bound not evaluated");
  }
  return r;
}

HStarPair hstar_pair(const LatticePolytope& polytope) {
  const auto profile = ehrhart_profile(polytope, polytope.dim() + 1);
  return {polytope.dim(), hstar_vector(profile, EhrhartPart::Polytope), hstar_vector(profile, EhrhartPart::Boundary)};
}

namespace {

VerificationReport compare_vectors(std::string check, std::vector<Integer> lhs, const HStarVector& rhs) {
  VerificationReport r;
  r.check = std::move(check);
  r.pass = true;
  std::vector<Integer> padded;
  const std::size_t len = std::max(lhs.size(), rhs.coeffs.size());
  lhs.resize(len, Integer(0));
  for (std::size_t i = 0; i < len; ++i) {
    padded.push_back(rhs[static_cast<long>(i)]);
    r.residuals.push_back(lhs[i] - padded.back());
    if (r.residuals.back() != 0) r.pass = false;
  }
  r.lhs = render_each(lhs);
  r.rhs = render_each(padded);
  return r;
}

}  // namespace

VerificationReport betke_mcmullen(const PointConfiguration& config, const RUTCertificate& certificate) {
  const auto h = hstar_pair(config.polytope());
  return compare_vectors("betke_mcmullen", h_vector(as_complex(certificate.cells(), config)), h.polytope);
}

VerificationReport stapledon(const PointConfiguration& config, const BoundaryRUTCertificate& certificate) {
  const auto h = hstar_pair(config.polytope());
  return compare_vectors("stapledon", h_vector(certificate.delta()), h.boundary);
}

ReportList certified_checks(const PointConfiguration& config, const BoundaryRUTCertificate& certificate) {
  const auto h = hstar_pair(config.polytope());
  const int d = h.dim;
  ReportList out;
  out.push_back(stapledon(config, certificate));
  for (auto& r : g_theorem_checks(h.boundary, d)) out.push_back(std::move(r));
  out.push_back(glbt_report(h.boundary, d));
  out.push_back(reflexive_propagation(h.polytope, d));
  out.push_back(bounds_check(h.polytope, h.boundary, d, is_balanced(certificate.delta())));
  return out;
}

}  // namespace hstar
