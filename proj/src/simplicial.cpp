#include "hstar/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hstar {

namespace {

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool size_then_lex(const Face& a, const Face& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::vector<Face> maximal_only(std::vector<Face> faces) {
  for (auto& f : faces) f = make_face(std::move(f));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return size_then_lex(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (const auto& f : faces) {
    if (std::none_of(kept.begin(), kept.end(), [&](const Face& g) { return is_subset(f, g); })) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Face make_face(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

SimplicialComplex::SimplicialComplex(std::vector<int> vertex_ids, const std::vector<Face>& generators)
    : vertex_ids_(make_face(std::move(vertex_ids))), facets_(maximal_only(generators)) {
  for (const auto& f : facets_) {
    if (!is_subset(f, vertex_ids_)) throw std::invalid_argument("face uses a vertex outside the ground set");
  }
}

SimplicialComplex::SimplicialComplex(const std::vector<Face>& generators) : facets_(maximal_only(generators)) {
  for (const auto& f : facets_) vertex_ids_.insert(vertex_ids_.end(), f.begin(), f.end());
  vertex_ids_ = make_face(std::move(vertex_ids_));
}

int SimplicialComplex::dim() const {
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(const Face& face) const {
  const Face f = make_face(face);
  if (f.empty()) return !facets_.empty();
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<Face> all;
  for (const auto& facet : facets_) {
    const std::size_t n = facet.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Face f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(facet[i]);
      all.insert(std::move(f));
    }
  }
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<Face> SimplicialComplex::faces(int k) const {
  std::vector<Face> out;
  for (auto& f : faces())
    if (static_cast<int>(f.size()) == k + 1) out.push_back(std::move(f));
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
  return make_face(std::move(out));
}

std::vector<Integer> f_vector(const SimplicialComplex& complex) {
  std::vector<Integer> f(static_cast<std::size_t>(complex.dim() + 2), Integer(0));
  for (const auto& face : complex.faces()) f[face.size()] += 1;
  return f;
}

std::vector<Integer> h_from_f(const std::vector<Integer>& f) {
  // h_j = sum_{i<=j} (-1)^{j-i} C(delta - i, j - i) f_{i-1} with delta = dim + 1.
  const long delta = static_cast<long>(f.size()) - 1;
  std::vector<Integer> h(f.size(), Integer(0));
  for (long j = 0; j <= delta; ++j) {
    for (long i = 0; i <= j; ++i) {
      const Integer term = binomial(delta - i, j - i) * f[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(j)] += ((j - i) % 2) ? Integer(-term) : term;
    }
  }
  return h;
}

std::vector<Integer> h_vector(const SimplicialComplex& complex) { return h_from_f(f_vector(complex)); }

FHVector fh_vector(const SimplicialComplex& complex) {
  FHVector v;
  v.f = f_vector(complex);
  v.h = h_from_f(v.f);
  return v;
}

SimplicialComplex boundary_complex(const SimplicialComplex& cells) {
  if (!cells.is_pure()) throw std::invalid_argument("boundary_complex needs a pure complex");
  std::map<Face, int> incidence;
  for (const auto& cell : cells.facets()) {
    for (std::size_t skip = 0; skip < cell.size(); ++skip) {
      Face ridge;
      for (std::size_t i = 0; i < cell.size(); ++i)
        if (i != skip) ridge.push_back(cell[i]);
      ++incidence[ridge];
    }
  }
  std::vector<Face> boundary;
  for (const auto& [ridge, count] : incidence)
    if (count == 1) boundary.push_back(ridge);
  return SimplicialComplex(cells.vertex_ids(), boundary);
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  std::vector<Face> out;
  const auto faces = complex.faces();
  const std::set<Face> face_set(faces.begin(), faces.end());
  const auto present = complex.vertices();
  for (int v : complex.vertex_ids())
    if (!std::binary_search(present.begin(), present.end(), v)) out.push_back({v});
  // A minimal non-face S of size >= 2 is F + {v} with F a face, v > max F and
  // every facet of the boundary of S a face.
  for (const auto& f : faces) {
    if (f.empty()) continue;
    for (int v : present) {
      if (v <= f.back()) continue;
      Face s = f;
      s.push_back(v);
      if (face_set.count(s)) continue;
      bool minimal = true;
      for (std::size_t skip = 0; skip + 1 < s.size() && minimal; ++skip) {
        Face sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) sub.push_back(s[i]);
        minimal = face_set.count(sub) > 0;
      }
      if (minimal) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::optional<std::map<int, int>> balanced_coloring(const SimplicialComplex& complex) {
  const auto vs = complex.vertices();
  const int colors = complex.dim() + 1;
  std::map<int, std::set<int>> adjacent;
  for (int v : vs) adjacent[v];
  for (const auto& e : complex.faces(1)) {
    adjacent[e[0]].insert(e[1]);
    adjacent[e[1]].insert(e[0]);
  }
  std::vector<int> order = vs;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return adjacent[a].size() > adjacent[b].size(); });

  std::map<int, int> coloring;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int c = 0; c < colors; ++c) {
      bool ok = true;
      for (int u : adjacent[v]) {
        auto it = coloring.find(u);
        if (it != coloring.end() && it->second == c) ok = false;
      }
      if (!ok) continue;
      coloring[v] = c;
      if (assign(i + 1)) return true;
      coloring.erase(v);
    }
    return false;
  };
  if (colors <= 0) return vs.empty() ? std::optional<std::map<int, int>>(coloring) : std::nullopt;
  if (!assign(0)) return std::nullopt;
  return coloring;
}

bool is_balanced(const SimplicialComplex& complex) { return balanced_coloring(complex).has_value(); }

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  const Face f = make_face(face);
  std::vector<Face> gens;
  for (const auto& facet : complex.facets()) {
    if (!is_subset(f, facet)) continue;
    Face rest;
    std::set_difference(facet.begin(), facet.end(), f.begin(), f.end(), std::back_inserter(rest));
    gens.push_back(std::move(rest));
  }
  return SimplicialComplex(gens);
}

}  // namespace hstar
