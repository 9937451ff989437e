#include "deltakit/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace deltakit {

namespace {

// Facet family over an arbitrary (sorted) vertex set; the working
// representation during reductions, keeping original labels.
struct LabeledComplex {
  std::vector<int> vertices;
  std::vector<std::set<int>> facets;
};

std::vector<std::set<int>> maximalize(std::vector<std::set<int>> facets) {
  std::vector<std::set<int>> out;
  for (const auto& a : facets) {
    if (a.empty()) continue;
    bool dominated = false;
    for (const auto& b : facets)
      if (&a != &b && a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledComplex to_labeled(const SimplicialComplex& S) {
  LabeledComplex L;
  L.vertices.resize(static_cast<size_t>(S.ground_size()));
  std::iota(L.vertices.begin(), L.vertices.end(), 0);
  L.facets = S.facets();
  return L;
}

int facet_count_containing(const LabeledComplex& L, int v) {
  int count = 0;
  for (const auto& facet : L.facets) count += facet.count(v) ? 1 : 0;
  return count;
}

void remove_vertex(LabeledComplex& L, int v) {
  L.vertices.erase(std::remove(L.vertices.begin(), L.vertices.end(), v), L.vertices.end());
  std::vector<std::set<int>> next;
  next.reserve(L.facets.size());
  for (auto facet : L.facets) {
    facet.erase(v);
    next.push_back(std::move(facet));
  }
  L.facets = maximalize(std::move(next));
}

bool labeled_contains(const LabeledComplex& L, const std::set<int>& simplex) {
  for (const auto& facet : L.facets)
    if (std::includes(facet.begin(), facet.end(), simplex.begin(), simplex.end())) return true;
  return false;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<std::set<int>> facets)
    : ground_size_(ground_size), facets_(maximalize(std::move(facets))) {
  if (ground_size_ < 0) throw std::invalid_argument("SimplicialComplex: negative ground size");
  std::vector<bool> covered(static_cast<size_t>(ground_size_), false);
  for (const auto& facet : facets_)
    for (int v : facet) {
      if (v < 0 || v >= ground_size_)
        throw std::invalid_argument("SimplicialComplex: vertex " + std::to_string(v) +
                                    " outside ground set");
      covered[static_cast<size_t>(v)] = true;
    }
  for (int v = 0; v < ground_size_; ++v)
    if (!covered[static_cast<size_t>(v)])
      throw std::invalid_argument("SimplicialComplex: facets do not cover vertex " +
                                  std::to_string(v));
}

bool SimplicialComplex::contains(const std::set<int>& simplex) const {
  for (const auto& facet : facets_)
    if (std::includes(facet.begin(), facet.end(), simplex.begin(), simplex.end())) return true;
  return false;
}

bool SimplicialComplex::is_connected() const {
  if (ground_size_ <= 1) return true;
  std::vector<int> comp(static_cast<size_t>(ground_size_));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)];
    return x;
  };
  for (const auto& facet : facets_) {
    auto it = facet.begin();
    const int root = find(*it);
    for (++it; it != facet.end(); ++it) comp[static_cast<size_t>(find(*it))] = root;
  }
  const int c0 = find(0);
  for (int v = 1; v < ground_size_; ++v)
    if (find(v) != c0) return false;
  return true;
}

bool SimplicialComplex::is_extremal(int v) const {
  if (v < 0 || v >= ground_size_)
    throw std::invalid_argument("is_extremal: vertex outside ground set");
  int count = 0;
  for (const auto& facet : facets_) count += facet.count(v) ? 1 : 0;
  return count == 1;
}

Graph skeleton1(const SimplicialComplex& S) {
  Graph G;
  G.vertices.resize(static_cast<size_t>(S.ground_size()));
  std::iota(G.vertices.begin(), G.vertices.end(), 0);
  for (const auto& facet : S.facets())
    for (auto it = facet.begin(); it != facet.end(); ++it)
      for (auto jt = std::next(it); jt != facet.end(); ++jt) G.edges.insert({*it, *jt});
  return G;
}

GrahamReduction graham_reduce(const SimplicialComplex& S) {
  GrahamReduction result;
  LabeledComplex L = to_labeled(S);
  bool progress = true;
  while (progress && !L.vertices.empty()) {
    progress = false;
    for (int v : L.vertices)
      if (facet_count_containing(L, v) == 1) {
        result.elimination_order.push_back(v);
        remove_vertex(L, v);
        progress = true;
        break;
      }
  }
  result.residual_vertices = L.vertices;
  result.residual_facets = L.facets;
  return result;
}

bool is_graham_acyclic(const SimplicialComplex& S) { return graham_reduce(S).empty(); }

std::optional<std::vector<int>> perfect_elimination_order(const Graph& G) {
  const auto& vs = G.vertices;
  const size_t n = vs.size();
  if (n == 0) return std::vector<int>{};
  auto adjacent = [&](int a, int b) {
    return G.edges.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  // Maximum cardinality search; ties broken toward the lowest label.
  std::vector<int> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<int> mcs_order;
  for (size_t step = 0; step < n; ++step) {
    int best = -1;
    for (size_t i = 0; i < n; ++i)
      if (!visited[i] && (best < 0 || weight[i] > weight[static_cast<size_t>(best)]))
        best = static_cast<int>(i);
    visited[static_cast<size_t>(best)] = true;
    mcs_order.push_back(vs[static_cast<size_t>(best)]);
    for (size_t i = 0; i < n; ++i)
      if (!visited[i] && adjacent(vs[static_cast<size_t>(best)], vs[i])) ++weight[i];
  }

  // The reverse of the MCS visit order is a perfect elimination order iff
  // the graph is chordal; audit simpliciality directly.
  std::vector<int> peo(mcs_order.rbegin(), mcs_order.rend());
  std::map<int, size_t> position;
  for (size_t i = 0; i < peo.size(); ++i) position[peo[i]] = i;
  for (size_t i = 0; i < peo.size(); ++i) {
    std::vector<int> later;
    for (int u : vs)
      if (position[u] > i && adjacent(peo[i], u)) later.push_back(u);
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!adjacent(later[a], later[b])) return std::nullopt;
  }
  return peo;
}

bool is_chordal(const Graph& G) { return perfect_elimination_order(G).has_value(); }

bool spheres_filled(const SimplicialComplex& S) {
  const int n = S.ground_size();
  if (n > 25) throw std::invalid_argument("spheres_filled: ground set too large to enumerate");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<int> A;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) A.insert(v);
    if (A.size() < 3 || S.contains(A)) continue;
    bool boundary_present = true;
    for (int v : A) {
      std::set<int> face = A;
      face.erase(v);
      if (!S.contains(face)) {
        boundary_present = false;
        break;
      }
    }
    if (boundary_present) return false;
  }
  return true;
}

namespace {

// Recursive construction following the acyclicity proof: eliminate an
// extremal vertex, order the reduced complex, then either graft the vertex
// back onto its facet or append the facet at the end.
std::vector<std::set<int>> build_rip(LabeledComplex L) {
  if (L.vertices.empty()) return {};
  int extremal = -1;
  for (int v : L.vertices)
    if (facet_count_containing(L, v) == 1) {
      extremal = v;
      break;
    }
  if (extremal < 0) throw std::logic_error("build_rip: complex is not acyclic");
  std::set<int> home;
  for (const auto& facet : L.facets)
    if (facet.count(extremal)) home = facet;
  LabeledComplex reduced = L;
  remove_vertex(reduced, extremal);
  std::vector<std::set<int>> order = build_rip(reduced);
  std::set<int> stripped = home;
  stripped.erase(extremal);
  auto it = std::find(order.begin(), order.end(), stripped);
  if (it != order.end())
    *it = home;
  else
    order.push_back(home);
  return order;
}

}  // namespace

std::optional<RipOrder> rip_order(const SimplicialComplex& S) {
  if (!is_graham_acyclic(S)) return std::nullopt;
  RipOrder out;
  out.facets = build_rip(to_labeled(S));
  out.witness.assign(out.facets.size(), -1);
  std::set<int> seen;
  for (size_t k = 0; k < out.facets.size(); ++k) {
    if (k > 0) {
      std::set<int> inter;
      for (int v : out.facets[k])
        if (seen.count(v)) inter.insert(v);
      int j = -1;
      for (size_t jj = 0; jj < k; ++jj)
        if (std::includes(out.facets[jj].begin(), out.facets[jj].end(), inter.begin(),
                          inter.end())) {
          j = static_cast<int>(jj);
          break;
        }
      if (j < 0) throw std::logic_error("rip_order: no witness found");
      out.witness[k] = j;
    }
    seen.insert(out.facets[k].begin(), out.facets[k].end());
  }
  return out;
}

bool satisfies_rip(const SimplicialComplex& S, const RipOrder& order) {
  auto sorted_input = S.facets();
  auto sorted_order = order.facets;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_input != sorted_order) return false;
  std::set<int> seen;
  for (size_t k = 0; k < order.facets.size(); ++k) {
    if (k > 0) {
      std::set<int> inter;
      for (int v : order.facets[k])
        if (seen.count(v)) inter.insert(v);
      const int j = order.witness[k];
      if (j < 0 || static_cast<size_t>(j) >= k) return false;
      if (!std::includes(order.facets[static_cast<size_t>(j)].begin(),
                         order.facets[static_cast<size_t>(j)].end(), inter.begin(), inter.end()))
        return false;
    }
    seen.insert(order.facets[k].begin(), order.facets[k].end());
  }
  return true;
}

bool satisfies_directed_rip(const SimplicialComplex& S, const RipOrder& order) {
  if (!satisfies_rip(S, order)) return false;
  std::set<int> seen;
  for (size_t k = 0; k < order.facets.size(); ++k) {
    std::set<int> prev = seen;
    seen.insert(order.facets[k].begin(), order.facets[k].end());
    if (k == 0) continue;
    std::vector<int> union_sorted(seen.begin(), seen.end());
    for (size_t t = 0; t + 1 < union_sorted.size(); ++t) {
      const int v = union_sorted[t], w = union_sorted[t + 1];
      const bool in_tk = order.facets[k].count(v) && order.facets[k].count(w);
      const bool in_prev = prev.count(v) && prev.count(w);
      if (!in_tk && !in_prev) return false;
    }
  }
  return true;
}

bool has_spine(const SimplicialComplex& S) {
  for (int i = 0; i + 1 < S.ground_size(); ++i)
    if (!S.contains({i, i + 1})) return false;
  return true;
}

DirectedGrahamReduction directed_graham_reduce(const SimplicialComplex& S) {
  DirectedGrahamReduction result;
  LabeledComplex L = to_labeled(S);
  bool progress = true;
  while (progress && L.vertices.size() > 1) {
    progress = false;
    for (size_t idx = 0; idx < L.vertices.size(); ++idx) {
      const int v = L.vertices[idx];
      if (facet_count_containing(L, v) != 1) continue;
      if (idx > 0 && !labeled_contains(L, {L.vertices[idx - 1], v})) continue;
      if (idx + 1 < L.vertices.size() && !labeled_contains(L, {v, L.vertices[idx + 1]})) continue;
      result.elimination_order.push_back(v);
      remove_vertex(L, v);
      progress = true;
      break;
    }
  }
  result.residual_vertices = L.vertices;
  result.residual_facets = L.facets;
  return result;
}

bool is_directed_graham_acyclic(const SimplicialComplex& S) {
  if (S.ground_size() == 0) return false;  // directed complexes live on nonempty [n]
  return directed_graham_reduce(S).acyclic();
}

std::optional<RipOrder> directed_rip_order(const SimplicialComplex& S) {
  if (!is_directed_graham_acyclic(S)) return std::nullopt;
  auto order = rip_order(S);
  if (!order) return std::nullopt;
  if (!satisfies_directed_rip(S, *order))
    throw std::logic_error("directed_rip_order: order fails the directed condition");
  return order;
}

bool is_acyclic_configuration(const SimplicialComplex& S) {
  return S.is_connected() && is_graham_acyclic(S);
}

bool is_directed_acyclic_configuration(const SimplicialComplex& S) {
  return is_directed_graham_acyclic(S);
}

SimplicialComplex polygon_triangulation(int n, const std::vector<std::set<int>>& triangles) {
  if (n < 2) throw NotATriangulationError("polygon_triangulation: need n >= 2");
  if (triangles.size() != static_cast<size_t>(n - 1))
    throw NotATriangulationError("polygon_triangulation: a triangulated (n+1)-gon has n-1 "
                                 "triangles, got " +
                                 std::to_string(triangles.size()));
  std::set<std::pair<int, int>> boundary;
  for (int i = 0; i + 1 <= n; ++i) boundary.insert({i, i + 1});
  boundary.insert({0, n});

  std::map<std::pair<int, int>, int> edge_count;
  std::set<int> covered;
  for (const auto& tri : triangles) {
    if (tri.size() != 3) throw NotATriangulationError("polygon_triangulation: non-triangle facet");
    for (int v : tri) {
      if (v < 0 || v > n)
        throw NotATriangulationError("polygon_triangulation: vertex outside 0..n");
      covered.insert(v);
    }
    std::vector<int> vs(tri.begin(), tri.end());
    for (size_t a = 0; a < 3; ++a)
      for (size_t b = a + 1; b < 3; ++b) ++edge_count[{vs[a], vs[b]}];
  }
  if (static_cast<int>(covered.size()) != n + 1)
    throw NotATriangulationError("polygon_triangulation: triangles do not cover all vertices");
  for (const auto& [edge, count] : edge_count) {
    const bool is_boundary = boundary.count(edge) > 0;
    if (is_boundary && count != 1)
      throw NotATriangulationError("polygon_triangulation: boundary edge used " +
                                   std::to_string(count) + " times");
    if (!is_boundary && count != 2)
      throw NotATriangulationError("polygon_triangulation: diagonal not shared by exactly two "
                                   "triangles");
  }
  for (const auto& edge : boundary)
    if (!edge_count.count(edge))
      throw NotATriangulationError("polygon_triangulation: missing boundary edge");
  return SimplicialComplex(n + 1, std::vector<std::set<int>>(triangles.begin(), triangles.end()));
}

}  // namespace deltakit
