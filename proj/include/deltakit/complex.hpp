#ifndef DELTAKIT_COMPLEX_HPP
#define DELTAKIT_COMPLEX_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltakit {

/// An abstract simplicial complex on the ground set [n] = {0,...,n}, stored
/// by its facets (maximal simplices); downward closure is implicit.  The
/// facets must jointly cover the ground set.  The same data read with the
/// natural total order on [n] serves as a directed simplicial complex; the
/// directed predicates below make that reading explicit.
class SimplicialComplex {
 public:
  SimplicialComplex(int ground_size, std::vector<std::set<int>> facets);

  int ground_size() const { return ground_size_; }
  const std::vector<std::set<int>>& facets() const { return facets_; }

  /// Downward-closure membership: A is contained in some facet.
  bool contains(const std::set<int>& simplex) const;
  bool is_connected() const;
  /// v lies in exactly one facet.
  bool is_extremal(int v) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int ground_size_;
  std::vector<std::set<int>> facets_;  // pairwise incomparable, sorted
};

struct Graph {
  std::vector<int> vertices;
  std::set<std::pair<int, int>> edges;  // normalized (a < b)
};

Graph skeleton1(const SimplicialComplex& S);

struct GrahamReduction {
  std::vector<int> elimination_order;
  std::vector<int> residual_vertices;
  std::vector<std::set<int>> residual_facets;
  bool empty() const { return residual_vertices.empty(); }
};

/// Repeatedly removes extremal vertices, lowest index first.
GrahamReduction graham_reduce(const SimplicialComplex& S);
bool is_graham_acyclic(const SimplicialComplex& S);

/// Chordality via maximum cardinality search followed by a simpliciality
/// audit of the resulting elimination order.
bool is_chordal(const Graph& G);
std::optional<std::vector<int>> perfect_elimination_order(const Graph& G);

/// Every combinatorial sphere (all proper subsets of a set A, |A| >= 3,
/// present) has its filler A.
bool spheres_filled(const SimplicialComplex& S);

/// An ordering of the facets where each one meets the union of its
/// predecessors inside a single earlier facet.
struct RipOrder {
  std::vector<std::set<int>> facets;
  std::vector<int> witness;  // witness[k] = index j < k, witness[0] = -1
};

/// Constructed through Graham reduction; nullopt when S is not acyclic.
/// For connected S the intersections with predecessor unions are nonempty.
std::optional<RipOrder> rip_order(const SimplicialComplex& S);

bool satisfies_rip(const SimplicialComplex& S, const RipOrder& order);
/// Additionally: consecutive vertices v < w of each partial union satisfy
/// {v,w} ⊆ T_k or {v,w} ⊆ earlier union.
bool satisfies_directed_rip(const SimplicialComplex& S, const RipOrder& order);

/// All spine edges {i,i+1} of [n] belong to S.
bool has_spine(const SimplicialComplex& S);

struct DirectedGrahamReduction {
  std::vector<int> elimination_order;
  std::vector<int> residual_vertices;  // a single vertex when acyclic
  std::vector<std::set<int>> residual_facets;
  bool acyclic() const { return residual_vertices.size() <= 1; }
};

/// Directed Graham reduction: an eliminated vertex must be extremal and keep
/// both of its spine edges (w.r.t. its current neighbors in the vertex
/// order) inside the complex.  Tries eligible vertices lowest index first;
/// reduction ends at a single vertex when the complex is directed acyclic.
DirectedGrahamReduction directed_graham_reduce(const SimplicialComplex& S);
bool is_directed_graham_acyclic(const SimplicialComplex& S);

/// An undirected running-intersection order of a spine-containing acyclic
/// complex also satisfies the directed condition; nullopt when S is not
/// directed acyclic.
std::optional<RipOrder> directed_rip_order(const SimplicialComplex& S);

/// Connected and Graham acyclic.
bool is_acyclic_configuration(const SimplicialComplex& S);
/// Directed Graham acyclic (connectivity follows from the spine).
bool is_directed_acyclic_configuration(const SimplicialComplex& S);

struct NotATriangulationError : std::invalid_argument {
  explicit NotATriangulationError(const std::string& what) : std::invalid_argument(what) {}
};

/// The directed complex of edges and triangles of a triangulation of the
/// (n+1)-gon with vertices 0..n in boundary order.
SimplicialComplex polygon_triangulation(int n, const std::vector<std::set<int>>& triangles);

}  // namespace deltakit

#endif
