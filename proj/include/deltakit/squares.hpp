#ifndef DELTAKIT_SQUARES_HPP
#define DELTAKIT_SQUARES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltakit/monotone.hpp"

namespace deltakit {

/// A span [p] <-f- [m] -g-> [q].
struct Span {
  MonotoneMap f;
  MonotoneMap g;

  Span(MonotoneMap f_, MonotoneMap g_);
  int m() const { return f.dom(); }
  int p() const { return f.cod(); }
  int q() const { return g.cod(); }
  Span mirrored() const { return Span(g, f); }
  bool operator==(const Span&) const = default;
};

struct NonCommutingError : std::invalid_argument {
  explicit NonCommutingError(const std::string& what) : std::invalid_argument(what) {}
};

/// A commuting square in Δ:
///
///     [m] --f--> [p]
///      |          |
///      g          h
///      v          v
///     [q] --k--> [n]
///
/// Construction checks h∘f == k∘g.  A square and its mirror image
/// (f,g and h,k swapped) are identified for classification purposes.
struct Square {
  MonotoneMap f;
  MonotoneMap g;
  MonotoneMap h;
  MonotoneMap k;

  Square(MonotoneMap f_, MonotoneMap g_, MonotoneMap h_, MonotoneMap k_);

  static Square trivial_horizontal(const MonotoneMap& f);  // identities on the sides
  static Square trivial_vertical(const MonotoneMap& g);    // identities on top/bottom

  int m() const { return f.dom(); }
  int p() const { return f.cod(); }
  int q() const { return g.cod(); }
  int n() const { return h.cod(); }

  Span span() const { return Span(f, g); }
  Square mirrored() const;
  /// The lexicographically smaller of the two mirror presentations.
  Square normalized() const;
  bool equals_up_to_mirror(const Square& other) const;
  bool is_trivial() const;  // either pair of parallel edges are identities

  bool operator==(const Square&) const = default;
  std::string str() const;
};

/// Horizontal composite: right.g must equal left.h.
Square hcompose(const Square& left, const Square& right);
/// Vertical composite: bottom.f must equal top.k.
Square vcompose(const Square& top, const Square& bottom);

/// A rectangular arrangement of squares sharing edges; composite(r2-c2 grid)
/// composes rows horizontally, then the row composites vertically.
struct Grid {
  std::vector<std::vector<Square>> cells;  // cells[row][col]

  explicit Grid(std::vector<std::vector<Square>> cells_);
  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
  Square composite() const;
};

struct NoPushoutError : std::runtime_error {
  /// Index of the first failing component of the canonical ∨-decomposition:
  /// 0 = minimum condition, 1..m = inner condition at i, m+1 = maximum condition.
  int component;
  NoPushoutError(const std::string& what, int component_)
      : std::runtime_error(what), component(component_) {}
};

struct HasPushoutError : std::runtime_error {
  explicit HasPushoutError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPushoutError : std::runtime_error {
  explicit NotPushoutError(const std::string& what) : std::runtime_error(what) {}
};

struct NotBalancedError : std::runtime_error {
  explicit NotBalancedError(const std::string& what) : std::runtime_error(what) {}
};

struct TrivialSquareError : std::runtime_error {
  explicit TrivialSquareError(const std::string& what) : std::runtime_error(what) {}
};

struct InefficientFactorizationError : std::runtime_error {
  explicit InefficientFactorizationError(const std::string& what) : std::runtime_error(what) {}
};

/// The three elementwise pushout-existence conditions:
/// (1) no index where f and g both jump by >= 2, (2) f(0)=0 or g(0)=0,
/// (3) f(m)=p or g(m)=q.
bool has_pushout(const Span& s);

/// First failing component index (as in NoPushoutError) or nullopt.
std::optional<int> pushout_obstruction(const Span& s);

/// The pushout square of s, assembled as the ∨-product of the minimal
/// component pushouts of the canonical ∨-decomposition.  Throws NoPushoutError.
Square compute_pushout(const Span& s);

/// A cocone (phi, psi) under s targeting [1], built from the first failing
/// ∨-component and extended by constants.  Together with its mirror-orientation
/// partner it refutes the universal property of every commuting cospan.
/// Throws HasPushoutError when the span has a pushout.
std::pair<MonotoneMap, MonotoneMap> pushout_failure_witness(const Span& s);

/// Both orientations of the witness: {(phi,psi), (phi',psi')}.  Every commuting
/// cospan (h,k) under s fails unique factorization against at least one.
std::pair<std::pair<MonotoneMap, MonotoneMap>, std::pair<MonotoneMap, MonotoneMap>>
pushout_failure_witness_pair(const Span& s);

/// True iff q is the pushout square of its span (up to mirror).
bool is_pushout_square(const Square& q);

/// Balanced: all four edges cofaces, jointly surjective cospan, p + q = m + n.
bool is_balanced(const Square& q);

/// Reason strings for is_balanced failures ("NotCofaces", "NotJointlySurjective",
/// "SizeMismatch") or empty when balanced.
std::string balance_failure(const Square& q);

/// Every spine edge {i,i+1} of [n] lies in the image of h or of k.
/// Requires h, k cofaces.
bool spine_condition(const Square& q);

/// The square is a pushout of finite sets: [n] is the quotient of [p] ⊔ [q]
/// by f(i) ~ g(i), via h and k.
bool is_set_pushout(const Square& q);

/// Pushout in Δ that the forgetful functor to Set preserves.
bool is_concrete_pushout(const Square& q);

/// Splits a pushout square along the efficient factorization f = f1 ∘ f0 into
/// two horizontally composed pushout squares.  Throws NotPushoutError or
/// InefficientFactorizationError.
std::pair<Square, Square> factor_pushout_horizontal(const Square& q, const MonotoneMap& f0,
                                                    const MonotoneMap& f1);

/// Factors a pushout square into a defect(g) x defect(f) grid whose cells are
/// basic pushouts or trivial squares on generators/identities.  Rows follow
/// the canonical generator factorization of g, columns that of f.
Grid factor_into_basic(const Square& q);

/// Factors a nontrivial balanced square into a defect(g) x defect(f) grid of
/// basic coface squares, peeling the smallest missing element first.
Grid factor_balanced(const Square& q);

/// A catalog entry; mirror_distinct marks squares whose mirror image is a
/// different square (the catalogs list one representative per mirror pair).
struct CatalogEntry {
  Square square;
  bool mirror_distinct;
};

/// Families (type2face)/(typemixed)/(type2deg) at parameter n.
std::vector<CatalogEntry> catalog_basic_pushout(int n);
/// Basic coface squares (0 <= i < j <= n); requires n >= 2 for nonemptiness.
std::vector<CatalogEntry> catalog_basic_coface(int n);
/// The 8 generators of pushout squares under ∨ and composition.
std::vector<CatalogEntry> catalog_generators_pushout();
/// The 8 generators of balanced squares under ∨ and composition.
std::vector<CatalogEntry> catalog_generators_balanced();
/// The 4 minimal component pushout squares at parameter p.
std::vector<CatalogEntry> catalog_minimal_vee(int p);

}  // namespace deltakit

#endif
