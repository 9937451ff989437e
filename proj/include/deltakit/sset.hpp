#ifndef DELTAKIT_SSET_HPP
#define DELTAKIT_SSET_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltakit/monotone.hpp"
#include "deltakit/squares.hpp"

namespace deltakit {

struct OutOfTruncationError : std::runtime_error {
  explicit OutOfTruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatiblePairError : std::invalid_argument {
  explicit IncompatiblePairError(const std::string& what) : std::invalid_argument(what) {}
};

/// A finite simplicial set truncated at dimension N.  Simplex identifiers are
/// opaque strings; the canonical cell order is lexicographic.  Face tables
/// exist for 1 <= n <= N, degeneracy tables for 0 <= n <= N-1.
/// Construction checks shapes and totality; the simplicial identities are
/// audited separately by validate().
class TruncatedSSet {
 public:
  using CellMap = std::map<std::string, std::string>;

  TruncatedSSet(int dim, std::vector<std::vector<std::string>> cells,
                std::vector<std::vector<CellMap>> faces,
                std::vector<std::vector<CellMap>> degeneracies);

  int dim() const { return dim_; }
  const std::vector<std::string>& cells(int n) const;
  bool has_cell(int n, const std::string& x) const;
  const std::string& face(int n, int i, const std::string& x) const;
  const std::string& degeneracy(int n, int i, const std::string& x) const;
  const CellMap& face_table(int n, int i) const;
  const CellMap& degeneracy_table(int n, int i) const;

 private:
  int dim_;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::vector<CellMap>> faces_;
  std::vector<std::vector<CellMap>> degeneracies_;
};

/// Lists every violated simplicial identity (with indices) and every
/// non-injective degeneracy table; empty iff the data is a simplicial set.
std::vector<std::string> validate(const TruncatedSSet& X);

/// The contravariant action X_f : X_{f.cod} -> X_{f.dom}, computed through
/// the canonical generator factorization; requires f.dom, f.cod <= dim.
TruncatedSSet::CellMap evaluate(const TruncatedSSet& X, const MonotoneMap& f);

/// A commuting square of finite sets
///     A --top--> B
///     |          |
///   left       right
///     v          v
///     C -bottom-> D
struct SetSquare {
  std::vector<std::string> A, B, C, D;
  std::map<std::string, std::string> top, left, right, bottom;

  SetSquare(std::vector<std::string> A_, std::vector<std::string> B_,
            std::vector<std::string> C_, std::vector<std::string> D_,
            std::map<std::string, std::string> top_, std::map<std::string, std::string> left_,
            std::map<std::string, std::string> right_, std::map<std::string, std::string> bottom_);
};

/// Existence of a common preimage for every compatible (b, c) pair.
bool is_weak_pullback(const SetSquare& sq);
/// Existence and uniqueness.
bool is_strong_pullback(const SetSquare& sq);

/// The image square with corners X_n, X_p, X_q, X_m; throws OutOfTruncation
/// when any corner exceeds the truncation.
SetSquare apply_square(const TruncatedSSet& X, const Square& q);

/// Membership in Comp(X) / Ex(X): the square is sent to a weak / strong
/// pullback of sets.
bool comp_contains(const TruncatedSSet& X, const Square& q);
bool ex_contains(const TruncatedSSet& X, const Square& q);

/// Verdict of a square-family classifier, with the first failing square and
/// the truncation bound the check ran at.
struct ClassifierReport {
  bool holds = true;
  std::optional<Square> witness;
  int truncation = 0;
};

/// Comp(X) contains the basic coface squares (0 <= i < j <= n), n <= N.
ClassifierReport span_complete(const TruncatedSSet& X);
/// Comp(X) contains the (type2face) squares (0 <= i < j-1 <= n-1), n <= N.
ClassifierReport inner_span_complete(const TruncatedSSet& X);
/// Ex(X) contains the Segal squares [a] <- [0] -> [b] -> [a+b], a+b <= N.
ClassifierReport segal_nerve(const TruncatedSSet& X);
/// Ex(X) contains the left and right (typemixed) squares within truncation.
ClassifierReport stiff(const TruncatedSSet& X);
/// Ex(X) contains all (typemixed) squares within truncation.
ClassifierReport split(const TruncatedSSet& X);
/// Ex(X) contains the (type2face) squares with 1 <= i and j <= n-1.
ClassifierReport twosegal_restricted(const TruncatedSSet& X);

bool is_span_complete(const TruncatedSSet& X);
bool is_inner_span_complete(const TruncatedSSet& X);
bool is_segal_nerve(const TruncatedSSet& X);
bool is_stiff(const TruncatedSSet& X);
bool is_split(const TruncatedSSet& X);
bool is_2segal_restricted(const TruncatedSSet& X);

struct ForcedDiscreteReport {
  bool families_hold = true;
  std::optional<Square> witness;
  bool all_bijective = false;  // meaningful when families_hold
  int truncation = 0;
};

/// Checks the two square families whose membership in Comp(X) forces X to be
/// discrete; when both hold, verifies that every structure map is a bijection.
ForcedDiscreteReport forced_discrete(const TruncatedSSet& X);

/// First z in canonical cell order with d_j z = x and d_i z = y, given
/// (n-1)-simplices x, y with d_i x = d_{j-1} y and 0 <= i < j <= n.
std::optional<std::string> find_filler(const TruncatedSSet& X, int n, int i, int j,
                                       const std::string& x, const std::string& y);
/// Number of such fillers (test support).
int count_fillers(const TruncatedSSet& X, int n, int i, int j, const std::string& x,
                  const std::string& y);

/// A finite category presented by an explicit composition table; construction
/// checks identities and associativity exhaustively.
struct FinCategory {
  struct Morphism {
    std::string name, src, dst;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identities;                      // object -> morphism
  std::map<std::pair<std::string, std::string>, std::string> table;   // (first, then) -> result

  FinCategory(std::vector<std::string> objects_, std::vector<Morphism> morphisms_,
              std::map<std::string, std::string> identities_,
              std::map<std::pair<std::string, std::string>, std::string> table_);

  const Morphism& morphism(const std::string& name) const;
  std::string compose_pair(const std::string& first, const std::string& then) const;

  static FinCategory walking_arrow();
  static FinCategory cyclic_group(int order);
  static FinCategory chain_poset(int objects);
};

/// The nerve truncated at N: n-cells are composable strings of n morphism
/// names joined by '|'; 0-cells are the objects.
TruncatedSSet nerve(const FinCategory& C, int N);

/// The discrete simplicial set on the given points.
TruncatedSSet discrete_sset(const std::vector<std::string>& points, int N);

/// All structure maps of X are bijections.
bool all_structure_maps_bijective(const TruncatedSSet& X);

/// Whether the horn instance (faces x_i for i != k) has a filler z with
/// d_i z = x_i.  `faces` maps face index -> (n-1)-cell.
bool horn_has_filler(const TruncatedSSet& X, int n, int k,
                     const std::map<int, std::string>& faces);

/// All horns 1 <= n <= N, 0 <= k <= n fill.
bool is_kan(const TruncatedSSet& X);
/// All inner horns 2 <= n <= N, 0 < k < n fill.
bool is_quasicategory(const TruncatedSSet& X);

}  // namespace deltakit

#endif
