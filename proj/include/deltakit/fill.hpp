#ifndef DELTAKIT_FILL_HPP
#define DELTAKIT_FILL_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "deltakit/complex.hpp"
#include "deltakit/monotone.hpp"
#include "deltakit/sset.hpp"

namespace deltakit {

/// Provider simplices travel as canonical JSON values so that equality of
/// restrictions is plain value equality.
using SimplexValue = nlohmann::json;

/// A jointly surjective cospan of cofaces h : [p] -> [n], k : [q] -> [n];
/// the embedding of a span of simplices into their union.
struct SpanEmbedding {
  MonotoneMap h;
  MonotoneMap k;

  SpanEmbedding(MonotoneMap h_, MonotoneMap k_);
  int n() const { return h.cod(); }
  /// The shared values im(h) ∩ im(k).
  std::set<int> shared() const;
};

/// A simplicial set presented through its simplex values and span fillers;
/// the generic filler algorithm only needs faces and span fills.
class FillerProvider {
 public:
  virtual ~FillerProvider() = default;
  virtual std::string name() const = 0;
  /// Dimension of a simplex value (number of vertices minus one).
  virtual int dimension(const SimplexValue& x) const = 0;
  /// Restriction of x along a coface into x's dimension.
  virtual SimplexValue face(const SimplexValue& x, const MonotoneMap& coface) const = 0;
  /// A filler z on [emb.n()] with z|h = x and z|k = y, for simplices that
  /// agree on the shared face; nullopt when the provider has none.
  virtual std::optional<SimplexValue> span_fill(const SimplexValue& x, const SimplexValue& y,
                                                const SpanEmbedding& emb) const = 0;
  /// Providers that only fill inner spans need directed acyclic
  /// configurations.
  virtual bool inner_only() const { return false; }

  /// Basic-span convenience form: x, y of dimension n-1 overlapping on the
  /// face that omits i from y's side and j from x's side (0 <= i < j <= n).
  std::optional<SimplexValue> span_fill_basic(const SimplexValue& x, const SimplexValue& y, int i,
                                              int j, int n) const;
};

struct NotAcyclicError : std::invalid_argument {
  explicit NotAcyclicError(const std::string& what) : std::invalid_argument(what) {}
};

struct IncompatibleAssignmentError : std::invalid_argument {
  std::set<int> facet_a, facet_b, shared_face;
  IncompatibleAssignmentError(const std::string& what, std::set<int> a, std::set<int> b,
                              std::set<int> shared)
      : std::invalid_argument(what), facet_a(std::move(a)), facet_b(std::move(b)),
        shared_face(std::move(shared)) {}
};

struct NoFillerError : std::runtime_error {
  int step;  // index into the running-intersection order
  NoFillerError(const std::string& what, int step_) : std::runtime_error(what), step(step_) {}
};

/// The inclusion of a sorted vertex subset into a sorted superset, as a
/// coface between their position ordinals.
MonotoneMap subset_inclusion(const std::set<int>& subset, const std::set<int>& superset);

/// Fills an acyclic configuration: given compatible simplices on the facets
/// of S, produces a simplex on the whole ground set restricting to each of
/// them, by iterating the provider's span filler along a running-intersection
/// order.  Directed acyclicity is required when the provider is inner-only.
SimplexValue fill_configuration(const FillerProvider& provider, const SimplicialComplex& S,
                                const std::map<std::set<int>, SimplexValue>& assignment);

/// Provider view of a truncated simplicial set; simplex values are the cell
/// identifiers together with their dimension.  Span fills search the cells
/// in canonical order.  `inner_only` should reflect what the set actually
/// guarantees (e.g. quasicategory-like fixtures).
std::unique_ptr<FillerProvider> sset_provider(const TruncatedSSet& X, bool inner_only);

}  // namespace deltakit

#endif
