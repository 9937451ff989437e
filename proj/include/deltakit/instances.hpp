#ifndef DELTAKIT_INSTANCES_HPP
#define DELTAKIT_INSTANCES_HPP

#include <boost/rational.hpp>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltakit/fill.hpp"
#include "deltakit/monotone.hpp"

namespace deltakit {

/// Exact rational arithmetic; no floating point anywhere in the instances.
using Rat = boost::rational<long long>;

/// Accepts "p/q", "p", and "-p/q".
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& value);

/// A relational table: a finite set of rows over a value alphabet, one column
/// per vertex of the simplex.  Set semantics, canonical row order.
class Table {
 public:
  Table(int arity, std::vector<std::string> alphabet, std::set<std::vector<std::string>> rows);

  int arity() const { return arity_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::set<std::vector<std::string>>& rows() const { return rows_; }

  bool operator==(const Table&) const = default;

 private:
  int arity_;
  std::vector<std::string> alphabet_;  // sorted
  std::set<std::vector<std::string>> rows_;
};

/// Contravariant action: rows' = { (row[f(0)], ..., row[f(m)]) }.  Projection
/// for cofaces, column duplication for codegeneracies.
Table table_face(const Table& T, const MonotoneMap& f);

struct IncompatibleProjectionsError : std::invalid_argument {
  explicit IncompatibleProjectionsError(const std::string& what) : std::invalid_argument(what) {}
};

/// The natural join: the maximal table on the union columns restricting into
/// A and B; requires equal projections onto the shared columns.
Table join(const Table& A, const Table& B, const SpanEmbedding& emb);

/// A pseudometric on n+1 points; construction validates reflexivity,
/// symmetry, and the triangle inequality exactly.
class Pseudometric {
 public:
  explicit Pseudometric(std::vector<std::vector<Rat>> dist);

  int points() const { return static_cast<int>(dist_.size()); }
  const Rat& d(int i, int j) const { return dist_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)); }
  const std::vector<std::vector<Rat>>& matrix() const { return dist_; }

  bool operator==(const Pseudometric&) const = default;

 private:
  std::vector<std::vector<Rat>> dist_;
};

/// (f*d)(x, y) = d(f(x), f(y)).
Pseudometric metric_pullback(const Pseudometric& d, const MonotoneMap& f);

struct IncompatibleRestrictionsError : std::invalid_argument {
  explicit IncompatibleRestrictionsError(const std::string& what) : std::invalid_argument(what) {}
};

/// The canonical filler: distances within either side are kept, distances
/// across are shortest paths through the shared points.
Pseudometric metric_fill(const Pseudometric& dp, const Pseudometric& dq, const SpanEmbedding& emb);

/// A joint distribution of arity many variables over a finite alphabet,
/// stored sparsely; probabilities are nonnegative rationals summing to 1.
class Distribution {
 public:
  Distribution(int arity, std::vector<std::string> alphabet,
               std::map<std::vector<std::string>, Rat> prob);

  int arity() const { return arity_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::map<std::vector<std::string>, Rat>& prob() const { return prob_; }
  Rat mass(const std::vector<std::string>& tuple) const;

  bool operator==(const Distribution&) const = default;

 private:
  int arity_;
  std::vector<std::string> alphabet_;
  std::map<std::vector<std::string>, Rat> prob_;  // support only (positive mass)
};

/// Pushforward along the induced map S^{cod+1} -> S^{dom+1}: marginalization
/// for cofaces, diagonal pushforward for codegeneracies.
Distribution dist_face(const Distribution& P, const MonotoneMap& f);

struct IncompatibleMarginalsError : std::invalid_argument {
  explicit IncompatibleMarginalsError(const std::string& what) : std::invalid_argument(what) {}
};

/// The conditional product: the two sides are conditionally independent given
/// the shared variables.  Requires exactly matching shared marginals.
Distribution dist_fill(const Distribution& PA, const Distribution& PB, const SpanEmbedding& emb);

/// Providers adapting the three instances to fill_configuration; simplices
/// travel as the JSON forms documented in the README.
std::unique_ptr<FillerProvider> table_provider(std::vector<std::string> alphabet);
std::unique_ptr<FillerProvider> metric_provider();
std::unique_ptr<FillerProvider> dist_provider(std::vector<std::string> alphabet);

/// JSON forms used by the providers and the CLI.
SimplexValue table_to_json(const Table& T);
Table table_from_json(const SimplexValue& j);
SimplexValue metric_to_json(const Pseudometric& d);
Pseudometric metric_from_json(const SimplexValue& j);
SimplexValue dist_to_json(const Distribution& P);
Distribution dist_from_json(const SimplexValue& j);

}  // namespace deltakit

#endif
