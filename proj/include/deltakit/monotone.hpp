#ifndef DELTAKIT_MONOTONE_HPP
#define DELTAKIT_MONOTONE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deltakit {

/// A morphism of the simplex category: a nondecreasing function
/// [m] -> [n] between the finite ordinals [m] = {0,...,m} and [n].
/// Stored as the dense value sequence (values()[i] = image of i);
/// generator words are derived, never stored.
class MonotoneMap {
 public:
  MonotoneMap(int dom, int cod, std::vector<int> values);

  static MonotoneMap identity(int n);
  /// d^{n,i} : [n-1] -> [n], the injection omitting i.  Requires n >= 1, 0 <= i <= n.
  static MonotoneMap coface(int n, int i);
  /// s^{n,i} : [n+1] -> [n], the surjection hitting i twice.  Requires 0 <= i <= n.
  static MonotoneMap codegeneracy(int n, int i);
  /// The constant map [m] -> [n] with value v.
  static MonotoneMap constant(int m, int n, int v);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  int operator()(int i) const { return values_.at(static_cast<size_t>(i)); }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const MonotoneMap&) const = default;
  /// Lexicographic on (dom, cod, values); used for canonical orderings only.
  std::strong_ordering operator<=>(const MonotoneMap&) const = default;

  std::string str() const;  // e.g. "[2]->[3]:(0,1,3)"

 private:
  int dom_;
  int cod_;
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f);

/// f after g; requires g.cod == f.dom.
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// Folds a chain given in application order (first element applied first)
/// starting at the identity on `dom`.  An empty chain yields identity(dom).
MonotoneMap compose_chain(int dom, const std::vector<MonotoneMap>& chain);

int image_size(const MonotoneMap& f);

/// Defect of f : [m] -> [n], i.e. m + n + 2 - 2|im(f)|; the minimal number of
/// generating maps in any factorization of f.
int defect(const MonotoneMap& f);

bool is_coface(const MonotoneMap& f);        // injective
bool is_codegeneracy(const MonotoneMap& f);  // surjective
bool is_identity(const MonotoneMap& f);

bool preserves_min(const MonotoneMap& f);  // f(0) == 0
bool preserves_max(const MonotoneMap& f);  // f(m) == n

/// True iff the factorization (f after g) is efficient:
/// defect(f∘g) == defect(f) + defect(g).
bool is_efficient(const MonotoneMap& f, const MonotoneMap& g);

/// Reedy factorization f = d ∘ s with s a codegeneracy onto [image_size-1]
/// and d a coface; always efficient.  Returns {s, d}.
std::pair<MonotoneMap, MonotoneMap> reedy_factorize(const MonotoneMap& f);

/// Efficient factorization of f into exactly defect(f) generating maps, in
/// application order: codegeneracies with decreasing indices first, then
/// cofaces with increasing indices.  Empty iff f is an identity.
std::vector<MonotoneMap> factor_into_generators(const MonotoneMap& f);

/// All monotone maps [m] -> [n] in lexicographic order of value sequences.
std::vector<MonotoneMap> enumerate_maps(int m, int n);

/// Lazy counterpart of enumerate_maps; single-pass forward iteration.
class MapRange {
 public:
  MapRange(int m, int n) : m_(m), n_(n) {}

  class iterator {
   public:
    using value_type = MonotoneMap;
    iterator() = default;
    iterator(int m, int n, bool end);
    MonotoneMap operator*() const;
    iterator& operator++();
    bool operator!=(const iterator& o) const { return done_ != o.done_; }

   private:
    int m_ = 0;
    int n_ = 0;
    bool done_ = true;
    std::vector<int> cur_;
  };

  iterator begin() const { return iterator(m_, n_, false); }
  iterator end() const { return iterator(m_, n_, true); }

 private:
  int m_;
  int n_;
};

/// C(m+n+1, m+1), the number of monotone maps [m] -> [n].
std::uint64_t count_maps(int m, int n);

}  // namespace deltakit

#endif
