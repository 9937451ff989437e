#ifndef DELTAKIT_VEE_HPP
#define DELTAKIT_VEE_HPP

#include <stdexcept>
#include <vector>

#include "deltakit/monotone.hpp"
#include "deltakit/squares.hpp"

namespace deltakit {

/// A ∨-decomposition of [n], represented by its structure map g : [r] -> [n].
/// The r+2 components are [g(0)], [g(1)-g(0)], ..., [n-g(r)]; component
/// lists are computed views, never stored.
struct VeeDecomposition {
  MonotoneMap base;

  explicit VeeDecomposition(MonotoneMap base_) : base(std::move(base_)) {}

  /// id : [n] -> [n], i.e. [0] ∨ [1] ∨ ... ∨ [1] ∨ [0] with n copies of [1].
  static VeeDecomposition canonical(int n) { return VeeDecomposition(MonotoneMap::identity(n)); }

  int pieces() const { return base.dom() + 2; }
  int total() const { return base.cod(); }
  /// Component sizes n_0, ..., n_{r+1}.
  std::vector<int> components() const;
  /// Start offset of component i inside [n].
  int offset(int i) const;

  bool operator==(const VeeDecomposition&) const = default;
};

/// The unique lift along the discrete opfibration: the decomposition of
/// f.cod with base f ∘ dec.base.  Requires f.dom == dec.base.cod.
VeeDecomposition pushforward(const VeeDecomposition& dec, const MonotoneMap& f);

struct EndpointViolation : std::invalid_argument {
  int part;      // offending part index
  bool max_end;  // true: failed to preserve the maximum; false: the minimum
  EndpointViolation(const std::string& what, int part_, bool max_end_)
      : std::invalid_argument(what), part(part_), max_end(max_end_) {}
};

/// The parts f_0, ..., f_{r+1} of a ∨-product; f_0..f_r must preserve maxima
/// and f_1..f_{r+1} must preserve minima for the product to exist.
struct VeeFamily {
  std::vector<MonotoneMap> parts;
  explicit VeeFamily(std::vector<MonotoneMap> parts_);
  int size() const { return static_cast<int>(parts.size()); }
  bool operator==(const VeeFamily&) const = default;
};

/// Blockwise gluing f_0 ∨ ... ∨ f_{r+1}; throws EndpointViolation.
MonotoneMap vee_product(const VeeFamily& family);
MonotoneMap vee_product(const MonotoneMap& a, const MonotoneMap& b);

/// The unique family whose ∨-product is f relative to dec and
/// pushforward(dec, f); requires dec.base.cod == f.dom.
VeeFamily components_of_map(const MonotoneMap& f, const VeeDecomposition& dec);

/// Componentwise decomposition of a span over a decomposition of its source.
std::vector<Span> decompose_span(const Span& s, const VeeDecomposition& dec);
/// Componentwise decomposition of a square over a decomposition of its
/// top-left object.
std::vector<Square> decompose_square(const Square& q, const VeeDecomposition& dec);

/// Inverse direction; throws EndpointViolation if a leg family is invalid.
Span vee_product_spans(const std::vector<Span>& spans);
Square vee_product_squares(const std::vector<Square>& squares);

}  // namespace deltakit

#endif
