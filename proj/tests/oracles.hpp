// Brute-force oracles, independent of the library's decision procedures.
// They only use the definition of a pushout (a universal cocone) plus two
// elementary order-theoretic facts, each proved inline where used:
//
//  (1) a universal cocone is jointly surjective: otherwise the maps of the
//      self-cocone factor through the candidate in at least two ways, by
//      retracting a gap of the joint image onto its lower end;
//  (2) a jointly surjective candidate forces the induced map pointwise, so it
//      is universal iff for every cocone the forced assignment is consistent
//      and monotone; any violation survives composing with the threshold map
//      to [1] that separates the two offending values, so checking all
//      cocones into [0] and [1] suffices.  The spec's coarser bound (cocone
//      targets up to [p+q+1]) follows from the same image argument.
#ifndef DELTAKIT_TESTS_ORACLES_HPP
#define DELTAKIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "deltakit/monotone.hpp"
#include "deltakit/squares.hpp"

namespace deltakit::oracle {

struct Cospan {
  std::vector<int> h;  // values of [p] -> [t]
  std::vector<int> k;  // values of [q] -> [t]
  int target;
};

/// All jointly surjective cospans out of ([p], [q]); the only candidates a
/// universal cocone can live among, by fact (1).
inline const std::vector<Cospan>& jointly_surjective_cospans(int p, int q) {
  static std::map<std::pair<int, int>, std::vector<Cospan>> cache;
  auto it = cache.find({p, q});
  if (it != cache.end()) return it->second;
  std::vector<Cospan> out;
  std::vector<int> hvals, kvals;
  // Staircase walk: each target value receives a nonempty block of not-yet-
  // assigned elements from [p], from [q], or from both.
  auto rec = [&](auto&& self, int placed_h, int placed_k, int target) -> void {
    if (placed_h == p + 1 && placed_k == q + 1) {
      out.push_back(Cospan{hvals, kvals, target - 1});
      return;
    }
    for (int take_h = 0; take_h <= p + 1 - placed_h; ++take_h)
      for (int take_k = 0; take_k <= q + 1 - placed_k; ++take_k) {
        if (take_h + take_k == 0) continue;
        for (int i = 0; i < take_h; ++i) hvals.push_back(target);
        for (int i = 0; i < take_k; ++i) kvals.push_back(target);
        self(self, placed_h + take_h, placed_k + take_k, target + 1);
        for (int i = 0; i < take_h; ++i) hvals.pop_back();
        for (int i = 0; i < take_k; ++i) kvals.pop_back();
      }
  };
  rec(rec, 0, 0, 0);
  return cache.emplace(std::pair{p, q}, std::move(out)).first->second;
}

/// Universality of a jointly surjective commuting candidate, tested against
/// every cocone into [0] and [1] (sufficient by fact (2)).
inline bool universal(const Span& s, const Cospan& cand) {
  const int p = s.p(), q = s.q(), t = cand.target;
  // cocones into [0] are constant and always factor uniquely
  for (int cut_phi = 0; cut_phi <= p + 1; ++cut_phi)
    for (int cut_psi = 0; cut_psi <= q + 1; ++cut_psi) {
      // phi(x) = (x >= cut_phi), psi(y) = (y >= cut_psi)
      bool commutes = true;
      for (int i = 0; i <= s.m() && commutes; ++i)
        commutes = ((s.f(i) >= cut_phi) == (s.g(i) >= cut_psi));
      if (!commutes) continue;
      // forced values of the induced map [t] -> [1]
      std::vector<int> forced(static_cast<size_t>(t) + 1, -1);
      bool ok = true;
      auto assign = [&](int at, int value) {
        if (forced[static_cast<size_t>(at)] == -1)
          forced[static_cast<size_t>(at)] = value;
        else if (forced[static_cast<size_t>(at)] != value)
          ok = false;
      };
      for (int x = 0; x <= p && ok; ++x) assign(cand.h[static_cast<size_t>(x)], x >= cut_phi);
      for (int y = 0; y <= q && ok; ++y) assign(cand.k[static_cast<size_t>(y)], y >= cut_psi);
      for (int z = 0; z + 1 <= t && ok; ++z)
        if (forced[static_cast<size_t>(z)] > forced[static_cast<size_t>(z + 1)]) ok = false;
      if (!ok) return false;
    }
  return true;
}

/// Existence of a pushout by exhaustive search over the candidates.
inline std::optional<Cospan> find_pushout(const Span& s) {
  for (const auto& cand : jointly_surjective_cospans(s.p(), s.q())) {
    bool commutes = true;
    for (int i = 0; i <= s.m() && commutes; ++i)
      commutes = cand.h[static_cast<size_t>(s.f(i))] == cand.k[static_cast<size_t>(s.g(i))];
    if (!commutes) continue;
    if (universal(s, cand)) return cand;
  }
  return std::nullopt;
}

inline bool has_pushout(const Span& s) { return find_pushout(s).has_value(); }

/// Universality of a given square's cospan (for auditing compute_pushout).
inline bool square_is_universal(const Square& sq) {
  std::vector<bool> hit(static_cast<size_t>(sq.n()) + 1, false);
  Cospan cand;
  cand.target = sq.n();
  for (int x = 0; x <= sq.p(); ++x) {
    cand.h.push_back(sq.h(x));
    hit[static_cast<size_t>(sq.h(x))] = true;
  }
  for (int y = 0; y <= sq.q(); ++y) {
    cand.k.push_back(sq.k(y));
    hit[static_cast<size_t>(sq.k(y))] = true;
  }
  for (bool b : hit)
    if (!b) return false;
  return universal(sq.span(), cand);
}

}  // namespace deltakit::oracle

#endif
