#ifndef DELTAKIT_TESTS_HELPERS_HPP
#define DELTAKIT_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "deltakit/monotone.hpp"

namespace deltakit::testing {

/// Uniform-ish random monotone map [m] -> [n] (sorted independent values).
inline MonotoneMap random_map(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> value(0, n);
  std::vector<int> vals(static_cast<size_t>(m) + 1);
  for (auto& v : vals) v = value(rng);
  std::sort(vals.begin(), vals.end());
  return MonotoneMap(m, n, std::move(vals));
}

inline MonotoneMap random_map(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  return random_map(rng, dim(rng), dim(rng));
}

}  // namespace deltakit::testing

#endif
