#include "deltakit/monotone.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace deltakit {

MonotoneMap::MonotoneMap(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
  if (dom_ < 0 || cod_ < 0)
    throw std::invalid_argument("MonotoneMap: ordinals must be nonnegative");
  if (values_.size() != static_cast<size_t>(dom_) + 1)
    throw std::invalid_argument("MonotoneMap: expected " + std::to_string(dom_ + 1) +
                                " values, got " + std::to_string(values_.size()));
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > cod_)
      throw std::invalid_argument("MonotoneMap: value out of range at " + std::to_string(i));
    if (i > 0 && values_[i] < values_[i - 1])
      throw std::invalid_argument("MonotoneMap: not monotone at " + std::to_string(i));
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface: need n >= 1, 0 <= i <= n");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int x = 0; x <= n; ++x)
    if (x != i) v.push_back(x);
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("codegeneracy: need 0 <= i <= n");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n) + 2);
  for (int x = 0; x <= n + 1; ++x) v.push_back(x <= i ? x : x - 1);
  return MonotoneMap(n + 1, n, std::move(v));
}

MonotoneMap MonotoneMap::constant(int m, int n, int v) {
  return MonotoneMap(m, n, std::vector<int>(static_cast<size_t>(m) + 1, v));
}

std::string MonotoneMap::str() const {
  std::ostringstream os;
  os << "[" << dom_ << "]->[" << cod_ << "]:(";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ",";
    os << values_[i];
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f) { return os << f.str(); }

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.cod() != f.dom())
    throw std::invalid_argument("compose: codomain of " + g.str() +
                                " does not match domain of " + f.str());
  std::vector<int> v(static_cast<size_t>(g.dom()) + 1);
  for (int i = 0; i <= g.dom(); ++i) v[static_cast<size_t>(i)] = f(g(i));
  return MonotoneMap(g.dom(), f.cod(), std::move(v));
}

MonotoneMap compose_chain(int dom, const std::vector<MonotoneMap>& chain) {
  MonotoneMap acc = MonotoneMap::identity(dom);
  for (const auto& step : chain) acc = compose(step, acc);
  return acc;
}

int image_size(const MonotoneMap& f) {
  int count = 1;
  for (int i = 1; i <= f.dom(); ++i)
    if (f(i) != f(i - 1)) ++count;
  return count;
}

int defect(const MonotoneMap& f) { return f.dom() + f.cod() + 2 - 2 * image_size(f); }

bool is_coface(const MonotoneMap& f) { return image_size(f) == f.dom() + 1; }

bool is_codegeneracy(const MonotoneMap& f) { return image_size(f) == f.cod() + 1; }

bool is_identity(const MonotoneMap& f) {
  if (f.dom() != f.cod()) return false;
  for (int i = 0; i <= f.dom(); ++i)
    if (f(i) != i) return false;
  return true;
}

bool preserves_min(const MonotoneMap& f) { return f(0) == 0; }

bool preserves_max(const MonotoneMap& f) { return f(f.dom()) == f.cod(); }

bool is_efficient(const MonotoneMap& f, const MonotoneMap& g) {
  return defect(compose(f, g)) == defect(f) + defect(g);
}

std::pair<MonotoneMap, MonotoneMap> reedy_factorize(const MonotoneMap& f) {
  const int k = image_size(f) - 1;
  // s collapses runs of equal values; d enumerates the image.
  std::vector<int> sv(static_cast<size_t>(f.dom()) + 1);
  std::vector<int> dv;
  dv.reserve(static_cast<size_t>(k) + 1);
  int rank = 0;
  dv.push_back(f(0));
  sv[0] = 0;
  for (int i = 1; i <= f.dom(); ++i) {
    if (f(i) != f(i - 1)) {
      ++rank;
      dv.push_back(f(i));
    }
    sv[static_cast<size_t>(i)] = rank;
  }
  return {MonotoneMap(f.dom(), k, std::move(sv)), MonotoneMap(k, f.cod(), std::move(dv))};
}

std::vector<MonotoneMap> factor_into_generators(const MonotoneMap& f) {
  auto [s, d] = reedy_factorize(f);
  std::vector<MonotoneMap> out;
  out.reserve(static_cast<size_t>(defect(f)));

  // Codegeneracies: collapse doubled positions from the highest down, so the
  // positions below stay put.  Collapsing at position j of [cur] is s^{cur-1,j}.
  std::vector<int> doubled;
  for (int i = 0; i + 1 <= s.dom(); ++i)
    if (s(i) == s(i + 1)) doubled.push_back(i);
  int cur = s.dom();
  for (auto it = doubled.rbegin(); it != doubled.rend(); ++it) {
    out.push_back(MonotoneMap::codegeneracy(cur - 1, *it));
    --cur;
  }

  // Cofaces: insert missing codomain elements from the lowest up; with all
  // smaller elements already present, the local skip index equals the value.
  std::vector<int> missing;
  {
    std::vector<bool> hit(static_cast<size_t>(d.cod()) + 1, false);
    for (int i = 0; i <= d.dom(); ++i) hit[static_cast<size_t>(d(i))] = true;
    for (int v = 0; v <= d.cod(); ++v)
      if (!hit[static_cast<size_t>(v)]) missing.push_back(v);
  }
  for (int v : missing) {
    out.push_back(MonotoneMap::coface(cur + 1, v));
    ++cur;
  }
  return out;
}

std::vector<MonotoneMap> enumerate_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  out.reserve(static_cast<size_t>(count_maps(m, n)));
  for (const auto& f : MapRange(m, n)) out.push_back(f);
  return out;
}

MapRange::iterator::iterator(int m, int n, bool end) : m_(m), n_(n), done_(end) {
  if (!done_) cur_.assign(static_cast<size_t>(m_) + 1, 0);
}

MonotoneMap MapRange::iterator::operator*() const { return MonotoneMap(m_, n_, cur_); }

MapRange::iterator& MapRange::iterator::operator++() {
  // Next nondecreasing sequence over 0..n in lexicographic order.
  int i = m_;
  while (i >= 0 && cur_[static_cast<size_t>(i)] == n_) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  const int v = cur_[static_cast<size_t>(i)] + 1;
  for (int j = i; j <= m_; ++j) cur_[static_cast<size_t>(j)] = v;
  return *this;
}

std::uint64_t count_maps(int m, int n) {
  // C(m+n+1, m+1)
  const int top = m + n + 1;
  const int pick = std::min(m + 1, n);
  std::uint64_t r = 1;
  for (int i = 1; i <= pick; ++i) r = r * static_cast<std::uint64_t>(top - pick + i) / i;
  return r;
}

}  // namespace deltakit
