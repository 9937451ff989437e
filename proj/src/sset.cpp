#include "deltakit/sset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace deltakit {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

TruncatedSSet::TruncatedSSet(int dim, std::vector<std::vector<std::string>> cells,
                             std::vector<std::vector<CellMap>> faces,
                             std::vector<std::vector<CellMap>> degeneracies)
    : dim_(dim), cells_(std::move(cells)), faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (dim_ < 0) throw std::invalid_argument("TruncatedSSet: negative dimension");
  if (cells_.size() != static_cast<size_t>(dim_) + 1)
    throw std::invalid_argument("TruncatedSSet: expected cells for 0.." + std::to_string(dim_));
  for (auto& level : cells_) {
    std::sort(level.begin(), level.end());
    if (std::adjacent_find(level.begin(), level.end()) != level.end())
      throw std::invalid_argument("TruncatedSSet: duplicate cell identifier");
  }
  if (faces_.size() != static_cast<size_t>(dim_) + 1)
    throw std::invalid_argument("TruncatedSSet: faces must be indexed 0..dim");
  if (!faces_[0].empty())
    throw std::invalid_argument("TruncatedSSet: no face maps exist at dimension 0");
  for (int n = 1; n <= dim_; ++n) {
    if (faces_[static_cast<size_t>(n)].size() != static_cast<size_t>(n) + 1)
      throw std::invalid_argument("TruncatedSSet: need faces d_0..d_" + std::to_string(n) +
                                  " at dimension " + std::to_string(n));
    for (int i = 0; i <= n; ++i) {
      const CellMap& table = faces_[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& x : cells_[static_cast<size_t>(n)]) {
        auto it = table.find(x);
        if (it == table.end())
          throw std::invalid_argument("TruncatedSSet: face " + std::to_string(n) + "," +
                                      std::to_string(i) + " undefined on " + x);
        if (!has_cell(n - 1, it->second))
          throw std::invalid_argument("TruncatedSSet: face image not a cell: " + it->second);
      }
    }
  }
  if (degeneracies_.size() != static_cast<size_t>(dim_))
    throw std::invalid_argument("TruncatedSSet: degeneracies must be indexed 0..dim-1");
  for (int n = 0; n < dim_; ++n) {
    if (degeneracies_[static_cast<size_t>(n)].size() != static_cast<size_t>(n) + 1)
      throw std::invalid_argument("TruncatedSSet: need degeneracies s_0..s_" + std::to_string(n) +
                                  " at dimension " + std::to_string(n));
    for (int i = 0; i <= n; ++i) {
      const CellMap& table = degeneracies_[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& x : cells_[static_cast<size_t>(n)]) {
        auto it = table.find(x);
        if (it == table.end())
          throw std::invalid_argument("TruncatedSSet: degeneracy " + std::to_string(n) + "," +
                                      std::to_string(i) + " undefined on " + x);
        if (!has_cell(n + 1, it->second))
          throw std::invalid_argument("TruncatedSSet: degeneracy image not a cell: " + it->second);
      }
    }
  }
}

const std::vector<std::string>& TruncatedSSet::cells(int n) const {
  if (n < 0 || n > dim_) throw OutOfTruncationError("cells: dimension " + std::to_string(n));
  return cells_[static_cast<size_t>(n)];
}

bool TruncatedSSet::has_cell(int n, const std::string& x) const {
  if (n < 0 || n > dim_) return false;
  const auto& level = cells_[static_cast<size_t>(n)];
  return std::binary_search(level.begin(), level.end(), x);
}

const std::string& TruncatedSSet::face(int n, int i, const std::string& x) const {
  return face_table(n, i).at(x);
}

const std::string& TruncatedSSet::degeneracy(int n, int i, const std::string& x) const {
  return degeneracy_table(n, i).at(x);
}

const TruncatedSSet::CellMap& TruncatedSSet::face_table(int n, int i) const {
  if (n < 1 || n > dim_ || i < 0 || i > n)
    throw OutOfTruncationError("face table d_{" + std::to_string(n) + "," + std::to_string(i) +
                               "}");
  return faces_[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const TruncatedSSet::CellMap& TruncatedSSet::degeneracy_table(int n, int i) const {
  if (n < 0 || n >= dim_ || i < 0 || i > n)
    throw OutOfTruncationError("degeneracy table s_{" + std::to_string(n) + "," +
                               std::to_string(i) + "}");
  return degeneracies_[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

std::vector<std::string> validate(const TruncatedSSet& X) {
  std::vector<std::string> issues;
  const int N = X.dim();
  auto d = [&](int n, int i, const std::string& x) { return X.face(n, i, x); };
  auto s = [&](int n, int i, const std::string& x) { return X.degeneracy(n, i, x); };

  // d_i d_j = d_{j-1} d_i for i < j (on X_n, n >= 2)
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (const auto& x : X.cells(n))
          if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
            issues.push_back("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                             " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                             " at (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                             ", j=" + std::to_string(j) + ") on " + x);

  // s_i s_j = s_{j+1} s_i for i <= j (on X_n, n + 2 <= N)
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (const auto& x : X.cells(n))
          if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)))
            issues.push_back("s_" + std::to_string(i) + " s_" + std::to_string(j) +
                             " != s_" + std::to_string(j + 1) + " s_" + std::to_string(i) +
                             " at (n=" + std::to_string(n) + ")" + " on " + x);

  // mixed identities on X_n, n + 1 <= N
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (const auto& x : X.cells(n)) {
        for (int i = 0; i <= n + 1; ++i) {
          const std::string lhs = d(n + 1, i, s(n, j, x));
          std::string rhs;
          if (i < j)
            rhs = (n >= 1) ? s(n - 1, j - 1, d(n, i, x)) : "";
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = (n >= 1) ? s(n - 1, j, d(n, i - 1, x)) : "";
          if (i >= j && i <= j + 1) {
            if (lhs != x)
              issues.push_back("d_" + std::to_string(i) + " s_" + std::to_string(j) +
                               " != id at (n=" + std::to_string(n) + ") on " + x);
          } else if (n >= 1 && lhs != rhs) {
            issues.push_back("d_" + std::to_string(i) + " s_" + std::to_string(j) +
                             " mismatch at (n=" + std::to_string(n) + ") on " + x);
          }
        }
      }

  // degeneracies are (split) monic
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) {
      std::set<std::string> seen;
      for (const auto& x : X.cells(n))
        if (!seen.insert(s(n, i, x)).second)
          issues.push_back("s_{" + std::to_string(n) + "," + std::to_string(i) +
                           "} is not injective");
    }
  return issues;
}

TruncatedSSet::CellMap evaluate(const TruncatedSSet& X, const MonotoneMap& f) {
  if (f.cod() > X.dim() || f.dom() > X.dim())
    throw OutOfTruncationError("evaluate: map " + f.str() + " exceeds truncation " +
                               std::to_string(X.dim()));
  const auto chain = factor_into_generators(f);
  TruncatedSSet::CellMap out;
  for (const auto& z : X.cells(f.cod())) {
    std::string cur = z;
    int level = f.cod();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      // a generating coface d^{n,i} acts as the face table d_{n,i};
      // a generating codegeneracy s^{n,i} as the degeneracy table s_{n,i}
      if (it->dom() < it->cod()) {
        const int n = it->cod();
        const int i = [&] {
          for (int v = 0; v <= it->dom(); ++v)
            if ((*it)(v) != v) return v;
          return it->cod();
        }();
        cur = X.face(n, i, cur);
        level = n - 1;
      } else {
        const int n = it->cod();
        const int i = [&] {
          for (int v = 0; v <= it->cod(); ++v)
            if ((*it)(v + 1) == v) return v;
          return 0;  // unreachable
        }();
        cur = X.degeneracy(n, i, cur);
        level = n + 1;
      }
    }
    (void)level;
    out[z] = cur;
  }
  return out;
}

SetSquare::SetSquare(std::vector<std::string> A_, std::vector<std::string> B_,
                     std::vector<std::string> C_, std::vector<std::string> D_,
                     std::map<std::string, std::string> top_,
                     std::map<std::string, std::string> left_,
                     std::map<std::string, std::string> right_,
                     std::map<std::string, std::string> bottom_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)),
      top(std::move(top_)), left(std::move(left_)), right(std::move(right_)),
      bottom(std::move(bottom_)) {
  for (const auto& a : A)
    if (right.at(top.at(a)) != bottom.at(left.at(a)))
      throw NonCommutingError("SetSquare: does not commute at " + a);
}

bool is_weak_pullback(const SetSquare& sq) {
  for (const auto& b : sq.B)
    for (const auto& c : sq.C) {
      if (sq.right.at(b) != sq.bottom.at(c)) continue;
      bool found = false;
      for (const auto& a : sq.A)
        if (sq.top.at(a) == b && sq.left.at(a) == c) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_strong_pullback(const SetSquare& sq) {
  for (const auto& b : sq.B)
    for (const auto& c : sq.C) {
      if (sq.right.at(b) != sq.bottom.at(c)) continue;
      int count = 0;
      for (const auto& a : sq.A)
        if (sq.top.at(a) == b && sq.left.at(a) == c) ++count;
      if (count != 1) return false;
    }
  return true;
}

SetSquare apply_square(const TruncatedSSet& X, const Square& q) {
  const int bound = std::max({q.m(), q.p(), q.q(), q.n()});
  if (bound > X.dim())
    throw OutOfTruncationError("apply_square: square reaches dimension " + std::to_string(bound) +
                               " > " + std::to_string(X.dim()));
  return SetSquare(X.cells(q.n()), X.cells(q.p()), X.cells(q.q()), X.cells(q.m()),
                   evaluate(X, q.h), evaluate(X, q.k), evaluate(X, q.f), evaluate(X, q.g));
}

bool comp_contains(const TruncatedSSet& X, const Square& q) {
  return is_weak_pullback(apply_square(X, q));
}

bool ex_contains(const TruncatedSSet& X, const Square& q) {
  return is_strong_pullback(apply_square(X, q));
}

namespace {

ClassifierReport run_family(const TruncatedSSet& X, const std::vector<Square>& family,
                            bool strong) {
  ClassifierReport report;
  report.truncation = X.dim();
  for (const auto& sq : family) {
    const bool ok = strong ? ex_contains(X, sq) : comp_contains(X, sq);
    if (!ok) {
      report.holds = false;
      report.witness = sq;
      return report;
    }
  }
  return report;
}

std::vector<Square> basic_coface_family(int N, bool inner_only) {
  std::vector<Square> out;
  for (int n = 2; n <= N; ++n)
    for (const auto& e : catalog_basic_coface(n)) {
      // catalog entries have span (d^i, d^{j-1}); recover i < j from edges
      const auto mi = [&](const MonotoneMap& mmap) {
        for (int v = 0; v <= mmap.dom(); ++v)
          if (mmap(v) != v) return v;
        return mmap.cod();
      };
      const int i = mi(e.square.f);
      const int j = mi(e.square.g) + 1;
      if (inner_only && i >= j - 1) continue;
      out.push_back(e.square);
    }
  return out;
}

}  // namespace

ClassifierReport span_complete(const TruncatedSSet& X) {
  return run_family(X, basic_coface_family(X.dim(), false), false);
}

ClassifierReport inner_span_complete(const TruncatedSSet& X) {
  return run_family(X, basic_coface_family(X.dim(), true), false);
}

namespace {

Square segal_square(int a, int b) {
  std::vector<int> hv(static_cast<size_t>(a) + 1), kv(static_cast<size_t>(b) + 1);
  for (int x = 0; x <= a; ++x) hv[static_cast<size_t>(x)] = x;
  for (int y = 0; y <= b; ++y) kv[static_cast<size_t>(y)] = a + y;
  return Square(MonotoneMap::constant(0, a, a), MonotoneMap::constant(0, b, 0),
                MonotoneMap(a, a + b, std::move(hv)), MonotoneMap(b, a + b, std::move(kv)));
}

enum class MixedPart { Left, Middle, Right };

std::vector<Square> typemixed_family(int N, bool with_left_right, bool with_middle) {
  std::vector<Square> out;
  for (int n = 0; n <= N; ++n)
    for (const auto& e : catalog_basic_pushout(n)) {
      const Square& sq = e.square;
      const bool top_coface = is_coface(sq.f) && !is_identity(sq.f);
      const bool left_degen = is_codegeneracy(sq.g) && !is_identity(sq.g);
      if (!(top_coface && left_degen)) continue;  // keep only the mixed family
      const bool middle = is_identity(sq.k);
      if (middle ? !with_middle : !with_left_right) continue;
      if (std::max({sq.m(), sq.p(), sq.q(), sq.n()}) > N) continue;
      out.push_back(sq);
    }
  return out;
}

}  // namespace

ClassifierReport segal_nerve(const TruncatedSSet& X) {
  std::vector<Square> family;
  for (int a = 0; a <= X.dim(); ++a)
    for (int b = 0; a + b <= X.dim(); ++b) family.push_back(segal_square(a, b));
  return run_family(X, family, true);
}

ClassifierReport stiff(const TruncatedSSet& X) {
  return run_family(X, typemixed_family(X.dim(), true, false), true);
}

ClassifierReport split(const TruncatedSSet& X) {
  return run_family(X, typemixed_family(X.dim(), true, true), true);
}

ClassifierReport twosegal_restricted(const TruncatedSSet& X) {
  std::vector<Square> family;
  for (int n = 2; n <= X.dim(); ++n)
    for (int j = 2; j <= n - 1; ++j)
      for (int i = 1; i < j - 1; ++i)
        family.push_back(Square(MonotoneMap::coface(n - 1, i), MonotoneMap::coface(n - 1, j - 1),
                                MonotoneMap::coface(n, j), MonotoneMap::coface(n, i)));
  return run_family(X, family, true);
}

bool is_span_complete(const TruncatedSSet& X) { return span_complete(X).holds; }
bool is_inner_span_complete(const TruncatedSSet& X) { return inner_span_complete(X).holds; }
bool is_segal_nerve(const TruncatedSSet& X) { return segal_nerve(X).holds; }
bool is_stiff(const TruncatedSSet& X) { return stiff(X).holds; }
bool is_split(const TruncatedSSet& X) { return split(X).holds; }
bool is_2segal_restricted(const TruncatedSSet& X) { return twosegal_restricted(X).holds; }

ForcedDiscreteReport forced_discrete(const TruncatedSSet& X) {
  ForcedDiscreteReport report;
  report.truncation = X.dim();
  std::vector<Square> family;
  // middle (typemixed) squares: objects reach n+2
  for (int n = 0; n + 2 <= X.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      family.push_back(Square(
          MonotoneMap::coface(n + 2, i + 1), MonotoneMap::codegeneracy(n, i),
          compose(MonotoneMap::codegeneracy(n, i), MonotoneMap::codegeneracy(n + 1, i + 1)),
          MonotoneMap::identity(n)));
  // basic coface squares with j = i + 1
  for (int n = 2; n <= X.dim(); ++n)
    for (int i = 0; i <= n - 1; ++i)
      family.push_back(Square(MonotoneMap::coface(n - 1, i), MonotoneMap::coface(n - 1, i),
                              MonotoneMap::coface(n, i + 1), MonotoneMap::coface(n, i)));
  for (const auto& sq : family)
    if (!comp_contains(X, sq)) {
      report.families_hold = false;
      report.witness = sq;
      return report;
    }
  report.all_bijective = all_structure_maps_bijective(X);
  return report;
}

bool all_structure_maps_bijective(const TruncatedSSet& X) {
  auto bijective = [](const TruncatedSSet::CellMap& table, size_t target_size) {
    std::set<std::string> image;
    for (const auto& [k, v] : table) image.insert(v);
    return image.size() == table.size() && image.size() == target_size;
  };
  for (int n = 1; n <= X.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!bijective(X.face_table(n, i), X.cells(n - 1).size())) return false;
  for (int n = 0; n < X.dim(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!bijective(X.degeneracy_table(n, i), X.cells(n + 1).size())) return false;
  return true;
}

std::optional<std::string> find_filler(const TruncatedSSet& X, int n, int i, int j,
                                       const std::string& x, const std::string& y) {
  if (n < 2 || n > X.dim()) throw OutOfTruncationError("find_filler: n out of range");
  if (!(0 <= i && i < j && j <= n)) throw std::invalid_argument("find_filler: need 0 <= i < j <= n");
  if (!X.has_cell(n - 1, x) || !X.has_cell(n - 1, y))
    throw std::invalid_argument("find_filler: x, y must be (n-1)-cells");
  if (X.face(n - 1, i, x) != X.face(n - 1, j - 1, y))
    throw IncompatiblePairError("find_filler: d_" + std::to_string(i) + " x != d_" +
                                std::to_string(j - 1) + " y");
  for (const auto& z : X.cells(n))
    if (X.face(n, j, z) == x && X.face(n, i, z) == y) return z;
  return std::nullopt;
}

int count_fillers(const TruncatedSSet& X, int n, int i, int j, const std::string& x,
                  const std::string& y) {
  int count = 0;
  for (const auto& z : X.cells(n))
    if (X.face(n, j, z) == x && X.face(n, i, z) == y) ++count;
  return count;
}

FinCategory::FinCategory(std::vector<std::string> objects_, std::vector<Morphism> morphisms_,
                         std::map<std::string, std::string> identities_,
                         std::map<std::pair<std::string, std::string>, std::string> table_)
    : objects(std::move(objects_)), morphisms(std::move(morphisms_)),
      identities(std::move(identities_)), table(std::move(table_)) {
  for (const auto& obj : objects) {
    auto it = identities.find(obj);
    if (it == identities.end())
      throw std::invalid_argument("FinCategory: missing identity for " + obj);
    const Morphism& id_m = morphism(it->second);
    if (id_m.src != obj || id_m.dst != obj)
      throw std::invalid_argument("FinCategory: identity of " + obj + " has wrong endpoints");
  }
  for (const auto& a : morphisms)
    for (const auto& b : morphisms) {
      if (a.dst != b.src) continue;
      const std::string c = compose_pair(a.name, b.name);
      const Morphism& cm = morphism(c);
      if (cm.src != a.src || cm.dst != b.dst)
        throw std::invalid_argument("FinCategory: composite " + c + " has wrong endpoints");
    }
  for (const auto& a : morphisms) {
    if (compose_pair(identities.at(a.src), a.name) != a.name ||
        compose_pair(a.name, identities.at(a.dst)) != a.name)
      throw std::invalid_argument("FinCategory: unit law fails at " + a.name);
  }
  for (const auto& a : morphisms)
    for (const auto& b : morphisms)
      for (const auto& c : morphisms) {
        if (a.dst != b.src || b.dst != c.src) continue;
        if (compose_pair(compose_pair(a.name, b.name), c.name) !=
            compose_pair(a.name, compose_pair(b.name, c.name)))
          throw std::invalid_argument("FinCategory: associativity fails at (" + a.name + "," +
                                      b.name + "," + c.name + ")");
      }
}

const FinCategory::Morphism& FinCategory::morphism(const std::string& name) const {
  for (const auto& m : morphisms)
    if (m.name == name) return m;
  throw std::invalid_argument("FinCategory: unknown morphism " + name);
}

std::string FinCategory::compose_pair(const std::string& first, const std::string& then) const {
  auto it = table.find({first, then});
  if (it == table.end())
    throw std::invalid_argument("FinCategory: composition undefined for (" + first + "," + then +
                                ")");
  return it->second;
}

FinCategory FinCategory::walking_arrow() {
  return FinCategory({"0", "1"},
                     {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}},
                     {{"0", "id0"}, {"1", "id1"}},
                     {{{"id0", "id0"}, "id0"},
                      {{"id1", "id1"}, "id1"},
                      {{"id0", "a"}, "a"},
                      {{"a", "id1"}, "a"}});
}

FinCategory FinCategory::cyclic_group(int order) {
  if (order < 1) throw std::invalid_argument("cyclic_group: order >= 1");
  std::vector<Morphism> ms;
  std::map<std::string, std::string> ids{{"*", "g0"}};
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (int i = 0; i < order; ++i) ms.push_back({"g" + std::to_string(i), "*", "*"});
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      table[{"g" + std::to_string(i), "g" + std::to_string(j)}] =
          "g" + std::to_string((i + j) % order);
  return FinCategory({"*"}, std::move(ms), std::move(ids), std::move(table));
}

FinCategory FinCategory::chain_poset(int objects) {
  if (objects < 1) throw std::invalid_argument("chain_poset: need >= 1 object");
  std::vector<std::string> obs;
  std::vector<Morphism> ms;
  std::map<std::string, std::string> ids;
  std::map<std::pair<std::string, std::string>, std::string> table;
  auto leq_name = [](int a, int b) { return "m" + std::to_string(a) + std::to_string(b); };
  for (int a = 0; a < objects; ++a) {
    obs.push_back(std::to_string(a));
    ids[std::to_string(a)] = leq_name(a, a);
  }
  for (int a = 0; a < objects; ++a)
    for (int b = a; b < objects; ++b)
      ms.push_back({leq_name(a, b), std::to_string(a), std::to_string(b)});
  for (int a = 0; a < objects; ++a)
    for (int b = a; b < objects; ++b)
      for (int c = b; c < objects; ++c) table[{leq_name(a, b), leq_name(b, c)}] = leq_name(a, c);
  return FinCategory(std::move(obs), std::move(ms), std::move(ids), std::move(table));
}

TruncatedSSet nerve(const FinCategory& C, int N) {
  std::vector<std::vector<std::vector<std::string>>> strings(static_cast<size_t>(N) + 1);
  strings[0] = {};
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(N) + 1);
  for (const auto& obj : C.objects) cells[0].push_back(obj);
  // level n >= 1: composable strings of n morphism names
  std::vector<std::vector<std::string>> level_strings;  // current level, as vectors
  for (const auto& m : C.morphisms) level_strings.push_back({m.name});
  for (int n = 1; n <= N; ++n) {
    for (const auto& str : level_strings) cells[static_cast<size_t>(n)].push_back(join(str, "|"));
    if (n == N) break;
    std::vector<std::vector<std::string>> next;
    for (const auto& str : level_strings)
      for (const auto& m : C.morphisms)
        if (C.morphism(str.back()).dst == m.src) {
          auto ext = str;
          ext.push_back(m.name);
          next.push_back(std::move(ext));
        }
    level_strings = std::move(next);
  }

  auto split_string = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) parts.push_back(item);
    return parts;
  };

  std::vector<std::vector<TruncatedSSet::CellMap>> faces(static_cast<size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    faces[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (const auto& cell : cells[static_cast<size_t>(n)]) {
      const auto parts = split_string(cell);
      for (int i = 0; i <= n; ++i) {
        std::string image;
        if (n == 1) {
          image = (i == 0) ? C.morphism(parts[0]).dst : C.morphism(parts[0]).src;
        } else if (i == 0) {
          image = join({parts.begin() + 1, parts.end()}, "|");
        } else if (i == n) {
          image = join({parts.begin(), parts.end() - 1}, "|");
        } else {
          std::vector<std::string> out(parts.begin(), parts.begin() + (i - 1));
          out.push_back(C.compose_pair(parts[static_cast<size_t>(i - 1)],
                                       parts[static_cast<size_t>(i)]));
          out.insert(out.end(), parts.begin() + i + 1, parts.end());
          image = join(out, "|");
        }
        faces[static_cast<size_t>(n)][static_cast<size_t>(i)][cell] = image;
      }
    }
  }

  std::vector<std::vector<TruncatedSSet::CellMap>> degeneracies(
      static_cast<size_t>(N > 0 ? N : 0));
  for (int n = 0; n < N; ++n) {
    degeneracies[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (const auto& cell : cells[static_cast<size_t>(n)]) {
      std::vector<std::string> parts = (n == 0) ? std::vector<std::string>{} : split_string(cell);
      for (int i = 0; i <= n; ++i) {
        std::string vertex;
        if (n == 0)
          vertex = cell;
        else if (i == 0)
          vertex = C.morphism(parts[0]).src;
        else
          vertex = C.morphism(parts[static_cast<size_t>(i - 1)]).dst;
        std::vector<std::string> out(parts.begin(), parts.begin() + i);
        out.push_back(C.identities.at(vertex));
        out.insert(out.end(), parts.begin() + i, parts.end());
        degeneracies[static_cast<size_t>(n)][static_cast<size_t>(i)][cell] = join(out, "|");
      }
    }
  }
  return TruncatedSSet(N, std::move(cells), std::move(faces), std::move(degeneracies));
}

TruncatedSSet discrete_sset(const std::vector<std::string>& points, int N) {
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(N) + 1, points);
  std::vector<std::vector<TruncatedSSet::CellMap>> faces(static_cast<size_t>(N) + 1);
  std::vector<std::vector<TruncatedSSet::CellMap>> degeneracies(static_cast<size_t>(N > 0 ? N : 0));
  TruncatedSSet::CellMap ident;
  for (const auto& pt : points) ident[pt] = pt;
  for (int n = 1; n <= N; ++n)
    faces[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, ident);
  for (int n = 0; n < N; ++n)
    degeneracies[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, ident);
  return TruncatedSSet(N, std::move(cells), std::move(faces), std::move(degeneracies));
}

bool horn_has_filler(const TruncatedSSet& X, int n, int k,
                     const std::map<int, std::string>& faces) {
  if (static_cast<int>(faces.size()) != n || faces.count(k))
    throw std::invalid_argument("horn_has_filler: need exactly the faces at indices != k");
  for (const auto& z : X.cells(n)) {
    bool match = true;
    for (const auto& [i, x] : faces)
      if (X.face(n, i, z) != x) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

namespace {

// Enumerates all compatible horn instances and tests fillers.
bool all_horns_fill(const TruncatedSSet& X, int n, int k) {
  std::vector<int> idx;
  for (int i = 0; i <= n; ++i)
    if (i != k) idx.push_back(i);
  const auto& lower = X.cells(n - 1);
  std::map<int, std::string> chosen;

  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == idx.size()) return horn_has_filler(X, n, k, chosen);
    const int i = idx[pos];
    for (const auto& x : lower) {
      bool ok = true;
      if (n >= 2)
        for (const auto& [j, y] : chosen) {
          // compatibility d_a x_b = d_{b-1} x_a for a < b
          const int a = std::min(i, j), b = std::max(i, j);
          const std::string& xa = (a == i) ? x : y;
          const std::string& xb = (b == i) ? x : y;
          if (X.face(n - 1, a, xb) != X.face(n - 1, b - 1, xa)) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      chosen[i] = x;
      if (!rec(pos + 1)) {
        chosen.erase(i);
        return false;
      }
      chosen.erase(i);
    }
    return true;
  };
  return rec(0);
}

}  // namespace

bool is_kan(const TruncatedSSet& X) {
  for (int n = 1; n <= X.dim(); ++n)
    for (int k = 0; k <= n; ++k)
      if (!all_horns_fill(X, n, k)) return false;
  return true;
}

bool is_quasicategory(const TruncatedSSet& X) {
  for (int n = 2; n <= X.dim(); ++n)
    for (int k = 1; k < n; ++k)
      if (!all_horns_fill(X, n, k)) return false;
  return true;
}

}  // namespace deltakit
