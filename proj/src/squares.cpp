#include "deltakit/squares.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deltakit/vee.hpp"

namespace deltakit {

Span::Span(MonotoneMap f_, MonotoneMap g_) : f(std::move(f_)), g(std::move(g_)) {
  if (f.dom() != g.dom()) throw std::invalid_argument("Span: legs must share their domain");
}

Square::Square(MonotoneMap f_, MonotoneMap g_, MonotoneMap h_, MonotoneMap k_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)), k(std::move(k_)) {
  if (f.dom() != g.dom() || h.dom() != f.cod() || k.dom() != g.cod() || h.cod() != k.cod())
    throw NonCommutingError("Square: edge shapes do not assemble");
  if (compose(h, f) != compose(k, g))
    throw NonCommutingError("Square: h∘f != k∘g for f=" + f.str() + " g=" + g.str() +
                            " h=" + h.str() + " k=" + k.str());
}

Square Square::trivial_horizontal(const MonotoneMap& f) {
  return Square(f, MonotoneMap::identity(f.dom()), MonotoneMap::identity(f.cod()), f);
}

Square Square::trivial_vertical(const MonotoneMap& g) {
  return Square(MonotoneMap::identity(g.dom()), g, g, MonotoneMap::identity(g.cod()));
}

Square Square::mirrored() const { return Square(g, f, k, h); }

Square Square::normalized() const {
  const Square m = mirrored();
  auto key = [](const Square& s) { return std::tie(s.f, s.g, s.h, s.k); };
  return key(*this) <= key(m) ? *this : m;
}

bool Square::equals_up_to_mirror(const Square& other) const {
  return *this == other || mirrored() == other;
}

bool Square::is_trivial() const {
  return (is_identity(g) && is_identity(h)) || (is_identity(f) && is_identity(k));
}

std::string Square::str() const {
  std::ostringstream os;
  os << "{f=" << f.str() << ", g=" << g.str() << ", h=" << h.str() << ", k=" << k.str() << "}";
  return os.str();
}

Square hcompose(const Square& left, const Square& right) {
  if (right.g != left.h) throw std::invalid_argument("hcompose: shared edge mismatch");
  return Square(compose(right.f, left.f), left.g, right.h, compose(right.k, left.k));
}

Square vcompose(const Square& top, const Square& bottom) {
  if (bottom.f != top.k) throw std::invalid_argument("vcompose: shared edge mismatch");
  return Square(top.f, compose(bottom.g, top.g), compose(bottom.h, top.h), bottom.k);
}

Grid::Grid(std::vector<std::vector<Square>> cells_) : cells(std::move(cells_)) {
  if (cells.empty() || cells[0].empty()) throw std::invalid_argument("Grid: empty");
  const size_t ncols = cells[0].size();
  for (const auto& row : cells)
    if (row.size() != ncols) throw std::invalid_argument("Grid: ragged rows");
  for (size_t r = 0; r < cells.size(); ++r)
    for (size_t c = 0; c < ncols; ++c) {
      if (c + 1 < ncols && cells[r][c].h != cells[r][c + 1].g)
        throw std::invalid_argument("Grid: horizontal edges do not match");
      if (r + 1 < cells.size() && cells[r][c].k != cells[r + 1][c].f)
        throw std::invalid_argument("Grid: vertical edges do not match");
    }
}

Square Grid::composite() const {
  std::vector<Square> row_composites;
  row_composites.reserve(cells.size());
  for (const auto& row : cells) {
    Square acc = row[0];
    for (size_t c = 1; c < row.size(); ++c) acc = hcompose(acc, row[c]);
    row_composites.push_back(acc);
  }
  Square acc = row_composites[0];
  for (size_t r = 1; r < row_composites.size(); ++r) acc = vcompose(acc, row_composites[r]);
  return acc;
}

std::optional<int> pushout_obstruction(const Span& s) {
  const MonotoneMap &f = s.f, &g = s.g;
  const int m = s.m();
  if (f(0) != 0 && g(0) != 0) return 0;
  for (int i = 1; i <= m; ++i)
    if (f(i) > f(i - 1) + 1 && g(i) > g(i - 1) + 1) return i;
  if (f(m) != s.p() && g(m) != s.q()) return m + 1;
  return std::nullopt;
}

bool has_pushout(const Span& s) { return !pushout_obstruction(s).has_value(); }

Square compute_pushout(const Span& s) {
  const auto obstruction = pushout_obstruction(s);
  if (obstruction)
    throw NoPushoutError("compute_pushout: span has no pushout (component " +
                             std::to_string(*obstruction) + ")",
                         *obstruction);
  const int m = s.m();
  const auto dec = VeeDecomposition::canonical(m);
  const auto fparts = components_of_map(s.f, dec).parts;
  const auto gparts = components_of_map(s.g, dec).parts;

  std::vector<MonotoneMap> hs, ks;
  hs.reserve(fparts.size());
  ks.reserve(fparts.size());
  for (int i = 0; i < static_cast<int>(fparts.size()); ++i) {
    const MonotoneMap& fi = fparts[static_cast<size_t>(i)];
    const MonotoneMap& gi = gparts[static_cast<size_t>(i)];
    const int pi = fi.cod(), qi = gi.cod();
    if (i == 0) {
      // leftmost component: one leg is [0] -> [0]
      if (qi == 0) {
        hs.push_back(MonotoneMap::identity(pi));
        ks.push_back(MonotoneMap::constant(0, pi, pi));
      } else {
        hs.push_back(MonotoneMap::constant(0, qi, qi));
        ks.push_back(MonotoneMap::identity(qi));
      }
    } else if (i == static_cast<int>(fparts.size()) - 1) {
      if (qi == 0) {
        hs.push_back(MonotoneMap::identity(pi));
        ks.push_back(MonotoneMap::constant(0, pi, 0));
      } else {
        hs.push_back(MonotoneMap::constant(0, qi, 0));
        ks.push_back(MonotoneMap::identity(qi));
      }
    } else {
      // middle component with source [1]; one of pi, qi is <= 1
      if (qi == 1) {
        hs.push_back(MonotoneMap::identity(pi));
        ks.push_back(fi);
      } else if (pi == 1) {
        hs.push_back(gi);
        ks.push_back(MonotoneMap::identity(qi));
      } else if (qi == 0) {
        hs.push_back(MonotoneMap::constant(pi, 0, 0));
        ks.push_back(MonotoneMap::identity(0));
      } else {
        hs.push_back(MonotoneMap::identity(0));
        ks.push_back(MonotoneMap::constant(qi, 0, 0));
      }
    }
  }
  return Square(s.f, s.g, vee_product(VeeFamily(std::move(hs))),
                vee_product(VeeFamily(std::move(ks))));
}

namespace {

MonotoneMap threshold_geq(int dom, int cut) {
  // [dom] -> [1], x |-> (x >= cut)
  std::vector<int> v(static_cast<size_t>(dom) + 1);
  for (int x = 0; x <= dom; ++x) v[static_cast<size_t>(x)] = x >= cut ? 1 : 0;
  return MonotoneMap(dom, 1, std::move(v));
}

}  // namespace

std::pair<std::pair<MonotoneMap, MonotoneMap>, std::pair<MonotoneMap, MonotoneMap>>
pushout_failure_witness_pair(const Span& s) {
  const auto obstruction = pushout_obstruction(s);
  if (!obstruction) throw HasPushoutError("pushout_failure_witness: span has a pushout");
  const int c = *obstruction;
  const MonotoneMap &f = s.f, &g = s.g;
  const int m = s.m(), p = s.p(), q = s.q();
  if (c == 0) {
    // both legs miss the minimum
    return {{threshold_geq(p, f(0)), MonotoneMap::constant(q, 1, 1)},
            {MonotoneMap::constant(p, 1, 1), threshold_geq(q, g(0))}};
  }
  if (c == m + 1) {
    // both legs miss the maximum
    return {{threshold_geq(p, f(m) + 1), MonotoneMap::constant(q, 1, 0)},
            {MonotoneMap::constant(p, 1, 0), threshold_geq(q, g(m) + 1)}};
  }
  // both legs jump past an interior gap at component c
  return {{threshold_geq(p, f(c - 1) + 1), threshold_geq(q, g(c))},
          {threshold_geq(p, f(c)), threshold_geq(q, g(c - 1) + 1)}};
}

std::pair<MonotoneMap, MonotoneMap> pushout_failure_witness(const Span& s) {
  return pushout_failure_witness_pair(s).first;
}

bool is_pushout_square(const Square& q) {
  if (!has_pushout(q.span())) return false;
  return compute_pushout(q.span()).normalized() == q.normalized();
}

std::string balance_failure(const Square& q) {
  if (!(is_coface(q.f) && is_coface(q.g) && is_coface(q.h) && is_coface(q.k)))
    return "NotCofaces";
  std::vector<bool> hit(static_cast<size_t>(q.n()) + 1, false);
  for (int x = 0; x <= q.h.dom(); ++x) hit[static_cast<size_t>(q.h(x))] = true;
  for (int y = 0; y <= q.k.dom(); ++y) hit[static_cast<size_t>(q.k(y))] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    return "NotJointlySurjective";
  if (q.p() + q.q() != q.m() + q.n()) return "SizeMismatch";
  return "";
}

bool is_balanced(const Square& q) { return balance_failure(q).empty(); }

bool spine_condition(const Square& q) {
  if (!is_coface(q.h) || !is_coface(q.k))
    throw std::invalid_argument("spine_condition: h and k must be cofaces");
  const int n = q.n();
  std::vector<bool> in_h(static_cast<size_t>(n) + 1, false), in_k(in_h);
  for (int x = 0; x <= q.h.dom(); ++x) in_h[static_cast<size_t>(q.h(x))] = true;
  for (int y = 0; y <= q.k.dom(); ++y) in_k[static_cast<size_t>(q.k(y))] = true;
  for (int i = 0; i + 1 <= n; ++i) {
    const auto a = static_cast<size_t>(i), b = static_cast<size_t>(i + 1);
    if (!((in_h[a] && in_h[b]) || (in_k[a] && in_k[b]))) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_set_pushout(const Square& q) {
  const int p = q.p(), qq = q.q(), n = q.n();
  UnionFind uf(p + qq + 2);  // [p] at 0..p, [q] at p+1..p+q+1
  for (int i = 0; i <= q.m(); ++i) uf.unite(q.f(i), p + 1 + q.g(i));
  int classes = 0;
  for (int x = 0; x < p + qq + 2; ++x)
    if (uf.find(x) == x) ++classes;
  if (classes != n + 1) return false;
  std::vector<bool> hit(static_cast<size_t>(n) + 1, false);
  for (int x = 0; x <= p; ++x) hit[static_cast<size_t>(q.h(x))] = true;
  for (int y = 0; y <= qq; ++y) hit[static_cast<size_t>(q.k(y))] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_concrete_pushout(const Square& q) { return is_pushout_square(q) && is_set_pushout(q); }

std::pair<Square, Square> factor_pushout_horizontal(const Square& q, const MonotoneMap& f0,
                                                    const MonotoneMap& f1) {
  if (!is_pushout_square(q)) throw NotPushoutError("factor_pushout_horizontal: not a pushout");
  if (compose(f1, f0) != q.f)
    throw std::invalid_argument("factor_pushout_horizontal: f1∘f0 != f");
  if (defect(q.f) != defect(f0) + defect(f1))
    throw InefficientFactorizationError("factor_pushout_horizontal: factorization not efficient");
  const Square left = compute_pushout(Span(f0, q.g));
  const Square right = compute_pushout(Span(f1, left.h));
  if (hcompose(left, right) != q)
    throw std::logic_error("factor_pushout_horizontal: recomposition mismatch");
  return {left, right};
}

Grid factor_into_basic(const Square& q) {
  if (!is_pushout_square(q)) throw NotPushoutError("factor_into_basic: not a pushout square");
  std::vector<MonotoneMap> col_tops = factor_into_generators(q.f);
  std::vector<MonotoneMap> row_lefts = factor_into_generators(q.g);
  if (col_tops.empty()) col_tops.push_back(MonotoneMap::identity(q.m()));
  if (row_lefts.empty()) row_lefts.push_back(MonotoneMap::identity(q.m()));
  const size_t R = row_lefts.size(), C = col_tops.size();

  // Sweep: tops of row 0 are the generators of f, lefts of column 0 the
  // generators of g; each cell's pushout provides the neighbors' edges.
  std::vector<std::vector<Square>> cells;
  cells.reserve(R);
  std::vector<MonotoneMap> tops = col_tops;
  for (size_t r = 0; r < R; ++r) {
    std::vector<Square> row;
    row.reserve(C);
    MonotoneMap left_edge = row_lefts[r];
    for (size_t c = 0; c < C; ++c) {
      Square cell = compute_pushout(Span(tops[c], left_edge));
      left_edge = cell.h;
      tops[c] = cell.k;
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }
  Grid grid(std::move(cells));
  if (grid.composite() != q) throw std::logic_error("factor_into_basic: recomposition mismatch");
  return grid;
}

namespace {

std::vector<int> missing_elements(const MonotoneMap& coface) {
  std::vector<bool> hit(static_cast<size_t>(coface.cod()) + 1, false);
  for (int x = 0; x <= coface.dom(); ++x) hit[static_cast<size_t>(coface(x))] = true;
  std::vector<int> out;
  for (int v = 0; v <= coface.cod(); ++v)
    if (!hit[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

MonotoneMap drop_above(const MonotoneMap& f, int skipped) {
  // f misses `skipped`; corestrict to the codomain without it.
  std::vector<int> v(static_cast<size_t>(f.dom()) + 1);
  for (int x = 0; x <= f.dom(); ++x) v[static_cast<size_t>(x)] = f(x) - (f(x) > skipped ? 1 : 0);
  return MonotoneMap(f.dom(), f.cod() - 1, std::move(v));
}

MonotoneMap restrict_domain(const MonotoneMap& f, int dom_gap, int cod_gap) {
  // Precompose with d^{dom_gap} and corestrict past cod_gap (which f must
  // send dom_gap to).
  std::vector<int> v(static_cast<size_t>(f.dom()));
  for (int x = 0; x <= f.dom() - 1; ++x) {
    const int src = x + (x >= dom_gap ? 1 : 0);
    v[static_cast<size_t>(x)] = f(src) - (f(src) > cod_gap ? 1 : 0);
  }
  return MonotoneMap(f.dom() - 1, f.cod() - 1, std::move(v));
}

// Splits a balanced square into (left remainder, rightmost column) at
// i ∈ [p] \ im(f).
std::pair<Square, Square> peel_right(const Square& sq, int i) {
  const int hi = sq.h(i);
  const MonotoneMap f_rest = drop_above(sq.f, i);
  const MonotoneMap k_rest = drop_above(sq.k, hi);
  const MonotoneMap h_rest = restrict_domain(sq.h, i, hi);
  Square left(f_rest, sq.g, h_rest, k_rest);
  Square column(MonotoneMap::coface(sq.p(), i), h_rest, sq.h, MonotoneMap::coface(sq.n(), hi));
  return {std::move(left), std::move(column)};
}

// Splits a balanced square into (upper remainder, bottom row) at
// j ∈ [q] \ im(g).
std::pair<Square, Square> peel_bottom(const Square& sq, int j) {
  const int kj = sq.k(j);
  const MonotoneMap g_rest = drop_above(sq.g, j);
  const MonotoneMap h_rest = drop_above(sq.h, kj);
  const MonotoneMap k_rest = restrict_domain(sq.k, j, kj);
  Square upper(sq.f, g_rest, h_rest, k_rest);
  Square row(k_rest, MonotoneMap::coface(sq.q(), j), MonotoneMap::coface(sq.n(), kj), sq.k);
  return {std::move(upper), std::move(row)};
}

}  // namespace

Grid factor_balanced(const Square& q) {
  if (q.is_trivial()) throw TrivialSquareError("factor_balanced: square is trivial");
  const std::string reason = balance_failure(q);
  if (!reason.empty()) throw NotBalancedError("factor_balanced: " + reason);

  const size_t C = static_cast<size_t>(defect(q.f));
  const size_t R = static_cast<size_t>(defect(q.g));

  // Peel full-height columns from the right, smallest missing element first.
  std::vector<Square> columns;
  columns.reserve(C);
  Square cur = q;
  for (size_t c = C; c-- > 1;) {
    const int i = missing_elements(cur.f).front();
    auto [left, column] = peel_right(cur, i);
    columns.push_back(std::move(column));
    cur = std::move(left);
  }
  columns.push_back(std::move(cur));
  std::reverse(columns.begin(), columns.end());

  // Split each column into rows bottom-up.  Column 0 peels at the smallest
  // missing element of its left edge; later columns follow the row
  // boundaries their left neighbor produced, so the grid edges align.
  std::vector<std::vector<Square>> cells(R, std::vector<Square>());
  for (auto& row : cells) row.reserve(C);
  for (size_t c = 0; c < C; ++c) {
    std::vector<Square> column_cells(R, Square::trivial_horizontal(MonotoneMap::identity(0)));
    Square col = columns[c];
    for (size_t r = R; r-- > 1;) {
      int j;
      if (c == 0) {
        j = missing_elements(col.g).front();
      } else {
        // The left edge of this cell must be the neighbor's right edge, a
        // generating coface whose missing element prescribes the peel.
        j = missing_elements(cells[r][c - 1].h).front();
      }
      auto [upper, row_cell] = peel_bottom(col, j);
      column_cells[r] = std::move(row_cell);
      col = std::move(upper);
    }
    column_cells[0] = std::move(col);
    for (size_t r = 0; r < R; ++r) cells[r].push_back(std::move(column_cells[r]));
  }

  Grid grid(std::move(cells));
  if (grid.composite() != q) throw std::logic_error("factor_balanced: recomposition mismatch");
  return grid;
}

namespace {

CatalogEntry entry(Square sq) {
  const bool distinct = !(sq == sq.mirrored());
  return CatalogEntry{std::move(sq), distinct};
}

}  // namespace

std::vector<CatalogEntry> catalog_basic_pushout(int n) {
  std::vector<CatalogEntry> out;
  // (type2face): 0 <= i < j-1 <= n-1
  if (n >= 2)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j - 1; ++i)
        out.push_back(entry(Square(MonotoneMap::coface(n - 1, i), MonotoneMap::coface(n - 1, j - 1),
                                   MonotoneMap::coface(n, j), MonotoneMap::coface(n, i))));
  // (typemixed) left: 0 <= i < j <= n
  if (n >= 1)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        out.push_back(
            entry(Square(MonotoneMap::coface(n + 1, i), MonotoneMap::codegeneracy(n - 1, j - 1),
                         MonotoneMap::codegeneracy(n, j), MonotoneMap::coface(n, i))));
  // (typemixed) middle: 0 <= i <= n
  for (int i = 0; i <= n; ++i)
    out.push_back(entry(Square(
        MonotoneMap::coface(n + 2, i + 1), MonotoneMap::codegeneracy(n, i),
        compose(MonotoneMap::codegeneracy(n, i), MonotoneMap::codegeneracy(n + 1, i + 1)),
        MonotoneMap::identity(n))));
  // (typemixed) right: 0 <= j < i <= n
  if (n >= 1)
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        out.push_back(
            entry(Square(MonotoneMap::coface(n + 1, i + 1), MonotoneMap::codegeneracy(n - 1, j),
                         MonotoneMap::codegeneracy(n, j), MonotoneMap::coface(n, i))));
  // (type2deg) left: 0 <= i <= j <= n
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      out.push_back(
          entry(Square(MonotoneMap::codegeneracy(n + 1, i), MonotoneMap::codegeneracy(n + 1, j + 1),
                       MonotoneMap::codegeneracy(n, j), MonotoneMap::codegeneracy(n, i))));
  // (type2deg) right: 0 <= i <= n
  for (int i = 0; i <= n; ++i)
    out.push_back(entry(Square(MonotoneMap::codegeneracy(n, i), MonotoneMap::codegeneracy(n, i),
                               MonotoneMap::identity(n), MonotoneMap::identity(n))));
  return out;
}

std::vector<CatalogEntry> catalog_basic_coface(int n) {
  std::vector<CatalogEntry> out;
  if (n < 2) return out;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      out.push_back(entry(Square(MonotoneMap::coface(n - 1, i), MonotoneMap::coface(n - 1, j - 1),
                                 MonotoneMap::coface(n, j), MonotoneMap::coface(n, i))));
  return out;
}

std::vector<CatalogEntry> catalog_generators_pushout() {
  std::vector<CatalogEntry> out;
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::identity(0))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::identity(1))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(1, 0))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(1, 1))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::codegeneracy(0, 0))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(2, 1))));
  out.push_back(entry(Square(MonotoneMap::codegeneracy(0, 0), MonotoneMap::codegeneracy(0, 0),
                             MonotoneMap::identity(0), MonotoneMap::identity(0))));
  out.push_back(entry(Square(MonotoneMap::coface(2, 1), MonotoneMap::codegeneracy(0, 0),
                             MonotoneMap::constant(2, 0, 0), MonotoneMap::identity(0))));
  return out;
}

std::vector<CatalogEntry> catalog_generators_balanced() {
  std::vector<CatalogEntry> out;
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::identity(0))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::identity(1))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(1, 0))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(1, 1))));
  out.push_back(entry(Square::trivial_horizontal(MonotoneMap::coface(2, 1))));
  out.push_back(entry(Square(MonotoneMap::coface(1, 0), MonotoneMap::coface(1, 0),
                             MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 1))));
  out.push_back(entry(Square(MonotoneMap::coface(1, 1), MonotoneMap::coface(1, 1),
                             MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 2))));
  out.push_back(entry(Square(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1),
                             MonotoneMap::coface(3, 1), MonotoneMap::coface(3, 2))));
  return out;
}

std::vector<CatalogEntry> catalog_minimal_vee(int p) {
  std::vector<Square> squares;
  squares.push_back(Square(MonotoneMap::constant(0, p, p), MonotoneMap::identity(0),
                           MonotoneMap::identity(p), MonotoneMap::constant(0, p, p)));
  squares.push_back(Square(MonotoneMap(1, p, {0, p}), MonotoneMap::identity(1),
                           MonotoneMap::identity(p), MonotoneMap(1, p, {0, p})));
  squares.push_back(Square(MonotoneMap(1, p, {0, p}), MonotoneMap::constant(1, 0, 0),
                           MonotoneMap::constant(p, 0, 0), MonotoneMap::identity(0)));
  squares.push_back(Square(MonotoneMap::constant(0, p, 0), MonotoneMap::identity(0),
                           MonotoneMap::identity(p), MonotoneMap::constant(0, p, 0)));
  std::vector<CatalogEntry> out;
  for (auto& sq : squares) {
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const CatalogEntry& e) { return e.square == sq; });
    if (!dup) out.push_back(entry(std::move(sq)));
  }
  return out;
}

}  // namespace deltakit
