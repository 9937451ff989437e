#include "doctest.h"

#include <random>

#include "deltakit/squares.hpp"
#include "deltakit/vee.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace deltakit;

namespace {

Square basic_coface_square(int n, int i, int j) {
  return Square(MonotoneMap::coface(n - 1, i), MonotoneMap::coface(n - 1, j - 1),
                MonotoneMap::coface(n, j), MonotoneMap::coface(n, i));
}

// All commuting cospans (h, k) under the span into targets up to max_target.
std::vector<std::pair<MonotoneMap, MonotoneMap>> commuting_cospans(const Span& s,
                                                                   int max_target) {
  std::vector<std::pair<MonotoneMap, MonotoneMap>> out;
  for (int t = 0; t <= max_target; ++t)
    for (const auto& h : MapRange(s.p(), t))
      for (const auto& k : MapRange(s.q(), t))
        if (compose(h, s.f) == compose(k, s.g)) out.emplace_back(h, k);
  return out;
}

bool factors_through(const Span&, const std::pair<MonotoneMap, MonotoneMap>& cospan,
                     const std::pair<MonotoneMap, MonotoneMap>& cocone) {
  const auto& [h, k] = cospan;
  const auto& [phi, psi] = cocone;
  for (const auto& gamma : MapRange(h.cod(), phi.cod()))
    if (compose(gamma, h) == phi && compose(gamma, k) == psi) return true;
  return false;
}

}  // namespace

TEST_CASE("square constructor enforces commutation") {
  CHECK_THROWS_AS(Square(MonotoneMap::coface(1, 0), MonotoneMap::coface(1, 0),
                         MonotoneMap::identity(1), MonotoneMap::coface(1, 1)),
                  NonCommutingError);
}

TEST_CASE("has_pushout: spec examples") {
  CHECK(has_pushout(Span(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 1))));
  CHECK(!has_pushout(Span(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1))));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_map(rng, 4);
    CHECK(has_pushout(Span(MonotoneMap::identity(g.dom()), g)));
  }
}

TEST_CASE("compute_pushout: spec examples") {
  SUBCASE("(type2face) with i=0, j=2") {
    const auto q = compute_pushout(Span(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 1)));
    CHECK(q.h == MonotoneMap::coface(3, 2));
    CHECK(q.k == MonotoneMap::coface(3, 0));
    CHECK(q.n() == 3);
  }
  SUBCASE("pushout along the identity is trivial") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = testing::random_map(rng, 4);
      const auto q = compute_pushout(Span(f, MonotoneMap::identity(f.dom())));
      CHECK(q.k == f);
      CHECK(is_identity(q.h));
    }
  }
  SUBCASE("two codegeneracies collapse to the point") {
    const auto q =
        compute_pushout(Span(MonotoneMap::codegeneracy(0, 0), MonotoneMap::codegeneracy(0, 0)));
    CHECK(q.h == MonotoneMap::identity(0));
    CHECK(q.k == MonotoneMap::identity(0));
  }
  SUBCASE("throws with the violated component") {
    try {
      compute_pushout(Span(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1)));
      FAIL("expected NoPushoutError");
    } catch (const NoPushoutError& e) {
      CHECK(e.component == 1);
    }
  }
}

TEST_CASE("pushout oracle agreement on a sampled family") {
  std::mt19937 rng(41);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> dim(0, 4);
    const int m = dim(rng);
    const Span s(testing::random_map(rng, m, dim(rng)), testing::random_map(rng, m, dim(rng)));
    const bool expected = oracle::has_pushout(s);
    CHECK(has_pushout(s) == expected);
    if (expected) {
      ++positives;
      CHECK(oracle::square_is_universal(compute_pushout(s)));
    }
  }
  CHECK(positives > 0);
}

TEST_CASE("pushout failure witnesses") {
  SUBCASE("paper witness for (d^{2,1}, d^{2,1})") {
    const Span s(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1));
    const auto [phi, psi] = pushout_failure_witness(s);
    CHECK(phi == MonotoneMap(2, 1, {0, 1, 1}));
    CHECK(psi == MonotoneMap(2, 1, {0, 0, 1}));
  }
  SUBCASE("paper witness for the missing-maximum span") {
    const Span s(MonotoneMap::constant(0, 1, 0), MonotoneMap::constant(0, 1, 0));
    const auto [phi, psi] = pushout_failure_witness(s);
    CHECK(phi == MonotoneMap(1, 1, {0, 1}));
    CHECK(psi == MonotoneMap(1, 1, {0, 0}));
  }
  SUBCASE("throws on spans with pushouts") {
    CHECK_THROWS_AS(pushout_failure_witness(Span(MonotoneMap::identity(1), MonotoneMap::identity(1))),
                    HasPushoutError);
  }
  SUBCASE("the witness pair refutes every commuting cospan, exhaustively") {
    // for every cospan completing the span, at least one of the two witness
    // cocones fails to factor through it, so none satisfies the universal
    // property; targets up to [4] per the spec example
    std::vector<Span> spans;
    spans.emplace_back(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1));
    spans.emplace_back(MonotoneMap::constant(0, 1, 0), MonotoneMap::constant(0, 1, 0));
    spans.emplace_back(MonotoneMap(0, 2, {1}), MonotoneMap(0, 1, {1}));  // minimum fails
    spans.emplace_back(MonotoneMap(1, 3, {0, 2}), MonotoneMap(1, 2, {0, 2}));
    for (const auto& s : spans) {
      REQUIRE(!has_pushout(s));
      const auto [w1, w2] = pushout_failure_witness_pair(s);
      CHECK(compose(w1.first, s.f) == compose(w1.second, s.g));
      CHECK(compose(w2.first, s.f) == compose(w2.second, s.g));
      for (const auto& cospan : commuting_cospans(s, 4)) {
        const bool refuted =
            !factors_through(s, cospan, w1) || !factors_through(s, cospan, w2);
        CHECK(refuted);
      }
    }
  }
}

TEST_CASE("is_pushout_square") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = testing::random_map(rng, 4);
    CHECK(is_pushout_square(Square::trivial_horizontal(f)));
    CHECK(is_pushout_square(Square::trivial_vertical(f)));
  }
  // basic coface square with i = j-1 commutes but is not a pushout
  CHECK(!is_pushout_square(basic_coface_square(2, 0, 1)));
  // (type2face) squares are pushouts
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j - 1; ++i) CHECK(is_pushout_square(basic_coface_square(n, i, j)));
}

TEST_CASE("is_balanced") {
  CHECK(is_balanced(basic_coface_square(2, 0, 1)));
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i) CHECK(is_balanced(basic_coface_square(n, i, j)));
  const Square degen = Square::trivial_horizontal(MonotoneMap::codegeneracy(1, 0));
  CHECK(!is_balanced(degen));
  CHECK(balance_failure(degen) == "NotCofaces");
  // jointly surjective but wrong sizes is impossible for commuting coface
  // squares; a non-surjective cospan arises from parallel copies of d^0
  const Square parallel(MonotoneMap::identity(0), MonotoneMap::identity(0),
                        MonotoneMap::coface(1, 0), MonotoneMap::coface(1, 0));
  CHECK(balance_failure(parallel) == "NotJointlySurjective");
}

TEST_CASE("spine_condition") {
  const Square good(MonotoneMap::constant(0, 1, 1), MonotoneMap::constant(0, 1, 0),
                    MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 2));
  CHECK(spine_condition(good));
  CHECK(!spine_condition(basic_coface_square(2, 0, 1)));
  // n = 0: vacuously true
  CHECK(spine_condition(Square::trivial_horizontal(MonotoneMap::identity(0))));
}

TEST_CASE("is_set_pushout and is_concrete_pushout") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j - 1; ++i) {
        CHECK(is_set_pushout(basic_coface_square(n, i, j)));
        CHECK(is_concrete_pushout(basic_coface_square(n, i, j)));
      }
  // middle (typemixed) squares are pushouts in Δ but not concrete
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      const Square mid(
          MonotoneMap::coface(n + 2, i + 1), MonotoneMap::codegeneracy(n, i),
          compose(MonotoneMap::codegeneracy(n, i), MonotoneMap::codegeneracy(n + 1, i + 1)),
          MonotoneMap::identity(n));
      CHECK(is_pushout_square(mid));
      CHECK(!is_concrete_pushout(mid));
    }
  CHECK(is_concrete_pushout(Square::trivial_horizontal(MonotoneMap::identity(2))));
}

TEST_CASE("Cor face_pushout_concrete on all commuting coface squares, n <= 5") {
  // commuting coface squares correspond to (P, Q, M): images of h, k and of
  // the shared face, with M ⊆ P ∩ Q nonempty
  for (int n = 0; n <= 5; ++n) {
    const int size = n + 1;
    for (unsigned pmask = 1; pmask < (1u << size); ++pmask)
      for (unsigned qmask = 1; qmask < (1u << size); ++qmask) {
        const unsigned inter = pmask & qmask;
        if (!inter) continue;
        for (unsigned mmask = 1; mmask < (1u << size); ++mmask) {
          if ((mmask & inter) != mmask) continue;
          std::set<int> P, Q, M;
          for (int v = 0; v < size; ++v) {
            if (pmask & (1u << v)) P.insert(v);
            if (qmask & (1u << v)) Q.insert(v);
            if (mmask & (1u << v)) M.insert(v);
          }
          auto incl = [&](const std::set<int>& sub, const std::set<int>& sup) {
            std::vector<int> vals;
            int pos = 0;
            auto it = sub.begin();
            for (int v : sup) {
              if (it != sub.end() && *it == v) {
                vals.push_back(pos);
                ++it;
              }
              ++pos;
            }
            return MonotoneMap(static_cast<int>(sub.size()) - 1,
                               static_cast<int>(sup.size()) - 1, std::move(vals));
          };
          std::set<int> ground;
          for (int v = 0; v < size; ++v) ground.insert(v);
          const Square q(incl(M, P), incl(M, Q), incl(P, ground), incl(Q, ground));
          CHECK(is_pushout_square(q) == (is_set_pushout(q) && spine_condition(q)));
        }
      }
  }
}

TEST_CASE("factor_pushout_horizontal") {
  SUBCASE("trivial square splits into trivial squares") {
    const auto f = MonotoneMap(1, 3, {0, 2});
    const Square q = Square::trivial_horizontal(f);
    const auto gens = factor_into_generators(f);
    REQUIRE(gens.size() == 2);
    const auto [left, right] = factor_pushout_horizontal(q, gens[0], gens[1]);
    CHECK(left.is_trivial());
    CHECK(right.is_trivial());
    CHECK(hcompose(left, right) == q);
  }
  SUBCASE("collapse square over [0]") {
    const auto f = MonotoneMap(1, 2, {0, 2});
    const Square q = compute_pushout(Span(f, MonotoneMap::constant(1, 0, 0)));
    const auto f0 = MonotoneMap(1, 1, {0, 1});
    const auto f1 = MonotoneMap::coface(2, 1);
    REQUIRE(compose(f1, f0) == f);
    const auto [left, right] = factor_pushout_horizontal(q, f0, f1);
    CHECK(is_pushout_square(left));
    CHECK(is_pushout_square(right));
    CHECK(hcompose(left, right) == q);
  }
  SUBCASE("rejects inefficient factorizations") {
    const auto f = MonotoneMap::constant(0, 1, 0);
    const Square q = Square::trivial_horizontal(f);
    const auto f0 = MonotoneMap::constant(0, 2, 0);
    const auto f1 = MonotoneMap(2, 1, {0, 1, 1});
    REQUIRE(compose(f1, f0) == f);
    CHECK_THROWS_AS(factor_pushout_horizontal(q, f0, f1), InefficientFactorizationError);
  }
  SUBCASE("rejects non-pushouts") {
    const Square q = basic_coface_square(2, 0, 1);
    CHECK_THROWS_AS(
        factor_pushout_horizontal(q, MonotoneMap::identity(0), MonotoneMap::coface(1, 0)),
        NotPushoutError);
  }
}

TEST_CASE("factor_into_basic") {
  auto audit = [](const Square& q) {
    const Grid grid = factor_into_basic(q);
    CHECK(grid.composite() == q);
    for (const auto& row : grid.cells)
      for (const auto& cell : row) {
        CHECK(is_pushout_square(cell));
        CHECK(defect(cell.f) <= 1);
        CHECK(defect(cell.g) <= 1);
      }
    return grid;
  };
  SUBCASE("a basic pushout is a 1x1 grid") {
    const Square q = compute_pushout(Span(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 2)));
    const Grid grid = audit(q);
    CHECK(grid.rows() == 1);
    CHECK(grid.cols() == 1);
    CHECK(grid.cells[0][0] == q);
  }
  SUBCASE("horizontal composite of two (type2face) squares refactors to a 1x2 grid") {
    const Square left = compute_pushout(Span(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 2)));
    const Square right = compute_pushout(Span(MonotoneMap::coface(3, 0), left.h));
    const Square q = hcompose(left, right);
    const Grid grid = audit(q);
    CHECK(grid.rows() == 1);
    CHECK(grid.cols() == 2);
  }
  SUBCASE("pushouts of codegeneracies factor into (type2deg) cells") {
    const auto f = compose(MonotoneMap::codegeneracy(1, 1), MonotoneMap::codegeneracy(2, 0));
    const auto g = compose(MonotoneMap::codegeneracy(1, 0), MonotoneMap::codegeneracy(2, 2));
    const Square q = compute_pushout(Span(f, g));
    const Grid grid = audit(q);
    for (const auto& row : grid.cells)
      for (const auto& cell : row) {
        CHECK((is_codegeneracy(cell.f)));
        CHECK((is_codegeneracy(cell.g)));
      }
  }
  SUBCASE("random pushout squares refactor and recompose") {
    std::mt19937 rng(47);
    int done = 0;
    while (done < 200) {
      std::uniform_int_distribution<int> dim(0, 5);
      const int m = dim(rng);
      const Span s(testing::random_map(rng, m, dim(rng)), testing::random_map(rng, m, dim(rng)));
      if (!has_pushout(s)) continue;
      audit(compute_pushout(s));
      ++done;
    }
  }
}

TEST_CASE("factor_balanced") {
  auto audit = [](const Square& q) {
    const Grid grid = factor_balanced(q);
    CHECK(grid.composite() == q);
    for (const auto& row : grid.cells)
      for (const auto& cell : row) {
        CHECK(is_balanced(cell));
        CHECK(defect(cell.f) == 1);
        CHECK(defect(cell.g) == 1);
        CHECK(is_coface(cell.f));
        CHECK(is_coface(cell.g));
      }
    return grid;
  };
  SUBCASE("a basic coface square is a 1x1 grid") {
    for (int n = 2; n <= 4; ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const Grid grid = audit(basic_coface_square(n, i, j));
          CHECK(grid.rows() == 1);
          CHECK(grid.cols() == 1);
        }
  }
  SUBCASE("the eighth generator square is basic with i=1, j=2") {
    const Square q(MonotoneMap::coface(2, 1), MonotoneMap::coface(2, 1), MonotoneMap::coface(3, 1),
                   MonotoneMap::coface(3, 2));
    const Grid grid = audit(q);
    CHECK(grid.rows() == 1);
    CHECK(grid.cols() == 1);
    CHECK(grid.cells[0][0].equals_up_to_mirror(basic_coface_square(3, 1, 2)));
  }
  SUBCASE("composites of basic coface squares recompose exactly") {
    const Square a = basic_coface_square(2, 0, 1);
    const Square b = compute_pushout(Span(MonotoneMap::coface(2, 0), a.h));
    const Square q = hcompose(a, b);
    const Grid grid = audit(q);
    CHECK(grid.rows() * grid.cols() == 2);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(factor_balanced(Square::trivial_horizontal(MonotoneMap::coface(1, 0))),
                    TrivialSquareError);
    CHECK_THROWS_AS(factor_balanced(Square(MonotoneMap::identity(0), MonotoneMap::identity(0),
                                           MonotoneMap::coface(1, 0), MonotoneMap::coface(1, 0))),
                    NotBalancedError);
  }
  SUBCASE("all balanced squares with n <= 5 factor into basic coface grids") {
    for (int n = 1; n <= 5; ++n) {
      const int size = n + 1;
      for (unsigned pmask = 1; pmask < (1u << size); ++pmask)
        for (unsigned qmask = 1; qmask < (1u << size); ++qmask) {
          if ((pmask | qmask) != (1u << size) - 1) continue;
          const unsigned inter = pmask & qmask;
          if (!inter) continue;
          if (pmask == (1u << size) - 1 || qmask == (1u << size) - 1) continue;  // trivial
          std::set<int> P, Q, M, ground;
          for (int v = 0; v < size; ++v) {
            ground.insert(v);
            if (pmask & (1u << v)) P.insert(v);
            if (qmask & (1u << v)) Q.insert(v);
            if (inter & (1u << v)) M.insert(v);
          }
          auto incl = [&](const std::set<int>& sub, const std::set<int>& sup) {
            std::vector<int> vals;
            int pos = 0;
            auto it = sub.begin();
            for (int v : sup) {
              if (it != sub.end() && *it == v) {
                vals.push_back(pos);
                ++it;
              }
              ++pos;
            }
            return MonotoneMap(static_cast<int>(sub.size()) - 1,
                               static_cast<int>(sup.size()) - 1, std::move(vals));
          };
          audit(Square(incl(M, P), incl(M, Q), incl(P, ground), incl(Q, ground)));
        }
    }
  }
}

TEST_CASE("catalogs") {
  CHECK(catalog_generators_pushout().size() == 8);
  CHECK(catalog_generators_balanced().size() == 8);
  CHECK(catalog_basic_coface(2).size() == 3);
  SUBCASE("generator squares really are pushouts / balanced") {
    for (const auto& e : catalog_generators_pushout()) CHECK(is_pushout_square(e.square));
    for (const auto& e : catalog_generators_balanced()) CHECK(is_balanced(e.square));
    // the parallel-coface spans (squares 6, 7, 8) are balanced but not pushouts
    int non_pushouts = 0;
    for (const auto& e : catalog_generators_balanced())
      if (!is_pushout_square(e.square)) ++non_pushouts;
    CHECK(non_pushouts == 3);
  }
  SUBCASE("basic pushout family members are pushouts") {
    for (int n = 0; n <= 4; ++n)
      for (const auto& e : catalog_basic_pushout(n)) {
        CHECK(is_pushout_square(e.square));
        CHECK(defect(e.square.f) <= 1);
        CHECK(defect(e.square.g) <= 1);
      }
  }
  SUBCASE("minimal vee squares are the component pushouts") {
    for (int p = 0; p <= 4; ++p)
      for (const auto& e : catalog_minimal_vee(p)) CHECK(is_pushout_square(e.square));
    CHECK(catalog_minimal_vee(0).size() < 4);  // first and fourth coincide at p = 0
  }
}

TEST_CASE("defect monotonicity over pushout squares (lemma audit)") {
  std::mt19937 rng(53);
  int done = 0;
  while (done < 300) {
    std::uniform_int_distribution<int> dim(0, 4);
    const int m = dim(rng);
    const Span s(testing::random_map(rng, m, dim(rng)), testing::random_map(rng, m, dim(rng)));
    if (!has_pushout(s)) continue;
    const Square q = compute_pushout(s);
    if (is_coface(q.f) || is_codegeneracy(q.g)) {
      CHECK(defect(q.k) <= defect(q.f));
      ++done;
    }
  }
}

TEST_CASE("preservation and reflection of pushouts under vee products") {
  // components have pushouts iff the product span does, and the pushout of
  // the product is the product of the pushouts
  for (int m = 0; m <= 4; ++m) {
    for (const auto& f : MapRange(m, 3))
      for (const auto& g : MapRange(m, 3)) {
        const Span s(f, g);
        const auto parts = decompose_span(s, VeeDecomposition::canonical(m));
        const bool whole = has_pushout(s);
        bool all_parts = true;
        for (const auto& part : parts) all_parts = all_parts && has_pushout(part);
        CHECK(whole == all_parts);
        if (whole) {
          std::vector<Square> cells;
          for (const auto& part : parts) cells.push_back(compute_pushout(part));
          CHECK(vee_product_squares(cells) == compute_pushout(s));
        }
      }
  }
}
