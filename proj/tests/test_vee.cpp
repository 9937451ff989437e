#include "doctest.h"

#include <random>

#include "deltakit/squares.hpp"
#include "deltakit/vee.hpp"
#include "helpers.hpp"

using namespace deltakit;

TEST_CASE("canonical decomposition components") {
  CHECK(VeeDecomposition::canonical(0).components() == std::vector<int>{0, 0});
  CHECK(VeeDecomposition::canonical(1).components() == std::vector<int>{0, 1, 0});
  CHECK(VeeDecomposition::canonical(3).components() == std::vector<int>{0, 1, 1, 1, 0});
}

TEST_CASE("pushforward") {
  SUBCASE("identity base pushes to the map itself") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = testing::random_map(rng, 4);
      const auto dec = VeeDecomposition(MonotoneMap::identity(f.dom()));
      CHECK(pushforward(dec, f).base == f);
    }
  }
  SUBCASE("spec values") {
    const auto pushed = pushforward(VeeDecomposition::canonical(2), MonotoneMap::codegeneracy(1, 0));
    CHECK(pushed.base == MonotoneMap(2, 1, {0, 0, 1}));
    CHECK(pushed.components() == std::vector<int>{0, 0, 1, 0});
    const auto pushed2 = pushforward(VeeDecomposition::canonical(1), MonotoneMap::coface(2, 1));
    CHECK(pushed2.base == MonotoneMap(1, 2, {0, 2}));
    CHECK(pushed2.components() == std::vector<int>{0, 2, 0});
  }
  SUBCASE("opfibration: the lift is unique and the lifted triangle commutes") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<int> dim(0, 4);
      const int r = dim(rng), n = dim(rng), m = dim(rng);
      const auto g = testing::random_map(rng, r, n);
      const auto f = testing::random_map(rng, n, m);
      const auto lifted = pushforward(VeeDecomposition(g), f);
      // the lift's base closes the triangle, and any other lift with that
      // property equals it (lifts are determined by their base)
      CHECK(lifted.base == compose(f, g));
      // component sizes match the proof's formulas
      const auto sizes = lifted.components();
      CHECK(sizes.front() == f(g(0)));
      for (int i = 1; i <= r; ++i)
        CHECK(sizes[static_cast<size_t>(i)] == f(g(i)) - f(g(i - 1)));
      CHECK(sizes.back() == m - f(g(r)));
    }
  }
}

TEST_CASE("vee_product basics") {
  CHECK(vee_product(MonotoneMap::identity(1), MonotoneMap::identity(1)) ==
        MonotoneMap::identity(2));
  // d^{1,0} : 0 -> 1 on the left block, d^{1,1} : 0 -> 0 on the right block
  CHECK(vee_product(MonotoneMap::coface(1, 0), MonotoneMap::coface(1, 1)) ==
        MonotoneMap::constant(0, 2, 1));
  CHECK(vee_product(MonotoneMap::codegeneracy(1, 0), MonotoneMap::identity(0)).values() ==
        std::vector<int>{0, 0, 1});
  SUBCASE("endpoint violations") {
    CHECK_THROWS_AS(vee_product(MonotoneMap::coface(1, 1), MonotoneMap::identity(1)),
                    EndpointViolation);
    try {
      vee_product(MonotoneMap::coface(1, 1), MonotoneMap::identity(1));
    } catch (const EndpointViolation& e) {
      CHECK(e.part == 0);
      CHECK(e.max_end);
    }
    CHECK_THROWS_AS(vee_product(MonotoneMap::identity(1), MonotoneMap::coface(1, 0)),
                    EndpointViolation);
  }
  SUBCASE("unital and associative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      auto f = testing::random_map(rng, 3);
      // force endpoint preservation where required
      const auto a = MonotoneMap::identity(0);
      CHECK(vee_product(VeeFamily({a, f})) == f);
      CHECK(vee_product(VeeFamily({f, a})) == f);
    }
    const auto fa = MonotoneMap(1, 1, {0, 1});
    const auto fb = MonotoneMap(1, 2, {0, 2});
    const auto fc = MonotoneMap(2, 1, {0, 0, 1});
    CHECK(vee_product(vee_product(fa, fb), fc) == vee_product(fa, vee_product(fb, fc)));
    CHECK(vee_product(VeeFamily({fa, fb, fc})) == vee_product(fa, vee_product(fb, fc)));
  }
}

TEST_CASE("components_of_map") {
  SUBCASE("spec examples") {
    const auto parts =
        components_of_map(MonotoneMap::codegeneracy(1, 0), VeeDecomposition::canonical(2));
    REQUIRE(parts.size() == 4);
    CHECK(parts.parts[0] == MonotoneMap::identity(0));
    CHECK(parts.parts[1] == MonotoneMap::constant(1, 0, 0));
    CHECK(parts.parts[2] == MonotoneMap::identity(1));
    CHECK(parts.parts[3] == MonotoneMap::identity(0));

    const auto all_id = components_of_map(MonotoneMap::identity(3), VeeDecomposition::canonical(3));
    for (const auto& part : all_id.parts) CHECK(is_identity(part));

    const auto d21 = components_of_map(MonotoneMap::coface(2, 1), VeeDecomposition::canonical(1));
    REQUIRE(d21.size() == 3);
    CHECK(d21.parts[0] == MonotoneMap::identity(0));
    CHECK(d21.parts[1] == MonotoneMap(1, 2, {0, 2}));
    CHECK(d21.parts[2] == MonotoneMap::identity(0));
  }
  SUBCASE("roundtrip: product of components is the map, any decomposition") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
      std::uniform_int_distribution<int> dim(0, 5);
      const int m = dim(rng);
      const auto f = testing::random_map(rng, m, dim(rng));
      const auto base = testing::random_map(rng, dim(rng), m);
      const auto dec = VeeDecomposition(base);
      CHECK(vee_product(components_of_map(f, dec)) == f);
    }
  }
}

TEST_CASE("defect and image additivity, exhaustive for dom/cod <= 4") {
  for (int n0 = 0; n0 <= 4; ++n0)
    for (int m0 = 0; m0 <= 4; ++m0)
      for (int n1 = 0; n1 <= 4; ++n1)
        for (int m1 = 0; m1 <= 4; ++m1)
          for (const auto& f : MapRange(n0, m0)) {
            if (!preserves_max(f)) continue;
            for (const auto& g : MapRange(n1, m1)) {
              if (!preserves_min(g)) continue;
              const auto product = vee_product(f, g);
              CHECK(defect(product) == defect(f) + defect(g));
              CHECK(image_size(product) == image_size(f) + image_size(g) - 1);
            }
          }
}

TEST_CASE("span and square decomposition round trips") {
  const Span span(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 1));
  SUBCASE("decompose_span over canonical(1)") {
    const auto parts = decompose_span(span, VeeDecomposition::canonical(1));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].m() == 0);
    CHECK(parts[1].m() == 1);
    CHECK(parts[2].m() == 0);
    CHECK(vee_product_spans(parts).f == span.f);
    CHECK(vee_product_spans(parts).g == span.g);
  }
  SUBCASE("squares: decompose then recompose") {
    const Square q = compute_pushout(span);
    const auto dec = VeeDecomposition::canonical(q.m());
    const auto cells = decompose_square(q, dec);
    CHECK(vee_product_squares(cells) == q);
    for (const auto& cell : cells) CHECK(compose(cell.h, cell.f) == compose(cell.k, cell.g));
  }
  SUBCASE("trivial square decomposes into trivial components") {
    const Square q = Square::trivial_horizontal(MonotoneMap(2, 3, {0, 1, 3}));
    for (const auto& cell : decompose_square(q, VeeDecomposition::canonical(2)))
      CHECK(cell.is_trivial());
  }
  SUBCASE("random roundtrip") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> dim(0, 4);
      const int m = dim(rng);
      const Span s(testing::random_map(rng, m, dim(rng)), testing::random_map(rng, m, dim(rng)));
      const auto dec = VeeDecomposition(testing::random_map(rng, dim(rng), m));
      const auto parts = decompose_span(s, dec);
      const auto back = vee_product_spans(parts);
      CHECK(back.f == s.f);
      CHECK(back.g == s.g);
    }
  }
}
