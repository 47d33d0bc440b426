#include <doctest.h>

#include <random>

#include "pob/arc.hpp"
#include "pob/constructions.hpp"
#include "support.hpp"

using namespace pob;
using testing::arc;
using testing::StripOracle;

TEST_CASE("strip oracle spot values") {
  const auto a = arc("B0", {1, 2}, "B1", {1, 2});
  const auto b = arc("B0", {1, 4}, "B1", {3, 4}, "b+ b+");
  CHECK(StripOracle::intersections(a, b) == 2);
  CHECK(interior_intersections(testing::annulus(), a, b) == 2);
  CHECK(interior_intersections(testing::annulus(), b, a) == 2);
  // a shared endpoint is not an interior intersection
  CHECK(interior_intersections(testing::annulus(), a, arc("B0", {1, 2}, "B1", {3, 4})) == 0);
  CHECK(interior_intersections(testing::annulus(), a, arc("B0", {1, 2}, "B1", {1, 4}, "b+")) == 1);
}

TEST_CASE("annulus intersections agree with the strip oracle on short words") {
  const auto s = testing::annulus();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const Arc a = testing::random_arc(s, rng, 6);
    const Arc b = testing::random_arc(s, rng, 6);
    CHECK_MESSAGE(interior_intersections(s, a, b) == StripOracle::intersections(a, b), "trial " << trial);
  }
}

TEST_CASE("reduce") {
  const auto s = testing::annulus();
  const auto a = arc("B0", {1, 3}, "B1", {2, 3}, "b+ b- b- b+ b+");
  const auto r = reduce(s, a);
  CHECK(r.crossings == testing::crossings("b+"));
  CHECK(reduce(s, r) == r);
  CHECK(is_reduced(s, r));
  CHECK_FALSE(is_reduced(s, a));

  std::mt19937 rng(3);
  const auto t = star_sum_surface(star_plumbing({2, 2, -4})).surface;
  for (int trial = 0; trial < 500; ++trial) {
    const Arc x = testing::random_arc(t, rng, 12);
    CHECK(reduce(t, reduce(t, x)) == reduce(t, x));
  }
}

TEST_CASE("arc validation errors") {
  const auto s = testing::annulus();
  CHECK_THROWS_AS(check_arc(s, arc("Q", {1, 2}, "B1", {1, 2})), Error);
  try {
    check_arc(s, arc("B0", {3, 2}, "B1", {1, 2}));
    FAIL("expected BadPosition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPosition);
  }
  try {
    reduce(s, arc("B0", {1, 2}, "B1", {1, 2}, "z+"));
    FAIL("expected UnknownPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownPair);
  }
}

TEST_CASE("isotopy") {
  const auto s = testing::annulus();
  const auto a = arc("B0", {1, 2}, "B1", {1, 2}, "b+");
  CHECK(is_isotopic(s, a, arc("B0", {1, 2}, "B1", {1, 2}, "b+ b- b+"), true));
  CHECK(is_isotopic(s, a, reverse(a), true));
  CHECK_FALSE(is_isotopic(s, a, arc("B0", {1, 4}, "B1", {1, 2}, "b+"), true));
  CHECK(is_isotopic(s, a, arc("B0", {1, 4}, "B1", {1, 2}, "b+"), false));
  CHECK_FALSE(is_isotopic(s, a, arc("B0", {1, 2}, "B1", {1, 2}), false));
}

TEST_CASE("embedding and boundary-parallel arcs") {
  const auto s = testing::annulus();
  // once around, returning behind the start: embedded; overshooting it is not
  CHECK(is_embedded(s, arc("B0", {3, 4}, "B0", {1, 4}, "b+")));
  CHECK(self_intersections(s, arc("B0", {1, 4}, "B0", {3, 4}, "b+")) == 1);
  CHECK(self_intersections(s, arc("B0", {1, 4}, "B0", {3, 4}, "b+ b+")) == 2);
  CHECK(is_boundary_parallel(s, arc("B0", {1, 4}, "B0", {3, 4})));
  CHECK_FALSE(is_boundary_parallel(s, arc("B0", {1, 2}, "B1", {1, 2})));
  CHECK_FALSE(is_boundary_parallel(s, arc("B0", {1, 4}, "B0", {3, 4}, "b+")));
}

TEST_CASE("first divergence") {
  const auto s = testing::annulus();
  const auto a = arc("B0", {1, 2}, "B1", {1, 2});
  const auto right = arc("B0", {1, 2}, "B1", {1, 2}, "b+");
  const auto left = arc("B0", {1, 2}, "B1", {1, 2}, "b-");
  CHECK(first_divergence(s, a, right) == Divergence::RightOf);
  CHECK(first_divergence(s, a, left) == Divergence::LeftOf);
  CHECK(first_divergence(s, a, a) == Divergence::Equal);
  CHECK_THROWS_AS(first_divergence(s, a, arc("B0", {1, 4}, "B1", {1, 2})), Error);
}

TEST_CASE("first divergence is antisymmetric") {
  const auto s = star_sum_surface(star_plumbing({2, -4, 2})).surface;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    Arc a = testing::random_arc(s, rng, 6);
    Arc b = testing::random_arc(s, rng, 6);
    b.start = a.start;
    const auto ab = first_divergence(s, a, b);
    const auto ba = first_divergence(s, b, a);
    if (ab == Divergence::Equal) {
      CHECK(ba == Divergence::Equal);
    } else {
      CHECK(ab != ba);
      CHECK(ba != Divergence::Equal);
    }
  }
}

TEST_CASE("dehn twists on the annulus") {
  const auto s = testing::annulus();
  const auto a = arc("B0", {1, 2}, "B1", {1, 2});
  const Word core{make_letter(0, 1)};
  CHECK(dehn_twist(s, a, core, 1).crossings == testing::crossings("b+"));
  CHECK(dehn_twist(s, a, core, -1).crossings == testing::crossings("b-"));
  CHECK(dehn_twist(s, dehn_twist(s, a, core, 1), core, 1).crossings == testing::crossings("b+ b+"));
  CHECK(reduce(s, dehn_twist(s, dehn_twist(s, a, core, 1), core, -1)) == a);
  // the inverse core word twists the same way
  CHECK(dehn_twist(s, a, inverse(core), 1).crossings == testing::crossings("b+"));
  // an arc disjoint from the core is fixed
  const auto parallel = arc("B0", {1, 4}, "B0", {3, 4});
  CHECK(dehn_twist(s, parallel, core, 1) == parallel);
}

TEST_CASE("dehn twists on a star only touch arcs meeting the core") {
  const auto built = star_sum_surface(star_plumbing({2, 2}));
  const auto& s = built.surface;
  const auto a1 = arc("B0", {1, 2}, "B1", {1, 2});
  const Word c2{make_letter(*s.pair_index("b2"), 1)};
  CHECK(dehn_twist(s, a1, c2, 1) == a1);
  const Word c1{make_letter(*s.pair_index("b1"), 1)};
  CHECK(dehn_twist(s, a1, c1, 1).crossings == testing::crossings("b1+"));
}
