#include <doctest.h>

#include <random>

#include "pob/constructions.hpp"
#include "pob/surface.hpp"
#include "support.hpp"

using namespace pob;
using testing::parse_sides;

namespace {

bool has(const Diagnostics& d, ErrorCode code) {
  for (const auto& x : d) {
    if (x.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("disk and annulus invariants") {
  const auto disk = parse_sides("B0");
  CHECK(disk.valid());
  CHECK(euler_characteristic(disk) == 1);
  CHECK(boundary_components(disk).count() == 1);
  CHECK(genus(disk) == 0);

  const auto ann = testing::annulus();
  CHECK(ann.valid());
  CHECK(euler_characteristic(ann) == 0);
  CHECK(boundary_components(ann).count() == 2);
  CHECK(genus(ann) == 0);
}

TEST_CASE("punctured torus") {
  const auto t = parse_sides("B0 a+ b+ a- b-");
  REQUIRE(t.valid());
  CHECK(euler_characteristic(t) == -1);
  CHECK(boundary_components(t).count() == 1);
  CHECK(genus(t) == 1);
}

TEST_CASE("presentation diagnostics") {
  CHECK(has(parse_sides("B0 a+").diagnostics(), ErrorCode::UnmatchedPair));
  CHECK(has(parse_sides("B0 a+ B1 a+").diagnostics(), ErrorCode::UnmatchedPair));
  CHECK(has(parse_sides("a+ b+ a- b-").diagnostics(), ErrorCode::NoBoundary));
  CHECK(has(parse_sides("B0 a+ a-").diagnostics(), ErrorCode::InteriorVertex));
  CHECK(has(parse_sides("B0 a+ B0 a-").diagnostics(), ErrorCode::InvalidPresentation));

  PolygonPresentation moebius({BoundarySide{"B0"}, GluedSide{"a", End::Head, true}, BoundarySide{"B1"},
                               GluedSide{"a", End::Tail, true}});
  CHECK(has(moebius.diagnostics(), ErrorCode::NonOrientable));
  CHECK_THROWS_AS(moebius.require_valid(), Error);
  CHECK(validate(moebius) == moebius.diagnostics());
}

TEST_CASE("word helpers") {
  CHECK(reduce_word({1, -1, 2}) == Word{2});
  CHECK(reduce_word({1, 2, -2, -1}).empty());
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(concat({1, 2}, {-2, 3}) == Word{1, 3});
  CHECK(cyclically_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(cyclically_reduce({1, -1}).empty());
}

TEST_CASE("chi = 1 - k on stars and chi = 2 - 2g - b everywhere") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> k_dist(1, 7), t_dist(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> t;
    const int k = k_dist(rng);
    while (static_cast<int>(t.size()) < k) {
      const int x = 2 * t_dist(rng);
      if (x != 0) t.push_back(x);
    }
    const auto s = star_sum_surface(star_plumbing(t)).surface;
    CHECK(euler_characteristic(s) == 1 - k);
    CHECK(euler_characteristic(s) == 2 - 2 * genus(s) - static_cast<int>(boundary_components(s).count()));
  }
}

TEST_CASE("rotation and relabeling do not change invariants or canonical form") {
  const auto s = star_sum_surface(star_plumbing({2, -4, 6})).surface;
  const auto canon = canonical_form(s);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto r = rotate(s, k);
    CHECK(euler_characteristic(r) == euler_characteristic(s));
    CHECK(genus(r) == genus(s));
    CHECK(boundary_components(r).count() == boundary_components(s).count());
    CHECK(canonical_form(r) == canon);
  }
  const auto original = parse_sides("B0 b1+ B1 b2+ B2 b3+ B3 b1- B4 b2- B5 b3-");
  const auto fixed = parse_sides("X c+ Y b2+ Z q+ W c- V b2- U q-");
  CHECK(canonical_form(fixed) == canonical_form(original));
}

TEST_CASE("canonical form merges boundary runs") {
  CHECK(encode(canonical_form(parse_sides("B0 B1 B2 B3"))) == "B0");
  CHECK(encode(canonical_form(parse_sides("X s+ Y s- Z"))) == encode(canonical_form(testing::annulus())));
}

TEST_CASE("rotations compose") {
  const auto s = testing::annulus();
  CHECK(rotate(rotate(s, 1), 3) == s);
  CHECK(rotate(s, 0) == s);
}
