#pragma once

// Properly embedded arcs on a polygon presentation. An arc is recorded by its
// two boundary endpoints and the word of glued pairs it crosses. Endpoint-fixed
// isotopy classes correspond to freely reduced words, so all the geometry
// (minimal intersection, left/right at a shared endpoint) is read off from
// lifts to the universal cover, a tree of polygon copies.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pob/surface.hpp"

namespace pob {

struct BoundaryPoint {
  std::string side;
  Rational pos;

  bool operator==(const BoundaryPoint&) const = default;
};

struct Crossing {
  std::string pair;
  int direction = 1;  // +1: Head side to Tail side

  bool operator==(const Crossing&) const = default;
};

struct Arc {
  BoundaryPoint start;
  BoundaryPoint end;
  std::vector<Crossing> crossings;

  bool operator==(const Arc&) const = default;
};

Arc reverse(const Arc& a);

// Throws UnknownSide / BadPosition / UnknownPair when `a` does not live on `s`.
void check_arc(const PolygonPresentation& s, const Arc& a);

Word to_word(const PolygonPresentation& s, const Arc& a);
std::vector<Crossing> to_crossings(const PolygonPresentation& s, const Word& w);

// Cancels adjacent opposite traversals of one pair until none remain.
Arc reduce(const PolygonPresentation& s, const Arc& a);
bool is_reduced(const PolygonPresentation& s, const Arc& a);

// endpoints_fixed: same reduced word and endpoints, possibly after reversing
// one arc. Otherwise endpoints may slide within their boundary sides.
bool is_isotopic(const PolygonPresentation& s, const Arc& a, const Arc& b, bool endpoints_fixed);

struct MinimalPosition {
  Arc first;
  Arc second;
  std::size_t interior_count = 0;
};

// Reduced representatives realize minimal position; the interior count is the
// number of deck translates of b's lift that separate the endpoints of a's lift.
MinimalPosition minimal_position(const PolygonPresentation& s, const Arc& a, const Arc& b);
std::size_t interior_intersections(const PolygonPresentation& s, const Arc& a, const Arc& b);

// Transverse self-crossings of the geodesic representative.
std::size_t self_intersections(const PolygonPresentation& s, const Arc& a);
bool is_embedded(const PolygonPresentation& s, const Arc& a);

// True when the arc cuts off a disk: homotopic rel endpoints into the boundary.
bool is_boundary_parallel(const PolygonPresentation& s, const Arc& a);

enum class Divergence { RightOf, LeftOf, Equal };

std::string_view to_string(Divergence d);

// Where b leaves the shared start point relative to a. Right is the direction
// of increasing position along the start side (the polygon is oriented so its
// interior lies to the left of every side). Equal iff the reduced arcs agree.
Divergence first_divergence(const PolygonPresentation& s, const Arc& a, const Arc& b);

// A point of the universal cover's boundary: a boundary side of the polygon
// copy reached by `copy` from the base copy.
struct LiftedPoint {
  Word copy;
  std::size_t side = 0;
  Rational pos;
};

// Position along the counterclockwise boundary of the universal cover,
// starting at corner 0 of the base copy.
std::strong_ordering boundary_order(const PolygonPresentation& s, const LiftedPoint& p, const LiftedPoint& q);

namespace detail {
using SidePos = std::pair<std::size_t, Rational>;
// Orders two boundary points of the universal cover. A point with no side is
// an ideal point approximated by a long ray prefix; throws if the prefix runs
// out before the comparison resolves.
std::strong_ordering ray_order(const PolygonPresentation& s, const Word& p_copy, std::optional<SidePos> p_at,
                               const Word& q_copy, std::optional<SidePos> q_at);
}  // namespace detail

// Lifts with the start of `a` in copy `at`.
LiftedPoint lift_start(const PolygonPresentation& s, const Arc& a, const Word& at);
LiftedPoint lift_end(const PolygonPresentation& s, const Arc& a, const Word& at);

// Image of `a` under the Dehn twist about the simple closed curve whose
// free homotopy class is `curve`; right-handed for sign > 0. Each lift of the
// curve crossed by a's lift shifts the endpoint by one period along it.
Arc dehn_twist(const PolygonPresentation& s, const Arc& a, const Word& curve, int sign);

}  // namespace pob
