#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pob/arc.hpp"
#include "pob/surface.hpp"

namespace pob {

// (S, P, h): P is the regular neighbourhood of the basis arcs and h sends
// basis[i] to images[i]. An image starts and ends next to its basis arc's
// endpoints, on the same boundary sides, with no other marked point between.
struct PartialOpenBook {
  PolygonPresentation surface;
  std::vector<Arc> basis;
  std::vector<Arc> images;

  bool operator==(const PartialOpenBook&) const = default;
};

Diagnostics validate_pob(const PartialOpenBook& pob);

enum class Veering { Right, Left, Isotopic };

std::string_view to_string(Veering v);

struct VeeringReport {
  std::vector<Veering> verdicts;

  // Isotopic images count as right-veering.
  bool right_veering() const;
  std::optional<std::size_t> first_left() const;
  bool operator==(const VeeringReport&) const = default;
};

VeeringReport veering_report(const PartialOpenBook& pob);

enum class ContactClass { NonzeroTight, OvertwistedWitness, Unknown };

std::string_view to_string(ContactClass c);

struct ContactVerdict {
  ContactClass verdict = ContactClass::Unknown;
  std::string reason;
  // Set for OvertwistedWitness.
  std::optional<std::size_t> left_arc;
  // Set once veering passes with a nonempty basis: entry (i, j) is
  // interior_intersections(basis[i], images[j]).
  std::vector<std::vector<std::size_t>> intersections;
};

// Sufficient-condition checker:
//   empty basis                                   -> NonzeroTight
//   some Left veering verdict                     -> OvertwistedWitness
//   all Right/Isotopic, every basis/image pair
//   with disjoint interiors                       -> NonzeroTight
//   anything else                                 -> Unknown
ContactVerdict contact_verdict(const PartialOpenBook& pob);

// Two points on one boundary side, first.pos < second.pos.
struct StabilizationSite {
  BoundaryPoint first;
  BoundaryPoint second;
};

// All arc endpoints of the open book.
std::vector<BoundaryPoint> marked_points(const PartialOpenBook& pob);

// Plumbs a positive Hopf band along the boundary-parallel arc spanning the
// site: one new glued pair with feet at the site, one new basis arc across
// it, and its image under the positive twist.
PartialOpenBook positive_stabilization(const PartialOpenBook& pob, const StabilizationSite& site);

// First free gap on the first boundary side that has one, split in thirds.
std::optional<StabilizationSite> free_site(const PartialOpenBook& pob);

struct DividingSetCounts {
  std::size_t boundary_s = 0;
  std::size_t boundary_p = 0;
  std::string note;
};

DividingSetCounts dividing_set_counts(const PartialOpenBook& pob);

// Label-, rotation- and position-independent normal form: canonical
// relabeling of the surface (least over rotations, arcs included) with every
// side's marked points respaced to (rank + 1) / (count + 1).
PartialOpenBook canonicalize(const PartialOpenBook& pob);

// Position strictly between `pos` and the nearest occupied point (or side
// end) in direction `direction` on `side`.
Rational adjacent_position(const std::string& side, const Rational& pos, int direction,
                           std::span<const BoundaryPoint> occupied);

// Gives an image word the endpoints its product disk dictates: on the basis
// arc's sides, displaced toward the side the image departs to at each end.
Arc seat_image(const PolygonPresentation& s, const Arc& basis, const std::vector<Crossing>& word,
               std::span<const BoundaryPoint> occupied);

// Cocore of the band whose cut is glued pair `pair`: a chord parallel to the
// Head side, from the last point of the boundary side before it to the first
// point of the one after it.
Arc band_cocore(const PolygonPresentation& s, const std::string& pair, std::span<const BoundaryPoint> occupied);

// The band cocore and its image under the Dehn twist about the band core
// (right-handed for sign > 0), seated next to it.
std::pair<Arc, Arc> hopf_pair(const PolygonPresentation& s, const std::string& pair, int sign,
                              std::span<const BoundaryPoint> occupied);

}  // namespace pob
