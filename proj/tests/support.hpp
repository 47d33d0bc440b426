#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pob/arc.hpp"
#include "pob/surface.hpp"

namespace testing {

using pob::Arc;
using pob::Rational;

inline pob::PolygonPresentation parse_sides(const std::string& text) {
  std::vector<pob::Side> sides;
  std::istringstream in(text);
  std::string t;
  while (in >> t) {
    if (t.back() == '+' || t.back() == '-') {
      sides.emplace_back(pob::GluedSide{t.substr(0, t.size() - 1), t.back() == '+' ? pob::End::Head : pob::End::Tail});
    } else {
      sides.emplace_back(pob::BoundarySide{t});
    }
  }
  return pob::PolygonPresentation(std::move(sides));
}

inline pob::PolygonPresentation annulus() { return parse_sides("B0 b+ B1 b-"); }

// "b+ b- c+"
inline std::vector<pob::Crossing> crossings(const std::string& text) {
  std::vector<pob::Crossing> out;
  std::istringstream in(text);
  std::string t;
  while (in >> t) out.push_back({t.substr(0, t.size() - 1), t.back() == '+' ? 1 : -1});
  return out;
}

inline Arc arc(const std::string& from, Rational p, const std::string& to, Rational q, const std::string& word = "") {
  return Arc{{from, p}, {to, q}, crossings(word)};
}

// Annulus B0 b+ B1 b- drawn in its universal cover, the strip R x [0, 1]:
// copy n is the unit square [n, n+1] x [0, 1], B0 runs left to right along
// the bottom, B1 right to left along the top, and crossing b+ moves one copy
// to the right. The strip's edges are bent (bottom y = x^2 / 2000, top
// y = 1 - x^2 / 2000) so that every arc lifts to a straight chord of a convex
// region and two chords cross iff their segments do.
class StripOracle {
 public:
  struct Point {
    Rational x, y;
    bool operator==(const Point&) const = default;
  };

  static Point lift(const pob::BoundaryPoint& p, long copy) {
    const Rational x = p.side == "B0" ? Rational(copy) + p.pos : Rational(copy + 1) - p.pos;
    const Rational bend = x * x / Rational(2000);
    return p.side == "B0" ? Point{x, bend} : Point{x, Rational(1) - bend};
  }

  static long shift(const Arc& a) {
    long n = 0;
    for (const auto& c : a.crossings) n += c.direction;
    return n;
  }

  static std::size_t intersections(const Arc& a, const Arc& b) {
    const Point a0 = lift(a.start, 0), a1 = lift(a.end, shift(a));
    std::size_t count = 0;
    for (long m = -12; m <= 12; ++m) {
      const Point b0 = lift(b.start, m), b1 = lift(b.end, m + shift(b));
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) continue;
      if (sign(a0, a1, b0) * sign(a0, a1, b1) < 0 && sign(b0, b1, a0) * sign(b0, b1, a1) < 0) ++count;
    }
    return count;
  }

 private:
  static int sign(const Point& p, const Point& q, const Point& r) {
    const Rational d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }
};

// Random arc on `s` with a word of up to `max_len` letters (not necessarily reduced).
inline Arc random_arc(const pob::PolygonPresentation& s, std::mt19937& rng, std::size_t max_len) {
  std::vector<std::string> boundary;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.is_boundary(i)) boundary.push_back(s.label(i));
  }
  std::uniform_int_distribution<std::size_t> pick_side(0, boundary.size() - 1);
  std::uniform_int_distribution<int> pick_pos(1, 15);
  std::uniform_int_distribution<std::size_t> pick_len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick_pair(0, s.pair_count() - 1);
  Arc a{{boundary[pick_side(rng)], Rational(pick_pos(rng), 16)}, {boundary[pick_side(rng)], Rational(pick_pos(rng), 16)}, {}};
  const std::size_t len = s.pair_count() == 0 ? 0 : pick_len(rng);
  for (std::size_t i = 0; i < len; ++i) a.crossings.push_back({s.pair_label(pick_pair(rng)), rng() % 2 ? 1 : -1});
  return a;
}

}  // namespace testing
