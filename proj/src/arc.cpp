#include "pob/arc.hpp"

#include <set>

namespace pob {

namespace {

std::size_t side_of(const PolygonPresentation& s, const BoundaryPoint& p) {
  auto side = s.boundary_side(p.side);
  if (!side) throw Error(ErrorCode::UnknownSide, "no boundary side named " + p.side);
  return *side;
}

Word prefix(const Word& w, std::size_t len) { return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)); }

struct Chord {
  LiftedPoint from;
  LiftedPoint to;
};

bool strictly_between(const PolygonPresentation& s, const LiftedPoint& x, const LiftedPoint& y,
                      const LiftedPoint& z) {
  const bool x_first = boundary_order(s, x, y) < 0;
  const LiftedPoint& lo = x_first ? x : y;
  const LiftedPoint& hi = x_first ? y : x;
  return boundary_order(s, lo, z) < 0 && boundary_order(s, z, hi) < 0;
}

// Chords in the universal cover cross in their interiors iff their endpoints
// interleave; a shared endpoint is not an interior crossing.
bool linked(const PolygonPresentation& s, const Chord& c, const Chord& d) {
  for (const auto* p : {&c.from, &c.to}) {
    for (const auto* q : {&d.from, &d.to}) {
      if (boundary_order(s, *p, *q) == 0) return false;
    }
  }
  return strictly_between(s, c.from, c.to, d.from) != strictly_between(s, c.from, c.to, d.to);
}

// Deck translates g with g * (node j of b's path) = (node i of a's path).
std::set<Word> meeting_translates(const Word& wa, const Word& wb) {
  std::set<Word> out;
  for (std::size_t i = 0; i <= wa.size(); ++i) {
    const Word u = prefix(wa, i);
    for (std::size_t j = 0; j <= wb.size(); ++j) {
      out.insert(concat(u, inverse(prefix(wb, j))));
    }
  }
  return out;
}

// Ccw boundary walk from `from` to the first arrival at `to`, as a word.
std::optional<Word> boundary_walk(const PolygonPresentation& s, std::size_t from_side, const Rational& from_pos,
                                  std::size_t to_side, const Rational& to_pos) {
  const std::size_t n = s.size();
  if (from_side == to_side && to_pos > from_pos) return Word{};
  Word w;
  std::size_t side = from_side;
  for (std::size_t steps = 0; steps <= n; ++steps) {
    std::size_t next = (side + 1) % n;
    while (!s.is_boundary(next)) {
      const Letter l = s.exit_letter(next);
      w.push_back(l);
      next = (s.entry_side(l) + 1) % n;
    }
    side = next;
    if (side == to_side) {
      if (side != from_side || to_pos < from_pos) return reduce_word(w);
      return std::nullopt;
    }
    if (side == from_side) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Divergence d) {
  switch (d) {
    case Divergence::RightOf: return "RightOf";
    case Divergence::LeftOf: return "LeftOf";
    case Divergence::Equal: return "Equal";
  }
  return "?";
}

Arc reverse(const Arc& a) {
  Arc r{a.end, a.start, {}};
  r.crossings.reserve(a.crossings.size());
  for (auto it = a.crossings.rbegin(); it != a.crossings.rend(); ++it) {
    r.crossings.push_back({it->pair, -it->direction});
  }
  return r;
}

void check_arc(const PolygonPresentation& s, const Arc& a) {
  for (const auto* p : {&a.start, &a.end}) {
    side_of(s, *p);
    if (p->pos <= 0 || p->pos >= 1) {
      throw Error(ErrorCode::BadPosition, "position on " + p->side + " must lie strictly between 0 and 1");
    }
  }
  for (const auto& c : a.crossings) {
    if (!s.pair_index(c.pair)) throw Error(ErrorCode::UnknownPair, "no glued pair named " + c.pair);
    if (c.direction != 1 && c.direction != -1) throw Error(ErrorCode::UnknownPair, "crossing direction must be +-1");
  }
}

Word to_word(const PolygonPresentation& s, const Arc& a) {
  Word w;
  w.reserve(a.crossings.size());
  for (const auto& c : a.crossings) {
    auto pr = s.pair_index(c.pair);
    if (!pr) throw Error(ErrorCode::UnknownPair, "no glued pair named " + c.pair);
    w.push_back(make_letter(*pr, c.direction));
  }
  return w;
}

std::vector<Crossing> to_crossings(const PolygonPresentation& s, const Word& w) {
  std::vector<Crossing> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back({s.pair_label(letter_pair(l)), letter_direction(l)});
  return out;
}

Arc reduce(const PolygonPresentation& s, const Arc& a) {
  check_arc(s, a);
  return Arc{a.start, a.end, to_crossings(s, reduce_word(to_word(s, a)))};
}

bool is_reduced(const PolygonPresentation& s, const Arc& a) {
  const Word w = to_word(s, a);
  return reduce_word(w) == w;
}

bool is_isotopic(const PolygonPresentation& s, const Arc& a, const Arc& b, bool endpoints_fixed) {
  const Arc ra = reduce(s, a);
  const Arc rb = reduce(s, b);
  auto same = [&](const Arc& x, const Arc& y) {
    if (endpoints_fixed) return x == y;
    return x.start.side == y.start.side && x.end.side == y.end.side && x.crossings == y.crossings;
  };
  return same(ra, rb) || same(ra, reverse(rb));
}

LiftedPoint lift_start(const PolygonPresentation& s, const Arc& a, const Word& at) {
  return {at, side_of(s, a.start), a.start.pos};
}

LiftedPoint lift_end(const PolygonPresentation& s, const Arc& a, const Word& at) {
  return {concat(at, to_word(s, a)), side_of(s, a.end), a.end.pos};
}

std::strong_ordering boundary_order(const PolygonPresentation& s, const LiftedPoint& p, const LiftedPoint& q) {
  return detail::ray_order(s, p.copy, std::pair{p.side, p.pos}, q.copy, std::pair{q.side, q.pos});
}

namespace detail {

std::strong_ordering ray_order(const PolygonPresentation& s, const Word& p_copy, std::optional<SidePos> p_at,
                               const Word& q_copy, std::optional<SidePos> q_at) {
  const std::size_t n = s.size();
  std::optional<std::size_t> entry;
  for (std::size_t j = 0;; ++j) {
    const bool p_done = j == p_copy.size();
    const bool q_done = j == q_copy.size();
    if ((p_done && !p_at) || (q_done && !q_at)) {
      throw Error(ErrorCode::InvalidPresentation, "ray prefix too short to order boundary points");
    }
    const std::size_t sp = p_done ? p_at->first : s.exit_side(p_copy[j]);
    const std::size_t sq = q_done ? q_at->first : s.exit_side(q_copy[j]);
    if (sp != sq) {
      auto local = [&](std::size_t side) { return entry ? (side + n - *entry) % n : side; };
      return local(sp) <=> local(sq);
    }
    if (p_done || q_done) {
      // Same boundary side of the same copy (a glued exit never equals a boundary side).
      if (p_at->second < q_at->second) return std::strong_ordering::less;
      if (q_at->second < p_at->second) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    entry = s.entry_side(p_copy[j]);
  }
}

}  // namespace detail

Arc dehn_twist(const PolygonPresentation& s, const Arc& a, const Word& curve, int sign) {
  const Arc r = reduce(s, a);
  const Word core = cyclically_reduce(curve);
  if (core.empty()) return r;
  const Word w = to_word(s, r);
  const Word start_copy;
  const detail::SidePos from{side_of(s, r.start), r.start.pos};
  const detail::SidePos to{side_of(s, r.end), r.end.pos};

  struct Axis {
    Word element;  // g * core * g^-1
    Word forward;  // long prefix of g * core^infinity
    Word backward;
  };
  auto order = [&](const Word& pc, std::optional<detail::SidePos> pa, const Word& qc, std::optional<detail::SidePos> qa) {
    return detail::ray_order(s, pc, pa, qc, qa);
  };
  // Strictly between the axis ends in the linear boundary order.
  auto inside = [&](const Axis& ax, const Word& copy, std::optional<detail::SidePos> at) {
    const bool fwd_first = order(ax.forward, std::nullopt, ax.backward, std::nullopt) < 0;
    const Word& lo = fwd_first ? ax.forward : ax.backward;
    const Word& hi = fwd_first ? ax.backward : ax.forward;
    return order(lo, std::nullopt, copy, at) < 0 && order(copy, at, hi, std::nullopt) < 0;
  };

  // Lifts of the curve are disjoint axes; those crossing the arc's lift pass
  // through a copy on its path.
  std::vector<Axis> crossed;
  std::set<Word> seen;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const Word node = prefix(w, i);
    for (std::size_t k = 0; k < core.size(); ++k) {
      const Word g = concat(node, inverse(prefix(core, k)));
      Axis ax{concat(concat(g, core), inverse(g)), g, g};
      if (!seen.insert(ax.element).second) continue;
      const std::size_t reach = 2 * (w.size() + g.size() + core.size()) + 4;
      while (ax.forward.size() < reach) ax.forward = concat(ax.forward, core);
      while (ax.backward.size() < reach) ax.backward = concat(ax.backward, inverse(core));
      if (inside(ax, start_copy, from) != inside(ax, w, to)) crossed.push_back(std::move(ax));
    }
  }

  // x's side of an axis contains every axis crossed later.
  std::sort(crossed.begin(), crossed.end(), [&](const Axis& p, const Axis& q) {
    if (p.element == q.element) return false;
    return inside(p, start_copy, from) != inside(p, q.forward, std::nullopt);
  });

  // A positive twist turns right: along the axis toward its end lying
  // counterclockwise between the arc's start and end.
  const bool start_before_end = order(start_copy, from, w, to) < 0;
  auto on_right = [&](const Word& ray) {
    const bool after_start = order(start_copy, from, ray, std::nullopt) < 0;
    const bool before_end = order(ray, std::nullopt, w, to) < 0;
    return start_before_end ? (after_start && before_end) : (after_start || before_end);
  };
  Word twist;
  for (const Axis& ax : crossed) {
    const bool forward = on_right(ax.forward) == (sign > 0);
    twist = concat(twist, forward ? ax.element : inverse(ax.element));
  }
  return Arc{r.start, r.end, to_crossings(s, concat(twist, w))};
}

MinimalPosition minimal_position(const PolygonPresentation& s, const Arc& a, const Arc& b) {
  MinimalPosition out{reduce(s, a), reduce(s, b), 0};
  const Word wa = to_word(s, out.first);
  const Word wb = to_word(s, out.second);
  const Chord base{lift_start(s, out.first, {}), lift_end(s, out.first, {})};
  for (const Word& g : meeting_translates(wa, wb)) {
    const Chord moved{lift_start(s, out.second, g), lift_end(s, out.second, g)};
    if (linked(s, base, moved)) ++out.interior_count;
  }
  return out;
}

std::size_t interior_intersections(const PolygonPresentation& s, const Arc& a, const Arc& b) {
  return minimal_position(s, a, b).interior_count;
}

std::size_t self_intersections(const PolygonPresentation& s, const Arc& a) {
  const Arc r = reduce(s, a);
  const Word w = to_word(s, r);
  const Chord base{lift_start(s, r, {}), lift_end(s, r, {})};
  std::size_t count = 0;
  for (const Word& g : meeting_translates(w, w)) {
    if (g.empty()) continue;
    if (linked(s, base, Chord{lift_start(s, r, g), lift_end(s, r, g)})) ++count;
  }
  // Each crossing is seen from both of its branches.
  return count / 2;
}

bool is_embedded(const PolygonPresentation& s, const Arc& a) { return self_intersections(s, a) == 0; }

bool is_boundary_parallel(const PolygonPresentation& s, const Arc& a) {
  const Arc r = reduce(s, a);
  const Word w = to_word(s, r);
  const std::size_t from = side_of(s, r.start);
  const std::size_t to = side_of(s, r.end);
  if (auto ccw = boundary_walk(s, from, r.start.pos, to, r.end.pos); ccw && *ccw == w) return true;
  if (auto back = boundary_walk(s, to, r.end.pos, from, r.start.pos); back && inverse(*back) == w) return true;
  return false;
}

Divergence first_divergence(const PolygonPresentation& s, const Arc& a, const Arc& b) {
  if (!(a.start == b.start)) {
    throw Error(ErrorCode::NoSharedStart, "arcs start at " + a.start.side + " and " + b.start.side +
                                              " at different points");
  }
  const Arc ra = reduce(s, a);
  const Arc rb = reduce(s, b);
  const Word wa = to_word(s, ra);
  const Word wb = to_word(s, rb);
  const std::size_t n = s.size();
  const std::size_t start_side = side_of(s, ra.start);
  const Rational& x = ra.start.pos;
  const std::size_t end_a = side_of(s, ra.end);
  const std::size_t end_b = side_of(s, rb.end);

  std::optional<std::size_t> entry;
  // Counterclockwise order of exits around the current copy, starting just
  // after the point where the arcs came in.
  auto key = [&](std::size_t side, const Rational& pos) -> std::pair<std::size_t, Rational> {
    if (entry) return {(side + n - *entry) % n, pos};
    if (side == start_side) return {pos > x ? 0 : n, pos};
    return {(side + n - start_side) % n, pos};
  };

  for (std::size_t j = 0;; ++j) {
    const bool a_done = j == wa.size();
    const bool b_done = j == wb.size();
    const std::size_t sa = a_done ? end_a : s.exit_side(wa[j]);
    const std::size_t sb = b_done ? end_b : s.exit_side(wb[j]);
    if (sa == sb && !a_done && !b_done) {
      entry = s.entry_side(wa[j]);
      continue;
    }
    const auto ka = key(sa, a_done ? ra.end.pos : Rational(0));
    const auto kb = key(sb, b_done ? rb.end.pos : Rational(0));
    if (ka == kb) return Divergence::Equal;
    return kb < ka ? Divergence::RightOf : Divergence::LeftOf;
  }
}

}  // namespace pob
