#include "pob/open_book.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pob {

namespace {

void require_valid_pob(const PartialOpenBook& pob) {
  const Diagnostics d = validate_pob(pob);
  if (!d.empty()) throw Error(ErrorCode::InvalidPOB, d.front().message);
}

std::string arc_name(const char* kind, std::size_t i) { return std::string(kind) + " " + std::to_string(i); }

// No marked point strictly between the two positions on `side`.
bool adjacent(const std::string& side, const Rational& x, const Rational& y, std::span<const BoundaryPoint> marked) {
  const Rational lo = std::min(x, y);
  const Rational hi = std::max(x, y);
  return std::none_of(marked.begin(), marked.end(),
                      [&](const BoundaryPoint& p) { return p.side == side && lo < p.pos && p.pos < hi; });
}

Arc with_start(Arc a, const BoundaryPoint& p) {
  a.start = p;
  return a;
}

// `count` labels base1, base2, ... skipping names already used by `s`.
std::vector<std::string> fresh_labels(const PolygonPresentation& s, const std::string& base, std::size_t count) {
  std::vector<std::string> out;
  for (int k = 1; out.size() < count; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!s.boundary_side(candidate) && !s.pair_index(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

std::string to_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::string_view to_string(Veering v) {
  switch (v) {
    case Veering::Right: return "Right";
    case Veering::Left: return "Left";
    case Veering::Isotopic: return "Isotopic";
  }
  return "?";
}

std::string_view to_string(ContactClass c) {
  switch (c) {
    case ContactClass::NonzeroTight: return "NonzeroTight";
    case ContactClass::OvertwistedWitness: return "OvertwistedWitness";
    case ContactClass::Unknown: return "Unknown";
  }
  return "?";
}

bool VeeringReport::right_veering() const { return !first_left().has_value(); }

std::optional<std::size_t> VeeringReport::first_left() const {
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i] == Veering::Left) return i;
  }
  return std::nullopt;
}

std::vector<BoundaryPoint> marked_points(const PartialOpenBook& pob) {
  std::vector<BoundaryPoint> out;
  for (const auto* arcs : {&pob.basis, &pob.images}) {
    for (const Arc& a : *arcs) {
      out.push_back(a.start);
      out.push_back(a.end);
    }
  }
  return out;
}

Diagnostics validate_pob(const PartialOpenBook& pob) {
  Diagnostics out = validate(pob.surface);
  if (!out.empty()) return out;
  const auto& s = pob.surface;
  if (pob.basis.size() != pob.images.size()) {
    out.push_back({ErrorCode::InvalidPOB, "basis has " + std::to_string(pob.basis.size()) + " arcs but images has " +
                                              std::to_string(pob.images.size())});
    return out;
  }
  for (const auto& [kind, arcs] : {std::pair{"basis", &pob.basis}, std::pair{"image", &pob.images}}) {
    for (std::size_t i = 0; i < arcs->size(); ++i) {
      try {
        check_arc(s, (*arcs)[i]);
      } catch (const Error& e) {
        out.push_back({e.code(), arc_name(kind, i) + ": " + e.what()});
      }
    }
  }
  if (!out.empty()) return out;

  const auto marked = marked_points(pob);
  for (std::size_t i = 0; i < marked.size(); ++i) {
    for (std::size_t j = i + 1; j < marked.size(); ++j) {
      if (marked[i] == marked[j]) {
        out.push_back({ErrorCode::DuplicatePosition, "two endpoints at " + marked[i].side + " " + to_text(marked[i].pos)});
      }
    }
  }
  for (const auto& [kind, arcs] : {std::pair{"basis", &pob.basis}, std::pair{"image", &pob.images}}) {
    for (std::size_t i = 0; i < arcs->size(); ++i) {
      if (!is_embedded(s, (*arcs)[i])) {
        out.push_back({ErrorCode::ArcNotEmbedded, arc_name(kind, i) + " crosses itself"});
      }
    }
  }
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < pob.basis.size(); ++j) {
      if (interior_intersections(s, pob.basis[i], pob.basis[j]) != 0) {
        out.push_back({ErrorCode::BasisNotDisjoint,
                       "basis arcs " + std::to_string(i) + " and " + std::to_string(j) + " intersect"});
      }
      if (interior_intersections(s, pob.images[i], pob.images[j]) != 0) {
        out.push_back({ErrorCode::ImagesNotDisjoint,
                       "images " + std::to_string(i) + " and " + std::to_string(j) + " intersect"});
      }
    }
  }
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    const Arc& a = pob.basis[i];
    const Arc& h = pob.images[i];
    const bool ok = a.start.side == h.start.side && a.end.side == h.end.side &&
                    adjacent(a.start.side, a.start.pos, h.start.pos, marked) &&
                    adjacent(a.end.side, a.end.pos, h.end.pos, marked);
    if (!ok) {
      out.push_back({ErrorCode::EndpointMismatch,
                     "image " + std::to_string(i) + " does not end next to the endpoints of basis arc " +
                         std::to_string(i)});
    }
  }
  return out;
}

VeeringReport veering_report(const PartialOpenBook& pob) {
  require_valid_pob(pob);
  const auto& s = pob.surface;
  VeeringReport report;
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    const Arc& a = pob.basis[i];
    if (is_isotopic(s, a, pob.images[i], false)) {
      report.verdicts.push_back(Veering::Isotopic);
      continue;
    }
    // The image carries the opposite orientation: it arrives at a's start
    // and leaves from a's end. Each end is compared by sliding the image's
    // endpoint onto a's (no marked point lies between them).
    const Arc image_reversed = reverse(pob.images[i]);
    const Divergence at_start = first_divergence(s, a, with_start(reverse(image_reversed), a.start));
    const Divergence at_end = first_divergence(s, reverse(a), with_start(image_reversed, a.end));
    if (at_start == Divergence::Equal || at_end == Divergence::Equal) {
      report.verdicts.push_back(Veering::Isotopic);
    } else if (at_start == Divergence::RightOf && at_end == Divergence::RightOf) {
      report.verdicts.push_back(Veering::Right);
    } else {
      report.verdicts.push_back(Veering::Left);
    }
  }
  return report;
}

ContactVerdict contact_verdict(const PartialOpenBook& pob) {
  require_valid_pob(pob);
  ContactVerdict out;
  if (pob.basis.empty()) {
    out.verdict = ContactClass::NonzeroTight;
    out.reason = "empty basis: P is empty and only the tight structure on the S-handlebody remains";
    return out;
  }
  const VeeringReport veering = veering_report(pob);
  if (auto left = veering.first_left()) {
    out.verdict = ContactClass::OvertwistedWitness;
    out.left_arc = left;
    out.reason = "basis arc " + std::to_string(*left) + " is left-veering, so this partial open book is a "
                 "non-right-veering supporter";
    return out;
  }
  const auto& s = pob.surface;
  bool disjoint = true;
  out.intersections.assign(pob.basis.size(), std::vector<std::size_t>(pob.images.size(), 0));
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    for (std::size_t j = 0; j < pob.images.size(); ++j) {
      out.intersections[i][j] = interior_intersections(s, pob.basis[i], pob.images[j]);
      disjoint = disjoint && out.intersections[i][j] == 0;
    }
  }
  if (disjoint) {
    out.verdict = ContactClass::NonzeroTight;
    out.reason = "right-veering and no basis arc meets any image in its interior: every differential into the "
                 "contact class would be a bigon";
  } else {
    out.verdict = ContactClass::Unknown;
    out.reason = "right-veering but some basis arc meets an image in its interior; the bigon criterion does not apply";
  }
  return out;
}

Rational adjacent_position(const std::string& side, const Rational& pos, int direction,
                           std::span<const BoundaryPoint> occupied) {
  Rational bound = direction > 0 ? Rational(1) : Rational(0);
  for (const auto& p : occupied) {
    if (p.side != side) continue;
    if (direction > 0 && p.pos > pos && p.pos < bound) bound = p.pos;
    if (direction < 0 && p.pos < pos && p.pos > bound) bound = p.pos;
  }
  return (pos + bound) / Rational(2);
}

Arc seat_image(const PolygonPresentation& s, const Arc& basis, const std::vector<Crossing>& word,
               std::span<const BoundaryPoint> occupied) {
  const Arc provisional{basis.start, basis.end, word};
  auto direction = [](Divergence d) { return d == Divergence::LeftOf ? -1 : 1; };
  const int at_start = direction(first_divergence(s, basis, provisional));
  const int at_end = direction(first_divergence(s, reverse(basis), reverse(provisional)));

  std::vector<BoundaryPoint> taken(occupied.begin(), occupied.end());
  taken.push_back(basis.start);
  taken.push_back(basis.end);
  Arc image = provisional;
  image.start.pos = adjacent_position(basis.start.side, basis.start.pos, at_start, taken);
  taken.push_back(image.start);
  image.end.pos = adjacent_position(basis.end.side, basis.end.pos, at_end, taken);
  return image;
}

Arc band_cocore(const PolygonPresentation& s, const std::string& pair, std::span<const BoundaryPoint> occupied) {
  s.require_valid();
  const auto pr = s.pair_index(pair);
  if (!pr) throw Error(ErrorCode::UnknownPair, "no glued pair named " + pair);
  const std::size_t n = s.size();
  const std::size_t head = s.head_side(*pr);
  const std::size_t before = (head + n - 1) % n;
  const std::size_t after = (head + 1) % n;
  if (!s.is_boundary(before) || !s.is_boundary(after)) {
    throw Error(ErrorCode::InvalidSpec, "pair " + pair + " is not flanked by boundary sides");
  }
  const std::string& from = s.label(before);
  const std::string& to = s.label(after);
  Rational lo = 0;
  Rational hi = 1;
  for (const auto& p : occupied) {
    if (p.side == from) lo = std::max(lo, p.pos);
    if (p.side == to) hi = std::min(hi, p.pos);
  }
  return Arc{{from, (lo + 1) / 2}, {to, hi / 2}, {}};
}

std::pair<Arc, Arc> hopf_pair(const PolygonPresentation& s, const std::string& pair, int sign,
                              std::span<const BoundaryPoint> occupied) {
  Arc basis = band_cocore(s, pair, occupied);
  const Word core{make_letter(*s.pair_index(pair), 1)};
  const Arc twisted = dehn_twist(s, basis, core, sign);
  Arc image = seat_image(s, basis, twisted.crossings, occupied);
  return {std::move(basis), std::move(image)};
}

PartialOpenBook positive_stabilization(const PartialOpenBook& pob, const StabilizationSite& site) {
  require_valid_pob(pob);
  const auto& s = pob.surface;
  const auto side = s.boundary_side(site.first.side);
  if (!side || site.second.side != site.first.side) {
    throw Error(ErrorCode::SiteObstructed, "site points must lie on one boundary side");
  }
  const Rational p = site.first.pos;
  const Rational q = site.second.pos;
  if (!(0 < p && p < q && q < 1)) throw Error(ErrorCode::SiteObstructed, "site needs 0 < first < second < 1");
  const auto marked = marked_points(pob);
  for (const auto& m : marked) {
    if (m.side == site.first.side && p <= m.pos && m.pos <= q) {
      throw Error(ErrorCode::SiteObstructed, "an arc endpoint lies inside the site on " + m.side);
    }
  }

  const std::string& x = s.label(*side);
  const std::string handle = fresh_labels(s, "s", 1).front();
  const auto pieces = fresh_labels(s, x + "_", 2);
  const std::string& middle = pieces[0];
  const std::string& right = pieces[1];

  std::vector<Side> sides;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sides.push_back(s.sides()[i]);
    if (i == *side) {
      sides.emplace_back(GluedSide{handle, End::Head});
      sides.emplace_back(BoundarySide{middle});
      sides.emplace_back(GluedSide{handle, End::Tail});
      sides.emplace_back(BoundarySide{right});
    }
  }

  PartialOpenBook out{PolygonPresentation(std::move(sides)), pob.basis, pob.images};
  auto remap = [&](BoundaryPoint& b) {
    if (b.side != x) return;
    if (b.pos < p) {
      b.pos /= p;
    } else {
      b.side = right;
      b.pos = (b.pos - q) / (Rational(1) - q);
    }
  };
  for (auto* arcs : {&out.basis, &out.images}) {
    for (Arc& a : *arcs) {
      remap(a.start);
      remap(a.end);
    }
  }
  auto [basis, image] = hopf_pair(out.surface, handle, +1, marked_points(out));
  out.basis.push_back(std::move(basis));
  out.images.push_back(std::move(image));
  return out;
}

std::optional<StabilizationSite> free_site(const PartialOpenBook& pob) {
  const auto& s = pob.surface;
  const auto marked = marked_points(pob);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.is_boundary(i)) continue;
    Rational hi = 1;
    for (const auto& m : marked) {
      if (m.side == s.label(i)) hi = std::min(hi, m.pos);
    }
    return StabilizationSite{{s.label(i), hi / 3}, {s.label(i), hi * 2 / 3}};
  }
  return std::nullopt;
}

DividingSetCounts dividing_set_counts(const PartialOpenBook& pob) {
  require_valid_pob(pob);
  DividingSetCounts out;
  out.boundary_s = boundary_components(pob.surface).count();
  out.boundary_p = pob.basis.size();
  out.note = "P taken as the disjoint union of one rectangle per basis arc (endpoints never shared); "
             "P is not required to be connected";
  return out;
}

PartialOpenBook canonicalize(const PartialOpenBook& pob) {
  require_valid_pob(pob);
  const auto& s = pob.surface;
  std::optional<std::pair<std::string, PartialOpenBook>> best;
  for (const Relabeling& r : all_relabelings(s)) {
    PartialOpenBook c{r.form, pob.basis, pob.images};
    auto map_point = [&](BoundaryPoint& b) {
      const std::size_t old = *s.boundary_side(b.side);
      b.pos = r.map_position(old, b.pos);
      b.side = r.form.label(r.new_side[old]);
    };
    for (auto* arcs : {&c.basis, &c.images}) {
      for (Arc& a : *arcs) {
        map_point(a.start);
        map_point(a.end);
        for (Crossing& x : a.crossings) {
          const std::size_t old = *s.pair_index(x.pair);
          x.pair = r.form.pair_label(r.new_pair[old]);
          if (r.pair_flipped[old]) x.direction = -x.direction;
        }
      }
    }
    // Respace positions by rank.
    std::map<std::string, std::vector<Rational>> per_side;
    for (const auto& m : marked_points(c)) per_side[m.side].push_back(m.pos);
    for (auto& [side, v] : per_side) std::sort(v.begin(), v.end());
    auto respace = [&](BoundaryPoint& b) {
      const auto& v = per_side[b.side];
      const auto rank = std::lower_bound(v.begin(), v.end(), b.pos) - v.begin();
      b.pos = Rational(rank + 1, static_cast<std::int64_t>(v.size()) + 1);
    };
    for (auto* arcs : {&c.basis, &c.images}) {
      for (Arc& a : *arcs) {
        respace(a.start);
        respace(a.end);
      }
    }

    std::ostringstream key;
    key << encode(c.surface);
    for (const auto* arcs : {&c.basis, &c.images}) {
      key << " |";
      for (const Arc& a : *arcs) {
        key << ' ' << a.start.side << ':' << to_text(a.start.pos) << '>' << a.end.side << ':' << to_text(a.end.pos);
        for (const auto& x : a.crossings) key << ',' << x.pair << (x.direction > 0 ? '+' : '-');
      }
    }
    if (!best || key.str() < best->first) best.emplace(key.str(), std::move(c));
  }
  return best->second;
}

}  // namespace pob
