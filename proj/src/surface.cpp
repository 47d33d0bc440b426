#include "pob/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pob {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnmatchedPair: return "UnmatchedPair";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::InteriorVertex: return "InteriorVertex";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::UnknownPair: return "UnknownPair";
    case ErrorCode::UnknownSide: return "UnknownSide";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::NoSharedStart: return "NoSharedStart";
    case ErrorCode::BasisNotDisjoint: return "BasisNotDisjoint";
    case ErrorCode::ImagesNotDisjoint: return "ImagesNotDisjoint";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::ArcNotEmbedded: return "ArcNotEmbedded";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::InvalidPOB: return "InvalidPOB";
    case ErrorCode::SiteObstructed: return "SiteObstructed";
    case ErrorCode::OddTwist: return "OddTwist";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::EvenCoefficient: return "EvenCoefficient";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (Letter l : b) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclically_reduce(const Word& w) {
  Word r = reduce_word(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Union-find over polygon corners; corner i is the start of side i.
class CornerClasses {
 public:
  explicit CornerClasses(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PolygonPresentation::PolygonPresentation(std::vector<Side> sides)
    : sides_(std::move(sides)), pair_of_side_(sides_.size(), kNone) {
  std::map<std::string, std::size_t> pair_ids;
  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (const auto* g = std::get_if<GluedSide>(&sides_[i])) occurrences[g->pair].push_back(i);
  }

  std::map<std::string, std::size_t> boundary_labels;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (const auto* b = std::get_if<BoundarySide>(&sides_[i])) {
      if (boundary_labels.count(b->label) != 0) {
        diagnostics_.push_back({ErrorCode::InvalidPresentation, "duplicate boundary label " + b->label});
      }
      boundary_labels[b->label] = i;
    }
  }

  // Pairs are indexed in order of first occurrence.
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    const auto* g = std::get_if<GluedSide>(&sides_[i]);
    if (g == nullptr || pair_ids.count(g->pair) != 0) continue;
    const auto& occ = occurrences[g->pair];
    if (occ.size() != 2) {
      diagnostics_.push_back({ErrorCode::UnmatchedPair,
                              "pair " + g->pair + " occurs " + std::to_string(occ.size()) + " time(s)"});
      pair_ids[g->pair] = kNone;
      continue;
    }
    const auto& first = std::get<GluedSide>(sides_[occ[0]]);
    const auto& second = std::get<GluedSide>(sides_[occ[1]]);
    if (first.end == second.end) {
      diagnostics_.push_back({ErrorCode::UnmatchedPair, "pair " + g->pair + " has both sides on the same end"});
      pair_ids[g->pair] = kNone;
      continue;
    }
    if (first.preserving || second.preserving) {
      diagnostics_.push_back(
          {ErrorCode::NonOrientable, "pair " + g->pair + " is glued orientation-preservingly"});
    }
    PairInfo info{g->pair, first.end == End::Head ? occ[0] : occ[1], first.end == End::Head ? occ[1] : occ[0]};
    pair_ids[g->pair] = pairs_.size();
    pair_of_side_[occ[0]] = pairs_.size();
    pair_of_side_[occ[1]] = pairs_.size();
    pairs_.push_back(std::move(info));
  }

  if (boundary_labels.empty()) {
    diagnostics_.push_back({ErrorCode::NoBoundary, "every side is glued: closed surface rejected"});
  }

  if (diagnostics_.empty()) {
    // Every corner class must meet the boundary, otherwise the glued sides
    // are not a full arc system.
    const std::size_t n = sides_.size();
    CornerClasses corners(n);
    for (const auto& pr : pairs_) {
      corners.unite(pr.head, (pr.tail + 1) % n);
      corners.unite((pr.head + 1) % n, pr.tail);
    }
    std::vector<bool> on_boundary(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_boundary(i)) {
        on_boundary[corners.find(i)] = true;
        on_boundary[corners.find((i + 1) % n)] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!on_boundary[corners.find(i)]) {
        diagnostics_.push_back(
            {ErrorCode::InteriorVertex, "corner " + std::to_string(i) + " is an interior vertex"});
        break;
      }
    }
  }
}

const std::string& PolygonPresentation::label(std::size_t i) const {
  return std::visit(
      [](const auto& s) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, BoundarySide>) {
          return s.label;
        } else {
          return s.pair;
        }
      },
      sides_[i]);
}

std::optional<std::size_t> PolygonPresentation::boundary_side(std::string_view label) const {
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (const auto* b = std::get_if<BoundarySide>(&sides_[i]); b != nullptr && b->label == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PolygonPresentation::pair_index(std::string_view id) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t PolygonPresentation::exit_side(Letter l) const {
  const auto& pr = pairs_[letter_pair(l)];
  return l > 0 ? pr.head : pr.tail;
}

std::size_t PolygonPresentation::entry_side(Letter l) const {
  const auto& pr = pairs_[letter_pair(l)];
  return l > 0 ? pr.tail : pr.head;
}

Letter PolygonPresentation::exit_letter(std::size_t side) const {
  const std::size_t pair = pair_of_side_[side];
  return make_letter(pair, pairs_[pair].head == side ? 1 : -1);
}

std::size_t PolygonPresentation::boundary_side_count() const {
  return static_cast<std::size_t>(
      std::count_if(sides_.begin(), sides_.end(), [](const Side& s) { return std::holds_alternative<BoundarySide>(s); }));
}

void PolygonPresentation::require_valid() const {
  if (!diagnostics_.empty()) throw Error(ErrorCode::InvalidPresentation, diagnostics_.front().message);
}

Diagnostics validate(const PolygonPresentation& p) { return p.diagnostics(); }

int euler_characteristic(const PolygonPresentation& p) {
  p.require_valid();
  const std::size_t n = p.size();
  CornerClasses corners(n);
  for (std::size_t pr = 0; pr < p.pair_count(); ++pr) {
    corners.unite(p.head_side(pr), (p.tail_side(pr) + 1) % n);
    corners.unite((p.head_side(pr) + 1) % n, p.tail_side(pr));
  }
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (corners.find(i) == i) ++vertices;
  }
  const std::size_t edges = p.boundary_side_count() + p.pair_count();
  return static_cast<int>(vertices) - static_cast<int>(edges) + 1;
}

BoundaryComponents boundary_components(const PolygonPresentation& p) {
  p.require_valid();
  const std::size_t n = p.size();
  auto partner = [&](std::size_t side) {
    const Letter l = p.exit_letter(side);
    return p.entry_side(l);
  };
  // Boundary side that follows the end corner of side i along the boundary.
  auto successor = [&](std::size_t i) {
    std::size_t next = (i + 1) % n;
    while (!p.is_boundary(next)) next = (partner(next) + 1) % n;
    return next;
  };

  BoundaryComponents out;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.is_boundary(i) || seen[i]) continue;
    std::vector<std::string> word;
    for (std::size_t s = i; !seen[s]; s = successor(s)) {
      seen[s] = true;
      word.push_back(p.label(s));
    }
    out.words.push_back(std::move(word));
  }
  return out;
}

int genus(const PolygonPresentation& p) {
  const int chi = euler_characteristic(p);
  const int b = static_cast<int>(boundary_components(p).count());
  const int twice = 2 - chi - b;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorCode::NonOrientable, "chi = " + std::to_string(chi) + ", b = " + std::to_string(b) +
                                              " give no nonnegative integer genus");
  }
  return twice / 2;
}

PolygonPresentation rotate(const PolygonPresentation& p, std::size_t k) {
  std::vector<Side> sides;
  const std::size_t n = p.size();
  sides.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sides.push_back(p.sides()[(i + k) % n]);
  return PolygonPresentation(std::move(sides));
}

std::string encode(const PolygonPresentation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out << ' ';
    if (const auto* g = std::get_if<GluedSide>(&p.sides()[i])) {
      out << g->pair << (g->end == End::Head ? '+' : '-') << (g->preserving ? "~" : "");
    } else {
      out << p.label(i);
    }
  }
  return out.str();
}

std::vector<Relabeling> all_relabelings(const PolygonPresentation& p) {
  p.require_valid();
  const std::size_t n = p.size();

  // Merged sides, each a list of original sides.
  std::vector<std::vector<std::size_t>> merged;
  std::vector<std::size_t> run_starts;
  if (p.boundary_side_count() == n) {
    for (std::size_t s = 0; s < n; ++s) run_starts.push_back(s);
  } else {
    std::size_t first_glued = 0;
    while (p.is_boundary(first_glued)) ++first_glued;
    run_starts.push_back(first_glued);
  }

  std::vector<Relabeling> out;
  for (std::size_t run_start : run_starts) {
    merged.clear();
    if (p.boundary_side_count() == n) {
      std::vector<std::size_t> all;
      for (std::size_t i = 0; i < n; ++i) all.push_back((run_start + i) % n);
      merged.push_back(std::move(all));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t s = (run_start + i) % n;
        if (p.is_boundary(s) && !merged.empty() && p.is_boundary(merged.back().back())) {
          merged.back().push_back(s);
        } else {
          merged.push_back({s});
        }
      }
    }

    const std::size_t m = merged.size();
    for (std::size_t rot = 0; rot < m; ++rot) {
      Relabeling r;
      r.new_side.assign(n, 0);
      r.run_offset.assign(n, 0);
      r.run_length.assign(n, 1);
      r.new_pair.assign(p.pair_count(), 0);
      r.pair_flipped.assign(p.pair_count(), false);
      std::vector<bool> pair_seen(p.pair_count(), false);
      std::size_t next_boundary = 0;
      std::size_t next_pair = 0;
      std::vector<Side> sides;
      for (std::size_t j = 0; j < m; ++j) {
        const auto& group = merged[(rot + j) % m];
        for (std::size_t k = 0; k < group.size(); ++k) {
          r.new_side[group[k]] = j;
          r.run_offset[group[k]] = static_cast<std::int64_t>(k);
          r.run_length[group[k]] = static_cast<std::int64_t>(group.size());
        }
        const std::size_t s = group.front();
        if (p.is_boundary(s)) {
          sides.emplace_back(BoundarySide{"B" + std::to_string(next_boundary++)});
          continue;
        }
        const auto& g = std::get<GluedSide>(p.sides()[s]);
        const std::size_t pr = letter_pair(p.exit_letter(s));
        if (!pair_seen[pr]) {
          pair_seen[pr] = true;
          r.new_pair[pr] = next_pair++;
          r.pair_flipped[pr] = (g.end != End::Head);
        }
        const End end = r.pair_flipped[pr] ? (g.end == End::Head ? End::Tail : End::Head) : g.end;
        sides.emplace_back(GluedSide{"p" + std::to_string(r.new_pair[pr]), end, g.preserving});
      }
      r.form = PolygonPresentation(std::move(sides));
      out.push_back(std::move(r));
    }
  }
  return out;
}

PolygonPresentation canonical_form(const PolygonPresentation& p) {
  auto all = all_relabelings(p);
  auto best = std::min_element(all.begin(), all.end(), [](const Relabeling& a, const Relabeling& b) {
    return encode(a.form) < encode(b.form);
  });
  return best->form;
}

}  // namespace pob
