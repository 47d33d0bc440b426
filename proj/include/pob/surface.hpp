#pragma once

// Compact orientable surfaces with nonempty boundary, presented as a single
// polygon whose sides are either pieces of the surface boundary or one half
// of a glued pair. Glued sides are identified orientation-reversingly unless
// flagged otherwise, and every corner must land on the boundary, so the glued
// sides form a full arc system cutting the surface into one disk.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pob/error.hpp"

namespace pob {

using Rational = boost::rational<std::int64_t>;

enum class End : std::uint8_t { Head, Tail };

struct BoundarySide {
  std::string label;

  bool operator==(const BoundarySide&) const = default;
};

struct GluedSide {
  std::string pair;
  End end = End::Head;
  // true: orientation-preserving identification (a Moebius band).
  bool preserving = false;

  bool operator==(const GluedSide&) const = default;
};

using Side = std::variant<BoundarySide, GluedSide>;

// Letters of the free group on the glued pairs: +(i + 1) crosses pair i from
// its Head side to its Tail side, -(i + 1) the other way.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter make_letter(std::size_t pair, int direction) {
  return direction > 0 ? static_cast<Letter>(pair + 1) : -static_cast<Letter>(pair + 1);
}
inline std::size_t letter_pair(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }
inline int letter_direction(Letter l) { return l > 0 ? 1 : -1; }

// Free reduction.
Word reduce_word(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// Free reduction followed by cancelling first against last letters.
Word cyclically_reduce(const Word& w);

class PolygonPresentation {
 public:
  PolygonPresentation() = default;
  explicit PolygonPresentation(std::vector<Side> sides);

  const std::vector<Side>& sides() const { return sides_; }
  std::size_t size() const { return sides_.size(); }
  bool is_boundary(std::size_t i) const { return std::holds_alternative<BoundarySide>(sides_[i]); }
  const std::string& label(std::size_t i) const;

  std::optional<std::size_t> boundary_side(std::string_view label) const;
  std::size_t pair_count() const { return pairs_.size(); }
  const std::string& pair_label(std::size_t pair) const { return pairs_[pair].id; }
  std::optional<std::size_t> pair_index(std::string_view id) const;
  std::size_t head_side(std::size_t pair) const { return pairs_[pair].head; }
  std::size_t tail_side(std::size_t pair) const { return pairs_[pair].tail; }

  // Side through which `l` leaves a polygon copy, and the side of the next
  // copy through which it enters.
  std::size_t exit_side(Letter l) const;
  std::size_t entry_side(Letter l) const;
  // Letter for leaving a copy through glued side `side`.
  Letter exit_letter(std::size_t side) const;

  std::size_t boundary_side_count() const;

  const Diagnostics& diagnostics() const { return diagnostics_; }
  bool valid() const { return diagnostics_.empty(); }
  // Throws InvalidPresentation listing the first violation.
  void require_valid() const;

  bool operator==(const PolygonPresentation& other) const { return sides_ == other.sides_; }

 private:
  struct PairInfo {
    std::string id;
    std::size_t head = 0;
    std::size_t tail = 0;
  };

  std::vector<Side> sides_;
  std::vector<PairInfo> pairs_;
  std::vector<std::size_t> pair_of_side_;
  Diagnostics diagnostics_;
};

Diagnostics validate(const PolygonPresentation& p);

// V - E + F of the identification complex.
int euler_characteristic(const PolygonPresentation& p);

struct BoundaryComponents {
  // Boundary-side labels met along each component, in traversal order.
  std::vector<std::vector<std::string>> words;

  std::size_t count() const { return words.size(); }
};

BoundaryComponents boundary_components(const PolygonPresentation& p);

int genus(const PolygonPresentation& p);

// Cyclic rotation: side i of the result is side (i + k) mod n of p.
PolygonPresentation rotate(const PolygonPresentation& p, std::size_t k);

// One label-independent rewrite of a presentation: runs of consecutive
// boundary sides merged into one side, the merged polygon rotated to start at
// a chosen side, labels renamed B0.. and p0.. by first occurrence, and the
// first occurrence of every pair made its Head.
struct Relabeling {
  PolygonPresentation form;
  // Per original side: its side in `form`. A boundary side that was piece
  // `run_offset` of a run of `run_length` maps pos to (run_offset + pos) / run_length.
  std::vector<std::size_t> new_side;
  std::vector<std::int64_t> run_offset;
  std::vector<std::int64_t> run_length;
  // Per original pair: its index in `form` and whether Head/Tail swapped.
  std::vector<std::size_t> new_pair;
  std::vector<bool> pair_flipped;

  Rational map_position(std::size_t side, const Rational& pos) const {
    return (Rational(run_offset[side]) + pos) / Rational(run_length[side]);
  }
};

// Every relabeling, one per rotation of the merged polygon. Requires p valid.
std::vector<Relabeling> all_relabelings(const PolygonPresentation& p);

// Text encoding used to order relabelings ("B0 p0+ B1 p0-").
std::string encode(const PolygonPresentation& p);

// The relabeling whose encoding is least; label-independent normal form.
PolygonPresentation canonical_form(const PolygonPresentation& p);

}  // namespace pob
