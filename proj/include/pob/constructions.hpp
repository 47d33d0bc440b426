#pragma once

// Seifert surfaces of pretzel links as star plumbings of twisted annuli, the
// product disks they carry, and the partial open books those disks induce.

#include <cstddef>
#include <string>
#include <vector>

#include "pob/open_book.hpp"
#include "pob/surface.hpp"

namespace pob {

// Annulus with a signed, even, nonzero number of half-twists; +2 is the
// positive Hopf band. Positive means right-handed.
class TwistedAnnulus {
 public:
  int halftwists() const { return halftwists_; }
  bool is_hopf() const { return halftwists_ == 2 || halftwists_ == -2; }
  bool operator==(const TwistedAnnulus&) const = default;

 private:
  friend TwistedAnnulus twisted_annulus(int t);
  explicit TwistedAnnulus(int t) : halftwists_(t) {}
  int halftwists_;
};

// Throws OddTwist / ZeroTwist.
TwistedAnnulus twisted_annulus(int t);

// Annuli plumbed in a star along one central 2k-gon.
struct StarPlumbing {
  std::vector<TwistedAnnulus> summands;

  bool operator==(const StarPlumbing&) const = default;
};

StarPlumbing star_plumbing(const std::vector<int>& halftwists);
std::vector<int> halftwists(const StarPlumbing& star);
StarPlumbing mirror(const StarPlumbing& star);

// Odd coefficients p_1, ..., p_k followed by a final 1.
struct PretzelSpec {
  std::vector<int> coefficients;

  bool operator==(const PretzelSpec&) const = default;
};

// Throws InvalidSpec / EvenCoefficient.
void check_pretzel(const PretzelSpec& spec);

struct PretzelDecomposition {
  StarPlumbing star;
  // Non-leading summands that are Hopf bands (the family excludes them).
  std::vector<std::string> warnings;
};

// Summand i is A(-(p_i + 1)); `mirrored` negates every summand.
// (-3, 3, 1) gives [A(+2), A(-4)].
PretzelDecomposition pretzel_decompose(const PretzelSpec& spec, bool mirrored = false);

struct StarSurface {
  PolygonPresentation surface;
  // Glued pair carrying the band of summand i.
  std::vector<std::string> band_pair;
};

// Polygon B0 b1+ B1 b2+ ... b_k+ ... b1- ... b_k- with boundary sides between
// consecutive glued sides; chi = 1 - k.
StarSurface star_sum_surface(const StarPlumbing& star);

struct ProductDiskSystem {
  struct Pair {
    Arc arc;
    Arc image;
    std::size_t summand = 0;
  };
  std::vector<Pair> pairs;
};

// One product disk per Hopf summand (its band cocore and the twisted image);
// summands with four or more half-twists carry none.
ProductDiskSystem product_disk_basis(const StarPlumbing& star);
ProductDiskSystem product_disk_basis(const StarPlumbing& star, const StarSurface& built);

// Throws NotABasis when the arcs do not form a basis of the subsurface they span.
PartialOpenBook pob_from_product_disks(const PolygonPresentation& surface, const ProductDiskSystem& system);

// Every summand is a positive annulus.
bool is_strongly_quasipositive(const StarPlumbing& star);

}  // namespace pob
