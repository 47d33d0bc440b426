#include "pob/constructions.hpp"

#include <algorithm>

namespace pob {

TwistedAnnulus twisted_annulus(int t) {
  if (t == 0) throw Error(ErrorCode::ZeroTwist, "an untwisted annulus is compressible");
  if (t % 2 != 0) throw Error(ErrorCode::OddTwist, std::to_string(t) + " half-twists give a Moebius band");
  return TwistedAnnulus(t);
}

StarPlumbing star_plumbing(const std::vector<int>& halftwists) {
  if (halftwists.empty()) throw Error(ErrorCode::InvalidSpec, "a star plumbing needs at least one summand");
  StarPlumbing star;
  for (int t : halftwists) star.summands.push_back(twisted_annulus(t));
  return star;
}

std::vector<int> halftwists(const StarPlumbing& star) {
  std::vector<int> out;
  for (const auto& a : star.summands) out.push_back(a.halftwists());
  return out;
}

StarPlumbing mirror(const StarPlumbing& star) {
  std::vector<int> t = halftwists(star);
  for (int& x : t) x = -x;
  return star_plumbing(t);
}

void check_pretzel(const PretzelSpec& spec) {
  const auto& c = spec.coefficients;
  if (c.size() < 2) throw Error(ErrorCode::InvalidSpec, "need at least one coefficient before the final 1");
  if (c.back() != 1) throw Error(ErrorCode::InvalidSpec, "the last coefficient must be 1");
  for (int p : c) {
    if (p % 2 == 0) {
      throw Error(ErrorCode::EvenCoefficient,
                  "even coefficient: non-orientable pretzel surface rejected (" + std::to_string(p) + ")");
    }
  }
}

PretzelDecomposition pretzel_decompose(const PretzelSpec& spec, bool mirrored) {
  check_pretzel(spec);
  PretzelDecomposition out;
  std::vector<int> t;
  for (std::size_t i = 0; i + 1 < spec.coefficients.size(); ++i) {
    const int p = spec.coefficients[i];
    if (p == -1) throw Error(ErrorCode::ZeroTwist, "coefficient -1 gives an untwisted (compressible) band");
    const int twist = mirrored ? p + 1 : -(p + 1);
    if (i > 0 && (twist == 2 || twist == -2)) {
      out.warnings.push_back("HopfOnlyWarning: summand " + std::to_string(i + 1) + " from coefficient " +
                             std::to_string(p) + " is a Hopf band");
    }
    t.push_back(twist);
  }
  out.star = star_plumbing(t);
  return out;
}

StarSurface star_sum_surface(const StarPlumbing& star) {
  const std::size_t k = star.summands.size();
  if (k == 0) throw Error(ErrorCode::InvalidSpec, "empty star");
  StarSurface out;
  std::vector<Side> sides;
  std::size_t boundary = 0;
  for (End end : {End::Head, End::Tail}) {
    for (std::size_t i = 0; i < k; ++i) {
      sides.emplace_back(BoundarySide{"B" + std::to_string(boundary++)});
      sides.emplace_back(GluedSide{"b" + std::to_string(i + 1), end});
    }
  }
  for (std::size_t i = 0; i < k; ++i) out.band_pair.push_back("b" + std::to_string(i + 1));
  out.surface = PolygonPresentation(std::move(sides));
  return out;
}

ProductDiskSystem product_disk_basis(const StarPlumbing& star) {
  return product_disk_basis(star, star_sum_surface(star));
}

ProductDiskSystem product_disk_basis(const StarPlumbing& star, const StarSurface& built) {
  const auto& s = built.surface;
  ProductDiskSystem out;
  std::vector<BoundaryPoint> occupied;
  std::vector<std::pair<Word, int>> twists;
  for (std::size_t i = 0; i < star.summands.size(); ++i) {
    if (!star.summands[i].is_hopf()) continue;
    Arc arc = band_cocore(s, built.band_pair[i], occupied);
    occupied.push_back(arc.start);
    occupied.push_back(arc.end);
    twists.emplace_back(Word{make_letter(*s.pair_index(built.band_pair[i]), 1)},
                        star.summands[i].halftwists() > 0 ? 1 : -1);
    out.pairs.push_back({std::move(arc), {}, i});
  }
  // The disks of several Hopf summands compose: h = T_1 o T_2 o ... o T_m in
  // summand order. Each cocore meets only its own band core.
  for (auto& pr : out.pairs) {
    Arc image = pr.arc;
    for (auto it = twists.rbegin(); it != twists.rend(); ++it) image = dehn_twist(s, image, it->first, it->second);
    pr.image = seat_image(s, pr.arc, image.crossings, occupied);
    occupied.push_back(pr.image.start);
    occupied.push_back(pr.image.end);
  }
  return out;
}

PartialOpenBook pob_from_product_disks(const PolygonPresentation& surface, const ProductDiskSystem& system) {
  surface.require_valid();
  PartialOpenBook pob{surface, {}, {}};
  for (const auto& p : system.pairs) {
    pob.basis.push_back(p.arc);
    pob.images.push_back(p.image);
  }
  // A basis of the span: disjoint, essential, pairwise non-parallel, and no
  // more arcs than 1 - chi(S), the rank of H_1(S, dS).
  const int rank = 1 - euler_characteristic(surface);
  if (static_cast<int>(pob.basis.size()) > rank) {
    throw Error(ErrorCode::NotABasis, std::to_string(pob.basis.size()) + " arcs exceed rank " + std::to_string(rank));
  }
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    if (is_boundary_parallel(surface, pob.basis[i])) {
      throw Error(ErrorCode::NotABasis, "arc " + std::to_string(i) + " is boundary-parallel");
    }
    for (std::size_t j = i + 1; j < pob.basis.size(); ++j) {
      if (is_isotopic(surface, pob.basis[i], pob.basis[j], false)) {
        throw Error(ErrorCode::NotABasis, "arcs " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
      }
      if (interior_intersections(surface, pob.basis[i], pob.basis[j]) != 0) {
        throw Error(ErrorCode::NotABasis, "arcs " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
  const Diagnostics d = validate_pob(pob);
  if (!d.empty()) throw Error(ErrorCode::InvalidPOB, d.front().message);
  return pob;
}

bool is_strongly_quasipositive(const StarPlumbing& star) {
  return std::all_of(star.summands.begin(), star.summands.end(),
                     [](const TwistedAnnulus& a) { return a.halftwists() > 0; });
}

}  // namespace pob
