#include <doctest.h>

#include "pob/constructions.hpp"
#include "pob/open_book.hpp"
#include "pob/pipeline.hpp"
#include "support.hpp"

using namespace pob;
using testing::arc;

namespace {

PartialOpenBook hopf(int sign) { return run_pipeline(star_plumbing({2 * sign})).pob; }

bool has(const Diagnostics& d, ErrorCode code) {
  for (const auto& x : d) {
    if (x.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hopf band open books") {
  const auto pos = hopf(1);
  REQUIRE(validate_pob(pos).empty());
  CHECK(veering_report(pos).verdicts == std::vector<Veering>{Veering::Right});
  const auto cv = contact_verdict(pos);
  CHECK(cv.verdict == ContactClass::NonzeroTight);
  CHECK(cv.intersections == std::vector<std::vector<std::size_t>>{{0}});

  const auto neg = hopf(-1);
  CHECK(veering_report(neg).verdicts == std::vector<Veering>{Veering::Left});
  const auto nv = contact_verdict(neg);
  CHECK(nv.verdict == ContactClass::OvertwistedWitness);
  CHECK(nv.left_arc == std::optional<std::size_t>{0});
}

TEST_CASE("identity image is isotopic") {
  const auto s = testing::annulus();
  const PartialOpenBook p{s, {arc("B0", {1, 2}, "B1", {1, 2})}, {arc("B0", {3, 4}, "B1", {3, 4})}};
  REQUIRE(validate_pob(p).empty());
  CHECK(veering_report(p).verdicts == std::vector<Veering>{Veering::Isotopic});
  CHECK(veering_report(p).right_veering());
}

TEST_CASE("empty basis is tight") {
  const PartialOpenBook p{disk_surface(), {}, {}};
  CHECK(contact_verdict(p).verdict == ContactClass::NonzeroTight);
  CHECK(veering_report(p).verdicts.empty());
}

TEST_CASE("validate_pob diagnostics") {
  const auto s = testing::annulus();
  const auto a = arc("B0", {1, 2}, "B1", {1, 2});
  CHECK(has(validate_pob({s, {a}, {}}), ErrorCode::InvalidPOB));
  CHECK(has(validate_pob({s, {a}, {arc("B0", {1, 2}, "B1", {3, 4}, "b+")}}), ErrorCode::DuplicatePosition));
  CHECK(has(validate_pob({s, {a}, {arc("B0", {3, 4}, "B0", {7, 8}, "b+")}}), ErrorCode::EndpointMismatch));
  CHECK(has(validate_pob({s, {a}, {arc("B0", {3, 4}, "B1", {3, 4}, "b+ b+")}}), ErrorCode::ArcNotEmbedded) == false);
  CHECK(has(validate_pob({s, {arc("B0", {1, 8}, "B0", {7, 8}, "b+ b+")}, {arc("B0", {1, 16}, "B0", {15, 16}, "b+ b+")}}),
            ErrorCode::ArcNotEmbedded));
  const auto b = arc("B0", {1, 4}, "B1", {1, 4}, "b+");
  CHECK(has(validate_pob({s, {a, arc("B0", {1, 4}, "B1", {3, 4}, "b+")}, {arc("B0", {5, 8}, "B1", {5, 8}, "b+"), b}}),
            ErrorCode::BasisNotDisjoint));
  CHECK(has(validate_pob({s, {arc("B0", {1, 2}, "B1", {1, 2}, "z+")}, {a}}), ErrorCode::UnknownPair));
  CHECK_THROWS_AS(veering_report({s, {a}, {}}), Error);
}

TEST_CASE("positive stabilization invariants") {
  PartialOpenBook cur = run_pipeline(PretzelSpec{{-3, 3, 1}}, false).pob;
  const auto first = veering_report(cur).verdicts;
  for (int step = 0; step < 3; ++step) {
    const int chi = euler_characteristic(cur.surface);
    const std::size_t n = cur.basis.size();
    const auto site = free_site(cur);
    REQUIRE(site);
    cur = positive_stabilization(cur, *site);
    REQUIRE(validate_pob(cur).empty());
    CHECK(euler_characteristic(cur.surface) == chi - 1);
    CHECK(cur.basis.size() == n + 1);
    const auto v = veering_report(cur).verdicts;
    CHECK(std::equal(first.begin(), first.end(), v.begin()));
    CHECK(v.back() == Veering::Right);
    CHECK(contact_verdict(cur).verdict == ContactClass::NonzeroTight);
  }
}

TEST_CASE("stabilization site errors") {
  const auto p = hopf(1);
  const auto& m = p.basis[0].start;
  CHECK_THROWS_AS(positive_stabilization(p, {{m.side, m.pos / 2}, {m.side, (m.pos + 1) / 2}}), Error);
  CHECK_THROWS_AS(positive_stabilization(p, {{"B0", {1, 8}}, {"B1", {1, 4}}}), Error);
  CHECK_THROWS_AS(positive_stabilization(p, {{"B0", {1, 4}}, {"B0", {1, 8}}}), Error);
}

TEST_CASE("stabilized disk is the positive hopf band") {
  const PartialOpenBook disk{disk_surface(), {}, {}};
  const auto once = positive_stabilization(disk, *free_site(disk));
  CHECK(canonicalize(once) == canonicalize(hopf(1)));
  const PartialOpenBook small{testing::parse_sides("B0"), {}, {}};
  CHECK(canonicalize(positive_stabilization(small, *free_site(small))) == canonicalize(hopf(1)));
}

TEST_CASE("canonicalize is idempotent and label independent") {
  const auto a = run_pipeline(PretzelSpec{{-3, 3, 1}}, false).pob;
  const auto b = run_pipeline(star_plumbing({2, -4})).pob;
  CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK_FALSE(canonicalize(hopf(1)) == canonicalize(hopf(-1)));
}

TEST_CASE("dividing set counts") {
  const auto d = dividing_set_counts(run_pipeline(PretzelSpec{{-3, 3, 1}}, false).pob);
  CHECK(d.boundary_s == 1);
  CHECK(d.boundary_p == 1);
  CHECK_FALSE(d.note.empty());
}

TEST_CASE("verdict rule exclusivity") {
  for (const auto& t : std::vector<std::vector<int>>{{2}, {-2}, {2, -2}, {-2, 4}, {2, 2}, {2, -4, 6}, {-2, -2}}) {
    const auto p = run_pipeline(star_plumbing(t)).pob;
    const auto v = veering_report(p);
    const auto c = contact_verdict(p);
    CHECK((v.right_veering() || c.verdict == ContactClass::OvertwistedWitness));
    CHECK_FALSE((!v.right_veering() && c.verdict == ContactClass::NonzeroTight));
  }
}

TEST_CASE("several positive hopf summands compose") {
  const auto p = run_pipeline(star_plumbing({2, 2}));
  REQUIRE(validate_pob(p.pob).empty());
  CHECK(veering_report(p.pob).verdicts == std::vector<Veering>{Veering::Right, Veering::Right});
  const auto c = contact_verdict(p.pob);
  // a1 meets h(a2): the bigon criterion is silent here
  CHECK(c.verdict == ContactClass::Unknown);
  CHECK(c.intersections == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 0}});
}
