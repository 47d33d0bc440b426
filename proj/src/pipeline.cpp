#include "pob/pipeline.hpp"

#include <algorithm>
#include <thread>

namespace pob {

namespace {

constexpr const char* kMinus = "−";

std::string signed_text(int v, bool plus) {
  if (v < 0) return kMinus + std::to_string(-v);
  return (plus ? "+" : "") + std::to_string(v);
}

Pipeline finish(Pipeline p) {
  p.built = star_sum_surface(p.star);
  p.disks = product_disk_basis(p.star, p.built);
  p.pob = pob_from_product_disks(p.built.surface, p.disks);
  return p;
}

std::string veering_text(const std::vector<Veering>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::string(to_string(x));
  return out;
}

}  // namespace

Pipeline run_pipeline(const PretzelSpec& spec, bool mirrored) {
  auto d = pretzel_decompose(spec, mirrored);
  Pipeline p;
  p.spec = spec;
  p.mirrored = mirrored;
  p.star = std::move(d.star);
  p.warnings = std::move(d.warnings);
  return finish(std::move(p));
}

Pipeline run_pipeline(const StarPlumbing& star) {
  Pipeline p;
  p.star = star;
  return finish(std::move(p));
}

PolygonPresentation disk_surface() {
  return PolygonPresentation({BoundarySide{"B0"}, BoundarySide{"B1"}, BoundarySide{"B2"}, BoundarySide{"B3"}});
}

std::string summand_text(int halftwists) { return "A(" + signed_text(halftwists, true) + ")"; }

std::string star_text(const StarPlumbing& star) {
  std::string out = "[";
  for (std::size_t i = 0; i < star.summands.size(); ++i) {
    out += (i ? ", " : "") + summand_text(star.summands[i].halftwists());
  }
  return out + "]";
}

std::string pretzel_text(const PretzelSpec& spec) {
  std::string out = "pretzel(";
  for (std::size_t i = 0; i < spec.coefficients.size(); ++i) {
    out += (i ? "," : "") + signed_text(spec.coefficients[i], false);
  }
  return out + ")";
}

std::string format_row(const ExampleRow& row) {
  return row.example + " | " + std::to_string(row.product_disks) + " | " + veering_text(row.veering) + " | " +
         std::string(to_string(row.verdict)) + " | " + (row.sqp ? (*row.sqp ? "yes" : "no") : "-");
}

ExampleRow example_row(const std::string& name, const Pipeline& p) {
  return ExampleRow{name, p.disks.pairs.size(), veering_report(p.pob).verdicts, contact_verdict(p.pob).verdict,
                    is_strongly_quasipositive(p.star)};
}

std::vector<PretzelSpec> family_specs(int max_k, int range, bool mirrored) {
  std::vector<int> values;
  for (int n = -range; n <= range; ++n) {
    if (n % 2 != 0) values.push_back(n);
  }
  std::vector<PretzelSpec> out;
  for (int m = 2; m <= max_k; ++m) {
    std::vector<std::size_t> idx(m - 1, 0);
    while (true) {
      PretzelSpec spec{{-3}};
      bool ok = true;
      bool negative = false;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const int n = values[idx[i]];
        const int t = mirrored ? n + 1 : -(n + 1);
        ok = ok && t != 0 && t != 2 && t != -2;
        negative = negative || t < 0;
        spec.coefficients.push_back(n);
      }
      spec.coefficients.push_back(1);
      const int lead = mirrored ? -2 : 2;
      if (ok && (negative || lead < 0)) out.push_back(std::move(spec));

      std::size_t i = idx.size();
      while (i > 0 && ++idx[i - 1] == values.size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<ExampleRow> sweep_family(const std::vector<PretzelSpec>& specs, bool mirrored, unsigned threads) {
  std::vector<ExampleRow> rows(specs.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < specs.size(); i += threads) {
        rows[i] = example_row(pretzel_text(specs[i]), run_pipeline(specs[i], mirrored));
      }
    });
  }
  for (auto& th : pool) th.join();
  return rows;
}

SuiteResult run_golden_suite(bool mirrored, const FamilyOptions& family, unsigned threads) {
  SuiteResult r;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  };

  // 6_1 = pretzel(-3,3,1)
  const PretzelSpec six_one{{-3, 3, 1}};
  const Pipeline six = run_pipeline(six_one, mirrored);
  const std::string six_name = pretzel_text(six_one);
  r.rows.push_back(example_row(six_name, six));
  {
    const auto& s = six.pob.surface;
    const std::string conv = mirrored ? " (mirrored twist convention)" : "";
    expect(halftwists(six.star) == std::vector<int>{2, -4},
           six_name + ": summands " + star_text(six.star) + ", expected [A(+2), A(" + kMinus + "4)]" + conv);
    expect(euler_characteristic(s) == -1, six_name + ": chi != -1");
    expect(genus(s) == 1, six_name + ": genus != 1");
    expect(boundary_components(s).count() == 1, six_name + ": boundary components != 1");
    expect(six.pob.basis.size() == 1, six_name + ": basis size != 1");
    expect(r.rows.back().veering == std::vector<Veering>{Veering::Right}, six_name + ": veering is not [Right]" + conv);
    expect(six.pob.basis.size() == 1 && interior_intersections(s, six.pob.basis[0], six.pob.images[0]) == 0,
           six_name + ": a and h(a) meet in their interiors");
    expect(r.rows.back().verdict == ContactClass::NonzeroTight,
           six_name + ": verdict " + std::string(to_string(r.rows.back().verdict)) + ", expected NonzeroTight" + conv);
    expect(!is_strongly_quasipositive(six.star), six_name + ": reported strongly quasipositive");

    const StarPlumbing direct = star_plumbing({2, -4});
    const Pipeline alt = run_pipeline(mirrored ? mirror(direct) : direct);
    expect(canonicalize(alt.pob) == canonicalize(six.pob),
           "star " + star_text(alt.star) + " differs from " + six_name + " after relabeling");
  }

  for (int t : {2, -2, -4}) {
    const Pipeline p = run_pipeline(star_plumbing({t}));
    r.rows.push_back(example_row(summand_text(t), p));
    const auto& row = r.rows.back();
    if (t == 2) {
      expect(row.veering == std::vector<Veering>{Veering::Right} && row.verdict == ContactClass::NonzeroTight,
             "positive Hopf band: expected [Right] NonzeroTight");
    } else if (t == -2) {
      expect(row.veering == std::vector<Veering>{Veering::Left} && row.verdict == ContactClass::OvertwistedWitness,
             "negative Hopf band: expected [Left] OvertwistedWitness");
    } else {
      expect(row.product_disks == 0 && row.verdict == ContactClass::NonzeroTight,
             summand_text(t) + ": expected no product disks and NonzeroTight");
    }
  }

  {
    const PartialOpenBook disk{disk_surface(), {}, {}};
    r.rows.push_back(ExampleRow{"disk", 0, {}, contact_verdict(disk).verdict, std::nullopt});
    expect(r.rows.back().verdict == ContactClass::NonzeroTight, "empty basis: expected NonzeroTight");
    const PartialOpenBook once = positive_stabilization(disk, *free_site(disk));
    const Pipeline hopf = run_pipeline(star_plumbing({2}));
    expect(canonicalize(once) == canonicalize(hopf.pob), "stabilized disk is not the positive Hopf band");
  }

  {
    PartialOpenBook cur = six.pob;
    const auto first = veering_report(cur).verdicts;
    const auto verdict = contact_verdict(cur).verdict;
    for (int step = 1; step <= 3; ++step) {
      const int chi = euler_characteristic(cur.surface);
      cur = positive_stabilization(cur, *free_site(cur));
      const auto v = veering_report(cur).verdicts;
      expect(euler_characteristic(cur.surface) == chi - 1, six_name + " stabilization " + std::to_string(step) +
                                                               ": chi did not drop by 1");
      expect(std::equal(first.begin(), first.end(), v.begin()),
             six_name + " stabilization " + std::to_string(step) + ": earlier veering verdicts changed");
      expect(contact_verdict(cur).verdict == verdict,
             six_name + " stabilization " + std::to_string(step) + ": contact verdict changed");
    }
    r.rows.push_back(ExampleRow{six_name + " stabilized x3", cur.basis.size(), veering_report(cur).verdicts,
                                contact_verdict(cur).verdict, std::nullopt});
  }

  r.family = sweep_family(family_specs(family.max_k, family.range, mirrored), mirrored, threads);
  for (const auto& row : r.family) {
    expect(row.product_disks == 1, row.example + ": " + std::to_string(row.product_disks) + " product disks");
    expect(row.verdict == ContactClass::NonzeroTight,
           row.example + ": verdict " + std::string(to_string(row.verdict)) + ", expected NonzeroTight");
    expect(row.sqp == false, row.example + ": reported strongly quasipositive");
  }
  return r;
}

}  // namespace pob
