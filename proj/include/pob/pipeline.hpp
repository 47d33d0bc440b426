#pragma once

// Spec -> star -> surface -> product disks -> partial open book, and the
// golden example suite built on top of it.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pob/constructions.hpp"
#include "pob/open_book.hpp"

namespace pob {

struct Pipeline {
  std::optional<PretzelSpec> spec;
  bool mirrored = false;
  StarPlumbing star;
  std::vector<std::string> warnings;
  StarSurface built;
  ProductDiskSystem disks;
  PartialOpenBook pob;
};

Pipeline run_pipeline(const PretzelSpec& spec, bool mirrored);
Pipeline run_pipeline(const StarPlumbing& star);

// 4 boundary sides, no glued pairs.
PolygonPresentation disk_surface();

// "A(+2)", with a proper minus sign for negative twists.
std::string summand_text(int halftwists);
std::string star_text(const StarPlumbing& star);
std::string pretzel_text(const PretzelSpec& spec);

struct ExampleRow {
  std::string example;
  std::size_t product_disks = 0;
  std::vector<Veering> veering;
  ContactClass verdict = ContactClass::Unknown;
  std::optional<bool> sqp;

  bool operator==(const ExampleRow&) const = default;
};

// "pretzel(−3,3,1) | 1 | Right | NonzeroTight | no"
std::string format_row(const ExampleRow& row);
ExampleRow example_row(const std::string& name, const Pipeline& p);

// Pretzel specs (−3, n_2, ..., n_m, 1) with 2 <= m <= max_k and odd
// |n_i| <= range whose decomposition has a negative summand, no zero-twist
// summand and no Hopf summand after the first.
std::vector<PretzelSpec> family_specs(int max_k, int range, bool mirrored);

struct FamilyOptions {
  int max_k = 3;
  int range = 5;
};

struct SuiteResult {
  std::vector<ExampleRow> rows;
  std::vector<ExampleRow> family;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Family rows are computed on `threads` workers and kept in spec order.
std::vector<ExampleRow> sweep_family(const std::vector<PretzelSpec>& specs, bool mirrored, unsigned threads);

SuiteResult run_golden_suite(bool mirrored, const FamilyOptions& family, unsigned threads);

}  // namespace pob
