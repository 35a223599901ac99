#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spg/factory.hpp"
#include "spg/io.hpp"
#include "spg/rational.hpp"

namespace spg {

struct ReportRow {
  std::string family;
  std::string params;
  std::string notion;
  Rational alpha{1};
  std::size_t k = 1;
  std::optional<Rational> measured;
  std::string bound_formula;
  std::optional<Interval> bound;
  std::optional<Rational> expected;
  bool satisfied = false;
  double seconds = 0;
  std::string note;
};

/// Seeded random explicit instances with 1..max_players players and
/// 1..max_items items, weights in 1..8.
std::vector<GeneratorSpec> random_corpus(std::size_t count, unsigned max_players,
                                         unsigned max_items, std::uint64_t seed);

/// Bound reproduction rows for the constructed families, the bound formulas
/// and the random-corpus properties. Each row runs under its own budget.
std::vector<ReportRow> run_paper_suite();

std::string rows_to_tsv(const std::vector<ReportRow>& rows);
Json rows_to_json(const std::vector<ReportRow>& rows);

}  // namespace spg
