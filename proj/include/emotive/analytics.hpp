#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "emotive/affect.hpp"
#include "emotive/corpus.hpp"
#include "emotive/valence.hpp"

namespace emotive {

/// Round half away from zero to `places` decimals, judged on the exact
/// binary value (64.682 - 70.667 rounds to -5.98).
double round_to(double value, int places);

/// Percentages of sentences per label, each rounded to 3 decimals.
struct SentimentShares {
  double positive = 0.0;
  double negative = 0.0;
  double neutral = 0.0;
};

/// Throws ProcessingError when the counts sum to zero.
SentimentShares sentiment_shares(const SentimentCounts& counts);

/// Percentage-point change from the previous element, rounded to 2
/// decimals; the first element's change is 0. Throws on empty input.
std::vector<double> share_change(std::span<const double> shares);

/// Everything the pipeline knows about one manifesto.
struct DocumentResult {
  std::string party;
  int year = 0;
  GovStatus gov_status = GovStatus::opposition;
  SentimentCounts counts;
  AffectProfile affect;
};

/// One row of the per-election summary table.
struct ElectionRow {
  std::string party;
  int year = 0;
  GovStatus gov_status = GovStatus::opposition;
  std::size_t sentences = 0;
  SentimentShares shares;
  double pos_change = 0.0;
  double neg_change = 0.0;
  AffectProfile affect;
};

/// Shares and inter-election changes for each document. Output keeps the
/// input order; changes are taken year-over-year within each party.
std::vector<ElectionRow> build_rows(std::span<const DocumentResult> documents);

/// Year-ascending series for one party.
struct PartySeries {
  std::string party;
  std::vector<int> years;
  std::vector<double> pos_share;
  std::vector<double> neg_share;
  std::vector<double> neut_share;
  std::vector<double> pos_change;
  std::vector<double> neg_change;
  std::array<std::vector<double>, kAffectCategoryCount> affect;  // by kAffectCategories

  const std::vector<double>& affect_series(AffectCategory c) const {
    return affect[static_cast<std::size_t>(c)];
  }
};

/// Groups rows by party, in order of each party's first appearance.
/// Throws ProcessingError on empty input.
std::vector<PartySeries> build_series(std::span<const ElectionRow> rows);

/// Sample covariance with n - 1 normalization.
double covariance(std::span<const double> x, std::span<const double> y);

/// Pearson product-moment correlation. Throws ProcessingError on length
/// mismatch, fewer than two points, or a constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of average ranks (ties share their mean rank).
double spearman(std::span<const double> x, std::span<const double> y);

/// Incumbent = 1, opposition = 0.
inline double status_indicator(GovStatus s) { return s == GovStatus::incumbent ? 1.0 : 0.0; }

struct CorrelationMatrix {
  std::vector<std::string> variables;
  std::vector<double> cells;  // row-major, variables.size()^2

  std::size_t size() const { return variables.size(); }
  double at(std::size_t i, std::size_t j) const { return cells[i * variables.size() + j]; }
};

/// Pooled correlations between gov_status and the ten affect frequencies.
/// Needs at least three rows covering both statuses.
CorrelationMatrix correlation_matrix(std::span<const ElectionRow> rows);

}  // namespace emotive
