#include "emotive/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "emotive/error.hpp"

namespace emotive {

double round_to(double value, int places) {
  const double scale = std::pow(10.0, places);
  const double p = value * scale;
  double r = std::round(p);
  // The product may have rounded onto a tie the exact value does not reach.
  if (std::fabs(p - std::trunc(p)) == 0.5) {
    const double residual = std::fma(value, scale, -p);
    if (residual != 0.0) r = residual > 0.0 ? std::ceil(p) : std::floor(p);
  }
  r /= scale;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

SentimentShares sentiment_shares(const SentimentCounts& counts) {
  const auto total = counts.total();
  if (total == 0) throw ProcessingError("sentiment shares of an empty count");
  const auto pct = [&](std::size_t n) {
    return round_to(100.0 * static_cast<double>(n) / static_cast<double>(total), 3);
  };
  return {pct(counts.positive), pct(counts.negative), pct(counts.neutral)};
}

std::vector<double> share_change(std::span<const double> shares) {
  if (shares.empty()) throw ProcessingError("share change of an empty series");
  std::vector<double> deltas(shares.size(), 0.0);
  for (std::size_t i = 1; i < shares.size(); ++i) {
    deltas[i] = round_to(shares[i] - shares[i - 1], 2);
  }
  return deltas;
}

std::vector<ElectionRow> build_rows(std::span<const DocumentResult> documents) {
  std::vector<ElectionRow> rows;
  rows.reserve(documents.size());
  for (const auto& d : documents) {
    ElectionRow row;
    row.party = d.party;
    row.year = d.year;
    row.gov_status = d.gov_status;
    row.sentences = d.counts.total();
    row.shares = sentiment_shares(d.counts);
    row.affect = d.affect;
    rows.push_back(std::move(row));
  }

  std::map<std::string, std::vector<std::size_t>> by_party;
  for (std::size_t i = 0; i < rows.size(); ++i) by_party[rows[i].party].push_back(i);
  for (auto& [party, idx] : by_party) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].year < rows[b].year; });
    std::vector<double> pos;
    std::vector<double> neg;
    for (auto i : idx) {
      pos.push_back(rows[i].shares.positive);
      neg.push_back(rows[i].shares.negative);
    }
    const auto dpos = share_change(pos);
    const auto dneg = share_change(neg);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      rows[idx[k]].pos_change = dpos[k];
      rows[idx[k]].neg_change = dneg[k];
    }
  }
  return rows;
}

std::vector<PartySeries> build_series(std::span<const ElectionRow> rows) {
  if (rows.empty()) throw ProcessingError("no rows to build series from");
  std::vector<PartySeries> out;
  std::map<std::string, std::vector<const ElectionRow*>> grouped;
  for (const auto& row : rows) {
    auto [it, fresh] = grouped.try_emplace(row.party);
    if (fresh) {
      out.emplace_back();
      out.back().party = row.party;
    }
    it->second.push_back(&row);
  }
  for (auto& series : out) {
    auto& members = grouped[series.party];
    std::stable_sort(members.begin(), members.end(),
                     [](const ElectionRow* a, const ElectionRow* b) { return a->year < b->year; });
    for (const auto* r : members) {
      series.years.push_back(r->year);
      series.pos_share.push_back(r->shares.positive);
      series.neg_share.push_back(r->shares.negative);
      series.neut_share.push_back(r->shares.neutral);
      for (std::size_t c = 0; c < kAffectCategoryCount; ++c) {
        series.affect[c].push_back(r->affect.frequencies[c]);
      }
    }
    series.pos_change = share_change(series.pos_share);
    series.neg_change = share_change(series.neg_share);
  }
  return out;
}

namespace {

void check_pair(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    throw ProcessingError(std::string(what) + ": length mismatch (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw ProcessingError(std::string(what) + ": need at least two points");
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double covariance(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "covariance");
  const double mx = mean(x);
  const double my = mean(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return s / static_cast<double>(x.size() - 1);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "pearson");
  const double sxx = covariance(x, x);
  const double syy = covariance(y, y);
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    throw ProcessingError("pearson: correlation undefined for a constant vector");
  }
  return std::clamp(covariance(x, y) / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y, "spearman");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationMatrix correlation_matrix(std::span<const ElectionRow> rows) {
  if (rows.size() < 3) throw ProcessingError("correlation matrix needs at least three rows");

  CorrelationMatrix m;
  std::vector<std::vector<double>> columns;
  m.variables.emplace_back("gov_status");
  columns.emplace_back();
  for (const auto& r : rows) columns.back().push_back(status_indicator(r.gov_status));
  for (auto c : kAffectCategories) {
    m.variables.emplace_back(to_string(c));
    columns.emplace_back();
    for (const auto& r : rows) columns.back().push_back(r.affect.frequency(c));
  }

  const std::size_t n = columns.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& col = columns[i];
    if (std::all_of(col.begin(), col.end(), [&](double v) { return v == col.front(); })) {
      throw ProcessingError("correlation matrix: column \"" + m.variables[i] +
                            "\" is constant across all rows");
    }
  }

  m.cells.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m.cells[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = pearson(columns[i], columns[j]);
      m.cells[i * n + j] = r;
      m.cells[j * n + i] = r;
    }
  }
  return m;
}

}  // namespace emotive
