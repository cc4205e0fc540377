#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "emotive/analytics.hpp"
#include "emotive/error.hpp"
#include "table_fixture.hpp"

using namespace emotive;

namespace {

// r_pb = (M1 - M0) / s * sqrt(p q), s the population standard deviation.
double point_biserial(const std::vector<double>& x, const std::vector<int>& group) {
  double m1 = 0, m0 = 0, mean = 0;
  int n1 = 0, n0 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean += x[i];
    if (group[i]) { m1 += x[i]; ++n1; } else { m0 += x[i]; ++n0; }
  }
  const double n = static_cast<double>(x.size());
  mean /= n;
  m1 /= n1;
  m0 /= n0;
  double ss = 0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double s = std::sqrt(ss / n);
  return (m1 - m0) / s * std::sqrt(n1 / n * n0 / n);
}

ElectionRow row(std::string party, int year, GovStatus s, std::vector<double> freqs) {
  ElectionRow r;
  r.party = std::move(party);
  r.year = year;
  r.gov_status = s;
  for (std::size_t i = 0; i < freqs.size(); ++i) r.affect.frequencies[i] = freqs[i];
  return r;
}

}  // namespace

TEST_SUITE("analytics") {

TEST_CASE("sentiment_shares") {
  auto s = sentiment_shares({2, 1, 1});
  CHECK(s.positive == 50.0);
  CHECK(s.negative == 25.0);
  CHECK(s.neutral == 25.0);

  s = sentiment_shares({612, 157, 208});
  CHECK(s.positive == doctest::Approx(62.641).epsilon(1e-12));
  CHECK(s.negative == doctest::Approx(16.070).epsilon(1e-12));
  CHECK(s.neutral == doctest::Approx(21.290).epsilon(1e-12));

  s = sentiment_shares({214, 38, 31});
  CHECK(s.positive == doctest::Approx(75.618).epsilon(1e-12));
  CHECK(s.negative == doctest::Approx(13.428).epsilon(1e-12));
  CHECK(s.neutral == doctest::Approx(10.954).epsilon(1e-12));

  CHECK_THROWS_AS(sentiment_shares({0, 0, 0}), ProcessingError);
}

TEST_CASE("shares sum to 100") {
  std::mt19937 rng(1);
  for (int t = 0; t < 1000; ++t) {
    SentimentCounts c{rng() % 2000, rng() % 2000, rng() % 2000};
    if (c.total() == 0) continue;
    const auto s = sentiment_shares(c);
    CHECK(std::fabs(s.positive + s.negative + s.neutral - 100.0) <= 0.01);
  }
}

TEST_CASE("share_change") {
  CHECK(share_change(std::vector<double>{62.641}) == std::vector<double>{0.0});
  const auto d = share_change(std::vector<double>{62.641, 63.92});
  CHECK(d[0] == 0.0);
  CHECK(d[1] == doctest::Approx(1.28).epsilon(1e-12));
  CHECK(share_change(std::vector<double>{16.07, 19.725})[1] == doctest::Approx(3.66).epsilon(1e-12));
  CHECK_THROWS_AS(share_change(std::vector<double>{}), ProcessingError);
}

TEST_CASE("share_change detects translation") {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0, 100);
  for (int t = 0; t < 200; ++t) {
    const double k = u(rng);
    const std::vector<double> flat(6, k);
    for (double v : share_change(flat)) CHECK(v == 0.0);
  }
}

TEST_CASE("round_to") {
  CHECK(round_to(0.125, 2) == 0.13);  // exact tie
  CHECK(round_to(3.655, 2) == 3.65);   // stored just below the tie
  CHECK(round_to(-0.0004, 3) == 0.0);
  CHECK(!std::signbit(round_to(-0.0004, 3)));
  CHECK(round_to(-2.5, 0) == -3.0);
  CHECK(round_to(64.682 - 70.667, 2) == -5.98);
  CHECK(round_to(19.725 - 16.07, 2) == 3.66);
}

TEST_CASE("build_rows and build_series") {
  std::vector<DocumentResult> docs;
  for (const auto& t : fixture::kTables) {
    DocumentResult d;
    d.party = std::string(t.party);
    d.year = t.year;
    d.gov_status = t.status;
    d.counts = {static_cast<std::size_t>(std::lround(t.pos_share * t.sentences / 100.0)),
                static_cast<std::size_t>(std::lround(t.neg_share * t.sentences / 100.0)),
                static_cast<std::size_t>(std::lround(t.neut_share * t.sentences / 100.0))};
    docs.push_back(d);
  }
  const auto rows = build_rows(docs);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0].sentences == 977);
  CHECK(rows[1].pos_change == doctest::Approx(1.28));
  CHECK(rows[6].pos_change == 0.0);

  const auto series = build_series(rows);
  REQUIRE(series.size() == 2);
  CHECK(series[0].party == "labour");
  CHECK(series[0].years.size() == 6);
  CHECK(series[1].years == std::vector<int>{2001, 2005, 2010, 2015, 2017, 2019});
  for (const auto& s : series) {
    for (const auto& a : s.affect) CHECK(a.size() == 6);
  }

  const auto single = build_series(std::span(rows).subspan(0, 1));
  REQUIRE(single.size() == 1);
  CHECK(single[0].pos_change == std::vector<double>{0.0});
  CHECK_THROWS_AS(build_series({}), ProcessingError);
}

TEST_CASE("build_rows sorts changes by year within a party") {
  std::vector<DocumentResult> docs(2);
  docs[0].party = docs[1].party = "x";
  docs[0].year = 2010;
  docs[0].counts = {3, 1, 0};
  docs[1].year = 2005;
  docs[1].counts = {1, 1, 0};
  const auto rows = build_rows(docs);
  CHECK(rows[0].year == 2010);
  CHECK(rows[0].pos_change == 25.0);
  CHECK(rows[1].pos_change == 0.0);
}

TEST_CASE("pearson") {
  const std::vector<double> a{1, 2, 3}, b{2, 4, 6}, c{3, 2, 1};
  CHECK(pearson(a, b) == doctest::Approx(1.0));
  CHECK(pearson(a, c) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(pearson(a, std::vector<double>{1, 2}), ProcessingError);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}), ProcessingError);
  CHECK_THROWS_AS(pearson(a, std::vector<double>{5, 5, 5}), ProcessingError);
  CHECK(covariance(a, b) == doctest::Approx(2.0));
}

TEST_CASE("pearson properties") {
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-10, 10);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> x(3 + rng() % 20), y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = g(rng);
      y[i] = 0.5 * x[i] + g(rng);
    }
    const double r = pearson(x, y);
    CHECK(r >= -1.0);
    CHECK(r <= 1.0);
    CHECK(pearson(y, x) == doctest::Approx(r).epsilon(1e-12));
    double a = u(rng);
    if (std::fabs(a) < 1e-3) a = 1.0;
    const double b = u(rng);
    std::vector<double> ax(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ax[i] = a * x[i] + b;
    CHECK(pearson(ax, y) == doctest::Approx((a > 0 ? 1 : -1) * r).epsilon(1e-9));
  }
}

TEST_CASE("spearman uses average ranks") {
  const std::vector<double> x{1, 2, 2, 3}, y{10, 20, 20, 30};
  CHECK(spearman(x, y) == doctest::Approx(1.0));
  const std::vector<double> z{1, 4, 9, 16, 25};
  const std::vector<double> w{1, 2, 3, 4, 5};
  CHECK(spearman(z, w) == doctest::Approx(1.0));
}

TEST_CASE("point-biserial correlations on the published tables") {
  std::vector<double> pos, neg, status;
  std::vector<int> group;
  for (const auto& t : fixture::kTables) {
    pos.push_back(t.pos_share);
    neg.push_back(t.neg_share);
    status.push_back(status_indicator(t.status));
    group.push_back(t.status == GovStatus::incumbent);
  }
  const double rp = pearson(pos, status);
  const double rn = pearson(neg, status);
  CHECK(rp == doctest::Approx(point_biserial(pos, group)).epsilon(1e-12));
  CHECK(rn == doctest::Approx(point_biserial(neg, group)).epsilon(1e-12));
  CHECK(rp == doctest::Approx(0.84).epsilon(0.01));
  CHECK(rn == doctest::Approx(-0.84).epsilon(0.01));
}

TEST_CASE("correlation_matrix") {
  std::vector<ElectionRow> rows;
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0, 0.3);
  for (int i = 0; i < 8; ++i) {
    std::vector<double> f(10);
    for (auto& v : f) v = u(rng);
    f[0] += (i % 2) * 0.2;
    f[1] += (1 - i % 2) * 0.2;
    rows.push_back(row("p", 2000 + i, i % 2 ? GovStatus::incumbent : GovStatus::opposition, f));
  }
  const auto m = correlation_matrix(rows);
  REQUIRE(m.size() == 11);
  CHECK(m.variables[0] == "gov_status");
  CHECK(m.variables[1] == "positive");
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(m.at(i, i) == 1.0);
    for (std::size_t j = 0; j < m.size(); ++j) {
      CHECK(m.at(i, j) == m.at(j, i));
      CHECK(std::fabs(m.at(i, j)) <= 1.0);
    }
  }
  CHECK(m.at(0, 1) > 0.0);
  CHECK(m.at(0, 2) < 0.0);

  CHECK_THROWS_AS(correlation_matrix(std::span(rows).subspan(0, 2)), ProcessingError);
  for (auto& r : rows) r.gov_status = GovStatus::incumbent;
  CHECK_THROWS_WITH_AS(correlation_matrix(rows), doctest::Contains("gov_status"), ProcessingError);
}

}  // TEST_SUITE
