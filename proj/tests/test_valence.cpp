#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emotive/error.hpp"
#include "emotive/pipeline.hpp"
#include "emotive/valence.hpp"

using namespace emotive;

namespace {

const ValenceLexicon& lexicon() {
  static const ValenceLexicon lex = ValenceLexicon::load(default_valence_lexicon());
  return lex;
}

// Mean column for a token, read directly from the lexicon file.
double file_mean(const std::string& token) {
  std::ifstream f(default_valence_lexicon());
  std::string line;
  while (std::getline(f, line)) {
    if (line.rfind(token + "\t", 0) == 0) return std::stod(line.substr(token.size() + 1));
  }
  return NAN;
}

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> cols;
  std::stringstream ss(line);
  std::string c;
  while (std::getline(ss, c, '\t')) cols.push_back(c);
  return cols;
}

}  // namespace

TEST_SUITE("valence") {

TEST_CASE("lexicon parsing") {
  const auto lex = ValenceLexicon::parse("good\t1.9\t0.9\t[2, 2, 3, 1, 2, 2, 2, 1, 2, 2]\n");
  REQUIRE(lex.find("good"));
  CHECK(*lex.find("good") == doctest::Approx(1.9));
  CHECK(!lex.find("bad"));
  CHECK_THROWS_WITH_AS(ValenceLexicon::parse(""), doctest::Contains("empty lexicon"), InputError);
  CHECK_THROWS_AS(ValenceLexicon::parse("good\t9.5\t0.9\t[2]\n"), InputError);
  CHECK_THROWS_AS(ValenceLexicon::parse("good\tabc\t0.9\t[2]\n"), InputError);
  CHECK_THROWS_AS(ValenceLexicon::parse("good\t1.9\n"), InputError);
}

TEST_CASE("shipped lexicon matches its file") {
  CHECK(lexicon().size() > 7000);
  for (const char* w : {"good", "bad", "hope", "crisis", "great", ":)"}) {
    CAPTURE(w);
    REQUIRE(lexicon().find(w));
    CHECK(*lexicon().find(w) == file_mean(w));
  }
  CHECK(*lexicon().find("good") == 1.9);
}

TEST_CASE("token_valences") {
  const ValenceScorer scorer(lexicon());
  auto tv = [&](std::vector<std::string> words) { return scorer.token_valences(words); };
  CHECK(tv({"good"})[0] == doctest::Approx(1.9));
  CHECK(tv({"very", "good"})[1] == doctest::Approx(1.9 + 0.293));
  CHECK(tv({"very", "good"})[0] == 0.0);
  CHECK(tv({"not", "good"})[1] == doctest::Approx(1.9 * -0.74));
  CHECK(tv({"GOOD", "day"})[0] == doctest::Approx(1.9 + 0.733));
  CHECK(tv({"good", "but", "bad"})[0] == doctest::Approx(1.9 * 0.5));
  CHECK(tv({"good", "but", "bad"})[2] == doctest::Approx(-2.5 * 1.5));
  CHECK(tv({}).empty());
}

TEST_CASE("normalize_score closed form") {
  CHECK(normalize_score(0.0) == 0.0);
  CHECK(normalize_score(1.9) == doctest::Approx(1.9 / std::sqrt(1.9 * 1.9 + 15.0)).epsilon(1e-12));
  CHECK(round(normalize_score(1.9) * 1e4) / 1e4 == doctest::Approx(0.4404));
  CHECK(round(normalize_score(-1.406) * 1e4) / 1e4 == doctest::Approx(-0.3412));
  CHECK(normalize_score(1e12) <= 1.0);
  CHECK(normalize_score(-1e12) >= -1.0);
}

TEST_CASE("classify") {
  CHECK(classify(0.06) == SentimentLabel::positive);
  CHECK(classify(0.05) == SentimentLabel::neutral);
  CHECK(classify(-0.05) == SentimentLabel::neutral);
  CHECK(classify(-0.051) == SentimentLabel::negative);
  CHECK(classify(0.05, BoundaryMode::inclusive_reference) == SentimentLabel::positive);
  CHECK(classify(-0.05, BoundaryMode::inclusive_reference) == SentimentLabel::negative);
  CHECK(classify(0.0, BoundaryMode::inclusive_reference) == SentimentLabel::neutral);
  CHECK(parse_boundary_mode("strict_paper") == BoundaryMode::strict_paper);
  CHECK_THROWS_AS(parse_boundary_mode("loose"), InputError);
}

TEST_CASE("score") {
  const ValenceScorer scorer(lexicon());
  CHECK(scorer.score("").compound == 0.0);
  CHECK(scorer.score("").label == SentimentLabel::neutral);
  CHECK(scorer.score("good").compound == doctest::Approx(0.44043357076016854).epsilon(1e-12));
  CHECK(scorer.score("not good").compound == doctest::Approx(-0.3412376512543242).epsilon(1e-12));
  CHECK(scorer.score("very good").compound == doctest::Approx(0.4927250317396701).epsilon(1e-12));
  CHECK(scorer.score("VERY good stuff").compound ==
        doctest::Approx(0.6027997661972946).epsilon(1e-12));
  CHECK(scorer.score("good!!!").compound > scorer.score("good").compound);
  CHECK(scorer.punctuation_emphasis("!!!!!!") == doctest::Approx(4 * 0.292));
  CHECK(scorer.punctuation_emphasis("??") == doctest::Approx(0.36));
  CHECK(scorer.punctuation_emphasis("????") == doctest::Approx(0.96));
}

TEST_CASE("scores match the reference on the bundled suite") {
  ValenceConstants c;
  c.boundary_mode = BoundaryMode::inclusive_reference;
  const ValenceScorer scorer(lexicon(), c);
  std::ifstream f(std::string(EMOTIVE_TEST_DATA) + "/valence_suite.tsv");
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    const auto cols = split_tsv(line);
    REQUIRE(cols.size() == 3);
    CAPTURE(cols[0]);
    const auto s = scorer.score(cols[0]);
    CHECK(std::fabs(s.compound - std::stod(cols[1])) < 1e-4);
    CHECK(to_string(s.label) == cols[2]);
    ++n;
  }
  CHECK(n == 100);
}

TEST_CASE("word segmentation matches the reference on hyphenated phrases") {
  std::ifstream f(std::string(EMOTIVE_TEST_DATA) + "/hyphen_words.tsv");
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    const auto cols = split_tsv(line);
    REQUIRE(cols.size() == 2);
    CAPTURE(cols[0]);
    std::vector<std::string> expected;
    std::stringstream ss(cols[1]);
    for (std::string w; ss >> w;) expected.push_back(w);
    CHECK(valence_words(cols[0]) == expected);
    ++n;
  }
  CHECK(n == 50);
}

TEST_CASE("shipped constants equal the built-in defaults") {
  CHECK(load_valence_constants(default_resource_dir() / "valence_constants.tsv") ==
        ValenceConstants{});
}

TEST_CASE("analyze_document_sentiment") {
  const ValenceScorer scorer(lexicon());
  DocumentRecord doc{"labour", 2001, GovStatus::incumbent,
                     {"This is good.", "A great plan.", "A terrible failure.", "The table."}};
  CHECK(analyze_document_sentiment(doc, scorer) == SentimentCounts{2, 1, 1});
  doc.sentences = {"Parliament meets on Tuesday."};
  CHECK(analyze_document_sentiment(doc, scorer) == SentimentCounts{0, 0, 1});
  doc.sentences.clear();
  CHECK_THROWS_AS(analyze_document_sentiment(doc, scorer), ProcessingError);
}

}  // TEST_SUITE
