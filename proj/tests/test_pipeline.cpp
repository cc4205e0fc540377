#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "emotive/error.hpp"
#include "emotive/pipeline.hpp"

using namespace emotive;
namespace fs = std::filesystem;

namespace {

fs::path corpus_manifest() {
  return fs::path(EMOTIVE_TEST_DATA) / "synthetic_corpus" / "manifest.json";
}

RunConfig config_for(const fs::path& manifest, const fs::path& out, unsigned parallelism = 1) {
  RunConfig c;
  c.manifest = manifest;
  c.valence_lexicon = default_valence_lexicon();
  c.affect_lexicon = default_affect_lexicon();
  c.resource_dir = default_resource_dir();
  c.output_dir = out;
  c.parallelism = parallelism;
  return c;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("emotive_pipeline_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const fs::path& stderr_file) {
  const std::string cmd = std::string("\"") + EMOTIVE_CLI + "\" " + args + " >/dev/null 2>\"" +
                          stderr_file.string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* const kExpectedFiles[] = {
    "tables/summary.csv",          "tables/summary.json",          "tables/affect.csv",
    "charts/labour_sentiment.svg", "charts/labour_tja.svg",        "charts/labour_fasd.svg",
    "charts/labour_all.svg",       "charts/conservative_sentiment.svg",
    "charts/conservative_tja.svg", "charts/conservative_fasd.svg", "charts/conservative_all.svg",
    "charts/correlation_heatmap.svg"};

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("twelve-document run writes the full tree") {
  const auto out = scratch("full");
  std::ostringstream so, se;
  REQUIRE(run_analyze(config_for(corpus_manifest(), out), so, se) == 0);
  CHECK(se.str().empty());
  std::size_t lines = 0;
  for (char c : so.str()) lines += c == '\n';
  CHECK(lines == 12);
  CHECK(so.str().rfind("labour,2001,", 0) == 0);
  for (const char* f : kExpectedFiles) {
    CAPTURE(f);
    CHECK(fs::is_regular_file(out / f));
  }
}

TEST_CASE("outputs do not depend on parallelism") {
  const auto a = scratch("p1");
  const auto b = scratch("p8");
  std::ostringstream so1, so8, se;
  REQUIRE(run_analyze(config_for(corpus_manifest(), a, 1), so1, se) == 0);
  REQUIRE(run_analyze(config_for(corpus_manifest(), b, 8), so8, se) == 0);
  CHECK(so1.str() == so8.str());
  for (const char* f : kExpectedFiles) {
    CAPTURE(f);
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("missing text file fails with the path and leaves no output") {
  const auto dir = scratch("missing");
  fs::create_directories(dir);
  std::ofstream(dir / "a.txt") << "A good day. A bad day.";
  std::ofstream(dir / "manifest.json") << R"([
    {"party":"labour","year":2001,"gov_status":"incumbent","path":"a.txt"},
    {"party":"labour","year":2005,"gov_status":"incumbent","path":"b_missing.txt"}])";
  const auto out = dir / "out";
  std::ostringstream so, se;
  CHECK(run_analyze(config_for(dir / "manifest.json", out), so, se) == 1);
  CHECK(se.str().find("b_missing.txt") != std::string::npos);
  CHECK(!fs::exists(out));
}

TEST_CASE("empty document is a processing error naming the file") {
  const auto dir = scratch("emptydoc");
  fs::create_directories(dir);
  std::ofstream(dir / "a.txt") << "A good day.";
  std::ofstream(dir / "b.txt") << "   \n";
  std::ofstream(dir / "c.txt") << "A bad day.";
  std::ofstream(dir / "manifest.json") << R"([
    {"party":"labour","year":2001,"gov_status":"incumbent","path":"a.txt"},
    {"party":"labour","year":2005,"gov_status":"opposition","path":"b.txt"},
    {"party":"labour","year":2010,"gov_status":"opposition","path":"c.txt"}])";
  std::ostringstream so, se;
  CHECK(run_analyze(config_for(dir / "manifest.json", dir / "out", 4), so, se) == 2);
  CHECK(se.str().find("b.txt") != std::string::npos);
  CHECK(so.str().empty());
  CHECK(!fs::exists(dir / "out"));
}

TEST_CASE("write failure removes partial outputs") {
  const auto dir = scratch("rollback");
  fs::create_directories(dir / "out" / "charts");
  // a directory squatting on a file name makes the last write fail
  fs::create_directories(dir / "out" / "tables" / "summary.json");
  std::ostringstream so, se;
  CHECK(run_analyze(config_for(corpus_manifest(), dir / "out"), so, se) == 2);
  CHECK(!fs::exists(dir / "out" / "charts" / "labour_all.svg"));
  CHECK(!fs::exists(dir / "out" / "tables" / "summary.csv"));
}

TEST_CASE("config validation") {
  std::ostringstream so, se;
  auto c = config_for(corpus_manifest(), scratch("cfg"));
  c.parallelism = 0;
  CHECK(run_analyze(c, so, se) == 1);
  c = config_for(corpus_manifest(), scratch("cfg"));
  c.affect_lexicon = "/nonexistent/lexicon.txt";
  CHECK(run_analyze(c, so, se) == 1);
  CHECK(se.str().find("/nonexistent/lexicon.txt") != std::string::npos);
}

TEST_CASE("profile_text") {
  const auto text = TextProcessor::load(default_resource_dir());
  const auto lex = AffectLexicon::load(default_affect_lexicon());
  const auto p = profile_text("We are happy. Happy days!", text, lex);
  CHECK(p.total_hits == 8);
  CHECK(p.frequency(AffectCategory::joy) == 0.25);
  CHECK(profile_text("", text, lex).total_hits == 0);
}

TEST_CASE("CLI exit codes") {
  const auto dir = scratch("cli");
  fs::create_directories(dir);
  const auto err = dir / "stderr.txt";

  CHECK(run_cli("analyze --manifest \"" + corpus_manifest().string() + "\" --out \"" +
                    (dir / "out").string() + "\" --parallelism 3 --format json",
                err) == 0);
  CHECK(fs::is_regular_file(dir / "out" / "charts" / "correlation_heatmap.svg"));

  CHECK(run_cli("analyze --manifest /nonexistent/manifest.json --out \"" + (dir / "x").string() +
                    "\"",
                err) == 1);
  CHECK(slurp(err).find("/nonexistent/manifest.json") != std::string::npos);

  CHECK(run_cli("analyze --manifest m.json", err) == 1);
  CHECK(run_cli("analyze --manifest m.json --out o --boundary-mode sloppy", err) == 1);
  CHECK(run_cli("score good --valence-lexicon /nonexistent/v.txt", err) == 1);
  CHECK(run_cli("affect", err) == 1);
  CHECK(run_cli("affect \"a happy day\"", err) == 0);

  std::ofstream(dir / "run.ini") << "[analyze]\nmanifest=" << corpus_manifest().string()
                                  << "\nout=" << (dir / "from_config").string()
                                  << "\nparallelism=2\n";
  CHECK(run_cli("--config \"" + (dir / "run.ini").string() + "\" analyze --out \"" +
                    (dir / "from_flag").string() + "\"",
                err) == 0);
  CHECK(fs::exists(dir / "from_flag" / "tables" / "summary.csv"));
  CHECK(!fs::exists(dir / "from_config"));
}

}  // TEST_SUITE
