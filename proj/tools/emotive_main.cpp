// emotive: sentiment and emotion analytics over a manifesto corpus.
//
//   emotive analyze --manifest corpus/manifest.json --out results
//   emotive score "The economy is doing VERY well!"
//   emotive affect --file speech.txt

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emotive/error.hpp"
#include "emotive/pipeline.hpp"

namespace {

using namespace emotive;

int run_score(const std::string& sentence, const std::string& lexicon_path,
              const std::optional<std::string>& constants_path, BoundaryMode mode) {
  ValenceConstants constants;
  if (constants_path) constants = load_valence_constants(*constants_path);
  constants.boundary_mode = mode;
  const auto lexicon = ValenceLexicon::load(lexicon_path);
  const ValenceScorer scorer(lexicon, constants);
  const auto s = scorer.score(sentence);
  std::printf("%.4f %s\n", round_to(s.compound, 4), std::string(to_string(s.label)).c_str());
  return 0;
}

int run_affect(const std::optional<std::string>& text, const std::optional<std::string>& file,
               const std::string& lexicon_path, const std::string& resource_dir) {
  if (text.has_value() == file.has_value()) {
    throw InputError("affect needs exactly one of TEXT or --file");
  }
  const std::string input = file ? read_file(*file) : *text;
  const auto processor = TextProcessor::load(resource_dir);
  const auto lexicon = AffectLexicon::load(lexicon_path);
  const auto profile = profile_text(input, processor, lexicon);
  std::printf("total_hits %llu\n", static_cast<unsigned long long>(profile.total_hits));
  for (auto c : kAffectCategories) {
    std::printf("%s %.6f\n", std::string(to_string(c)).c_str(), profile.frequency(c));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentiment and emotion analytics for political manifesto corpora"};
  app.set_config("--config", "", "INI/TOML file with option defaults; flags take precedence");
  app.require_subcommand(1);

  RunConfig config;
  config.valence_lexicon = default_valence_lexicon();
  config.affect_lexicon = default_affect_lexicon();
  config.resource_dir = default_resource_dir();
  std::string manifest, out, valence_lexicon = config.valence_lexicon.string(),
                             affect_lexicon = config.affect_lexicon.string(),
                             resource_dir = config.resource_dir.string();
  std::optional<std::string> constants_path;
  std::string boundary_mode = "strict_paper";
  std::string format = "csv";
  unsigned parallelism = 1;

  auto* analyze = app.add_subcommand("analyze", "Run the full corpus pipeline");
  analyze->add_option("--manifest", manifest, "Corpus manifest (JSON)")->required();
  analyze->add_option("--out", out, "Output directory")->required();
  analyze->add_option("--valence-lexicon", valence_lexicon, "Valence lexicon")
      ->capture_default_str();
  analyze->add_option("--affect-lexicon", affect_lexicon, "Affect lexicon")->capture_default_str();
  analyze->add_option("--resource-dir", resource_dir, "Abbreviation, lemma and Unicode tables")
      ->capture_default_str();
  analyze->add_option("--valence-constants", constants_path, "Scorer constants (key<TAB>value)");
  analyze->add_option("--boundary-mode", boundary_mode, "strict_paper|inclusive_reference")
      ->check(CLI::IsMember({"strict_paper", "inclusive_reference"}));
  analyze->add_option("--parallelism", parallelism, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  analyze->add_option("--format", format, "Summary line format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string sentence;
  auto* score = app.add_subcommand("score", "Score one sentence");
  score->add_option("sentence", sentence, "Sentence to score")->required();
  score->add_option("--valence-lexicon", valence_lexicon, "Valence lexicon")->capture_default_str();
  score->add_option("--valence-constants", constants_path, "Scorer constants (key<TAB>value)");
  score->add_option("--boundary-mode", boundary_mode, "strict_paper|inclusive_reference")
      ->check(CLI::IsMember({"strict_paper", "inclusive_reference"}));

  std::optional<std::string> text, file;
  auto* affect = app.add_subcommand("affect", "Affect profile of one text");
  affect->add_option("text", text, "Text to profile");
  affect->add_option("--file", file, "Read the text from a file");
  affect->add_option("--affect-lexicon", affect_lexicon, "Affect lexicon")->capture_default_str();
  affect->add_option("--resource-dir", resource_dir, "Abbreviation, lemma and Unicode tables")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      config.manifest = manifest;
      config.output_dir = out;
      config.valence_lexicon = valence_lexicon;
      config.affect_lexicon = affect_lexicon;
      config.resource_dir = resource_dir;
      if (constants_path) config.valence_constants = *constants_path;
      config.boundary_mode = parse_boundary_mode(boundary_mode);
      config.parallelism = parallelism;
      config.format = parse_table_format(format);
      return run_analyze(config, std::cout, std::cerr);
    }
    if (*score) {
      return run_score(sentence, valence_lexicon, constants_path,
                       parse_boundary_mode(boundary_mode));
    }
    return run_affect(text, file, affect_lexicon, resource_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
