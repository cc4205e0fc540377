#include "emotive/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "emotive/error.hpp"

namespace fs = std::filesystem;

namespace emotive {

fs::path default_data_dir() { return fs::path(EMOTIVE_DATA_DIR); }
fs::path default_valence_lexicon() { return default_data_dir() / "lexicons" / "vader_lexicon.txt"; }
fs::path default_affect_lexicon() {
  return default_data_dir() / "lexicons" / "nrc_emotion_lexicon.txt";
}
fs::path default_resource_dir() { return default_data_dir() / "resources"; }

namespace {

void require_file(const fs::path& path, const char* what) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw InputError(std::string(what) + " not found: " + path.string());
  }
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw InputError(std::string(what) + " is not readable: " + path.string());
}

std::string share(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

void validate(const RunConfig& config) {
  require_file(config.manifest, "manifest");
  require_file(config.valence_lexicon, "valence lexicon");
  require_file(config.affect_lexicon, "affect lexicon");
  if (config.valence_constants) require_file(*config.valence_constants, "valence constants");
  std::error_code ec;
  if (!fs::is_directory(config.resource_dir, ec)) {
    throw InputError("resource directory not found: " + config.resource_dir.string());
  }
  for (const char* name : {"abbreviations.txt", "lemma_table.tsv", "unicode_map.tsv"}) {
    require_file(config.resource_dir / name, "resource file");
  }
  if (config.output_dir.empty()) throw InputError("output directory not set");
  if (config.parallelism == 0) throw InputError("parallelism must be a positive integer");
}

Resources Resources::load(const RunConfig& config) {
  ValenceConstants constants;
  if (config.valence_constants) constants = load_valence_constants(*config.valence_constants);
  constants.boundary_mode = config.boundary_mode;
  return Resources{ValenceLexicon::load(config.valence_lexicon),
                   AffectLexicon::load(config.affect_lexicon),
                   TextProcessor::load(config.resource_dir), constants};
}

DocumentResult analyze_document(const ManifestEntry& entry, const Resources& resources,
                                const ValenceScorer& scorer) {
  const auto doc = load_document(entry, resources.text);
  DocumentResult result;
  result.party = doc.party;
  result.year = doc.year;
  result.gov_status = doc.gov_status;
  try {
    result.counts = analyze_document_sentiment(doc, scorer);
  } catch (const ProcessingError& e) {
    throw ProcessingError(std::string(e.what()) + " (" + entry.path.string() + ")");
  }
  AffectCounts counts{};
  for (const auto& sentence : doc.sentences) {
    const auto lemmas = resources.text.normalize_for_affect(sentence);
    const auto c = affect_counts(lemmas, resources.affect);
    for (std::size_t i = 0; i < kAffectCategoryCount; ++i) counts[i] += c[i];
  }
  result.affect = affect_frequencies(counts);
  return result;
}

AffectProfile profile_text(std::string_view text, const TextProcessor& processor,
                           const AffectLexicon& lexicon) {
  AffectCounts counts{};
  for (const auto& sentence : processor.split_sentences(processor.clean_text(text))) {
    const auto c = affect_counts(processor.normalize_for_affect(sentence), lexicon);
    for (std::size_t i = 0; i < kAffectCategoryCount; ++i) counts[i] += c[i];
  }
  return affect_frequencies(counts);
}

AnalysisOutput run_pipeline(const RunConfig& config, const Resources& resources,
                            const CorpusManifest& manifest) {
  const auto& entries = manifest.entries;
  const ValenceScorer scorer(resources.valence, resources.constants);

  std::vector<std::optional<DocumentResult>> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        results[i] = analyze_document(entries[i], resources, scorer);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(config.parallelism, entries.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);  // first failure in manifest order
  }

  std::vector<DocumentResult> documents;
  documents.reserve(results.size());
  for (auto& r : results) documents.push_back(std::move(*r));

  AnalysisOutput out;
  out.rows = build_rows(documents);
  out.files[fs::path("tables") / "summary.csv"] = emit_table(out.rows, TableFormat::csv);
  out.files[fs::path("tables") / "summary.json"] = emit_table(out.rows, TableFormat::json);
  out.files[fs::path("tables") / "affect.csv"] = emit_affect_table(out.rows);
  for (const auto& series : build_series(out.rows)) {
    for (auto group : {ChartGroup::sentiment, ChartGroup::tja, ChartGroup::fasd, ChartGroup::all}) {
      const auto name = series.party + "_" + std::string(to_string(group)) + ".svg";
      out.files[fs::path("charts") / name] = render_line_chart(make_affect_chart(series, group));
    }
  }
  out.files[fs::path("charts") / "correlation_heatmap.svg"] =
      render_heatmap(correlation_matrix(out.rows));
  return out;
}

void write_outputs(const fs::path& dir, const std::map<fs::path, std::string>& files) {
  std::vector<fs::path> created_dirs;
  std::vector<fs::path> written;
  auto make_dirs = [&](const fs::path& p) {
    std::vector<fs::path> missing;
    for (auto q = p; !q.empty() && !fs::exists(q); q = q.parent_path()) {
      missing.push_back(q);
      if (q == q.parent_path()) break;
    }
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
      if (!fs::create_directory(*it) && !fs::is_directory(*it)) {
        throw ProcessingError("cannot create directory " + it->string());
      }
      created_dirs.push_back(*it);
    }
  };
  try {
    make_dirs(dir);
    for (const auto& [rel, content] : files) {
      const auto path = dir / rel;
      make_dirs(path.parent_path());
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      if (!f) throw ProcessingError("cannot write " + path.string());
      written.push_back(path);
      f.write(content.data(), static_cast<std::streamsize>(content.size()));
      f.close();
      if (!f) throw ProcessingError("failed writing " + path.string());
    }
  } catch (const std::exception& e) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    for (auto it = created_dirs.rbegin(); it != created_dirs.rend(); ++it) fs::remove(*it, ec);
    if (dynamic_cast<const ProcessingError*>(&e)) throw;
    throw ProcessingError(std::string("writing outputs failed: ") + e.what());
  }
}

std::string summary_lines(std::span<const ElectionRow> rows, TableFormat format) {
  std::string out;
  for (const auto& r : rows) {
    if (format == TableFormat::json) {
      nlohmann::ordered_json j;
      j["party"] = r.party;
      j["year"] = r.year;
      j["sentences"] = r.sentences;
      j["pos_share"] = r.shares.positive;
      j["neg_share"] = r.shares.negative;
      j["neut_share"] = r.shares.neutral;
      out += j.dump();
    } else {
      out += r.party + "," + std::to_string(r.year) + "," + std::to_string(r.sentences) + "," +
             share(r.shares.positive) + "," + share(r.shares.negative) + "," +
             share(r.shares.neutral);
    }
    out += "\n";
  }
  return out;
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const auto manifest = load_manifest(config.manifest);
    const auto resources = Resources::load(config);
    const auto result = run_pipeline(config, resources, manifest);
    write_outputs(config.output_dir, result.files);
    out << summary_lines(result.rows, config.format) << std::flush;
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ProcessingError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace emotive
