#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emotive/affect.hpp"
#include "emotive/analytics.hpp"
#include "emotive/corpus.hpp"
#include "emotive/report.hpp"
#include "emotive/valence.hpp"

namespace emotive {

struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path valence_lexicon;
  std::filesystem::path affect_lexicon;
  std::filesystem::path resource_dir;
  std::optional<std::filesystem::path> valence_constants;
  std::filesystem::path output_dir;
  BoundaryMode boundary_mode = BoundaryMode::strict_paper;
  unsigned parallelism = 1;
  TableFormat format = TableFormat::csv;
};

/// Bundled defaults under the data directory the build was configured with.
std::filesystem::path default_data_dir();
std::filesystem::path default_valence_lexicon();
std::filesystem::path default_affect_lexicon();
std::filesystem::path default_resource_dir();

/// Throws InputError unless every input path is readable and parallelism > 0.
void validate(const RunConfig& config);

/// Read-only state shared by all workers.
struct Resources {
  ValenceLexicon valence;
  AffectLexicon affect;
  TextProcessor text;
  ValenceConstants constants;

  static Resources load(const RunConfig& config);
};

DocumentResult analyze_document(const ManifestEntry& entry, const Resources& resources,
                                const ValenceScorer& scorer);

/// Affect profile of free text: cleaned, segmented, lemmatized, counted.
AffectProfile profile_text(std::string_view text, const TextProcessor& processor,
                           const AffectLexicon& lexicon);

struct AnalysisOutput {
  std::vector<ElectionRow> rows;                            // manifest order
  std::map<std::filesystem::path, std::string> files;       // relative to output_dir
};

/// Runs every document on a pool of `parallelism` workers and renders all
/// tables and charts in memory. Results are merged in manifest order.
AnalysisOutput run_pipeline(const RunConfig& config, const Resources& resources,
                            const CorpusManifest& manifest);

/// Writes files under dir. On failure everything written so far is removed
/// and ProcessingError is thrown.
void write_outputs(const std::filesystem::path& dir,
                   const std::map<std::filesystem::path, std::string>& files);

/// One line per document, in the requested format.
std::string summary_lines(std::span<const ElectionRow> rows, TableFormat format);

/// Full `analyze` run. Returns the process exit status; diagnostics go to err.
int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace emotive
