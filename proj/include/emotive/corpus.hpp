#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace emotive {

enum class GovStatus { incumbent, opposition };

std::string_view to_string(GovStatus status);
GovStatus parse_gov_status(std::string_view text);  // throws InputError

struct ManifestEntry {
  std::string party;
  int year = 0;
  GovStatus gov_status = GovStatus::opposition;
  std::filesystem::path path;  // resolved against the manifest's directory
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

/// Reads and validates a JSON corpus manifest. Relative text paths are
/// resolved against the directory holding the manifest, and every
/// referenced file must exist.
CorpusManifest load_manifest(const std::filesystem::path& path);

/// Same validation on manifest text already in memory.
CorpusManifest parse_manifest(std::string_view json_text,
                              const std::filesystem::path& base_dir);

struct DocumentRecord {
  std::string party;
  int year = 0;
  GovStatus gov_status = GovStatus::opposition;
  std::vector<std::string> sentences;
};

/// Code point -> replacement text, loaded from "codepoint<TAB>replacement"
/// lines. Code points are hex, optionally prefixed with "U+". The
/// replacement accepts the escapes \s (space), \t and \\; an empty
/// replacement deletes the character.
class UnicodeMap {
 public:
  static UnicodeMap load(const std::filesystem::path& path);
  static UnicodeMap parse(std::string_view text);

  const std::string* find(char32_t cp) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<char32_t, std::string> map_;
};

/// Cleaning, segmentation and lemmatization backed by the three bundled
/// resource tables. Immutable after construction; safe to share across
/// threads.
class TextProcessor {
 public:
  /// Loads abbreviations.txt, lemma_table.tsv and unicode_map.tsv from dir.
  static TextProcessor load(const std::filesystem::path& resource_dir);

  TextProcessor(UnicodeMap unicode_map,
                std::vector<std::string> abbreviations,
                std::unordered_map<std::string, std::string> lemmas);

  std::string clean_text(std::string_view raw) const;
  std::vector<std::string> split_sentences(std::string_view text) const;
  std::string lemmatize(std::string_view token) const;
  std::vector<std::string> normalize_for_affect(std::string_view sentence) const;

  bool is_abbreviation(std::string_view word) const;
  std::size_t lemma_table_size() const { return lemmas_.size(); }

 private:
  UnicodeMap unicode_map_;
  std::unordered_set<std::string> abbreviations_;  // lower-cased
  std::unordered_map<std::string, std::string> lemmas_;
};

/// Letters, digits and word-internal apostrophes form word tokens; every
/// other non-space character is its own single-character token. Bytes of
/// multi-byte UTF-8 sequences count as letters.
std::vector<std::string> tokenize(std::string_view sentence);

/// Suffix rules applied when a word is absent from the lemma table.
std::string fallback_lemma(std::string_view word);

std::vector<std::string> load_abbreviations(const std::filesystem::path& path);
std::unordered_map<std::string, std::string> load_lemma_table(
    const std::filesystem::path& path);

/// Reads, cleans and segments one manifesto text.
DocumentRecord load_document(const ManifestEntry& entry, const TextProcessor& text);

std::string read_file(const std::filesystem::path& path);

}  // namespace emotive
