#include "emotive/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emotive/error.hpp"
#include "utf8.hpp"

namespace emotive {

namespace {

using utf8::is_ascii_alpha;
using utf8::is_ascii_digit;
using utf8::is_ascii_upper;
using utf8::is_space;

bool is_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }
bool is_word_byte(char c) { return is_alnum(c) || static_cast<unsigned char>(c) >= 0x80; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits a resource file into lines, dropping '\r', blank lines and
/// '#' comments. Yields (line number, content).
std::vector<std::pair<std::size_t, std::string>> resource_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() != '#') lines.emplace_back(lineno, std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// ---------------------------------------------------------------------------
// URL removal
// ---------------------------------------------------------------------------

bool is_scheme_char(char c) { return is_alnum(c) || c == '+' || c == '-' || c == '.'; }

bool is_url_trailer(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case ')': case ']': case '}': case '\'': case '"':
      return true;
    default:
      return false;
  }
}

/// Start offset of the leftmost URL inside a whitespace-free token.
std::size_t find_url_start(std::string_view token) {
  std::size_t best = std::string_view::npos;
  for (auto sep = token.find("://"); sep != std::string_view::npos;
       sep = token.find("://", sep + 1)) {
    std::size_t s = sep;
    while (s > 0 && is_scheme_char(token[s - 1])) --s;
    while (s < sep && !is_ascii_alpha(token[s])) ++s;  // scheme starts with a letter
    if (s < sep && sep + 3 < token.size()) {
      best = std::min(best, s);
      break;
    }
  }
  for (std::size_t i = 0; i + 4 < token.size(); ++i) {
    if (i >= best) break;
    if ((token[i] == 'w' || token[i] == 'W') && (token[i + 1] == 'w' || token[i + 1] == 'W') &&
        (token[i + 2] == 'w' || token[i + 2] == 'W') && token[i + 3] == '.' &&
        (i == 0 || !is_alnum(token[i - 1]))) {
      best = i;
      break;
    }
  }
  return best;
}

/// One left-to-right removal pass; returns true if anything was removed.
bool remove_urls_once(std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool changed = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      out.push_back(' ');
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && text[end] != ' ') ++end;
    std::string_view token(text.data() + i, end - i);
    const auto start = find_url_start(token);
    if (start == std::string_view::npos) {
      out.append(token);
    } else {
      std::size_t tail = token.size();
      while (tail > start && is_url_trailer(token[tail - 1])) --tail;
      out.append(token.substr(0, start));
      out.append(token.substr(tail));
      changed = true;
    }
    i = end;
  }
  text = std::move(out);
  return changed;
}

// ---------------------------------------------------------------------------
// Segmentation helpers
// ---------------------------------------------------------------------------

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }
bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

/// "U.K.", "U.S.A.", "J." and similar letter-dot sequences.
bool is_dotted_acronym(std::string_view word) {
  if (word.size() < 2 || word.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < word.size(); i += 2) {
    if (!is_ascii_alpha(word[i]) || word[i + 1] != '.') return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

std::string_view to_string(GovStatus status) {
  return status == GovStatus::incumbent ? "incumbent" : "opposition";
}

GovStatus parse_gov_status(std::string_view text) {
  if (text == "incumbent") return GovStatus::incumbent;
  if (text == "opposition") return GovStatus::opposition;
  throw InputError("unknown gov_status value \"" + std::string(text) + "\"");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CorpusManifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("manifest must be a top-level JSON array");
  if (doc.empty()) throw InputError("empty manifest");

  static const std::set<std::string> kKeys = {"party", "year", "gov_status", "path"};
  CorpusManifest manifest;
  std::set<std::pair<std::string, int>> seen;
  std::map<std::string, int> last_year;

  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "manifest entry " + std::to_string(i);
    if (!item.is_object()) throw InputError(where + ": expected an object");
    for (const auto& [key, _] : item.items()) {
      if (!kKeys.contains(key)) throw InputError(where + ": unknown key \"" + key + "\"");
    }
    for (const auto& key : kKeys) {
      if (!item.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
    }
    if (!item["party"].is_string() || item["party"].get<std::string>().empty())
      throw InputError(where + ": \"party\" must be a non-empty string");
    if (!item["year"].is_number_integer())
      throw InputError(where + ": \"year\" must be an integer");
    if (!item["gov_status"].is_string())
      throw InputError(where + ": \"gov_status\" must be a string");
    if (!item["path"].is_string() || item["path"].get<std::string>().empty())
      throw InputError(where + ": \"path\" must be a non-empty string");

    ManifestEntry entry;
    entry.party = item["party"].get<std::string>();
    // Party names become output file names.
    if (!std::all_of(entry.party.begin(), entry.party.end(),
                     [](char c) { return is_alnum(c) || c == '_' || c == '-'; })) {
      throw InputError(where + ": party \"" + entry.party +
                       "\" must contain only letters, digits, '_' or '-'");
    }
    entry.year = item["year"].get<int>();
    try {
      entry.gov_status = parse_gov_status(item["gov_status"].get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    std::filesystem::path p = item["path"].get<std::string>();
    entry.path = p.is_absolute() ? p : base_dir / p;

    if (!seen.emplace(entry.party, entry.year).second) {
      throw InputError(where + ": duplicate entry for (" + entry.party + ", " +
                       std::to_string(entry.year) + ")");
    }
    auto [it, fresh] = last_year.try_emplace(entry.party, entry.year);
    if (!fresh) {
      if (entry.year <= it->second) {
        throw InputError(where + ": years for party \"" + entry.party +
                         "\" must be strictly increasing");
      }
      it->second = entry.year;
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(entry.path, ec)) {
      throw InputError(where + ": text file not found: " + entry.path.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw InputError("manifest not found: " + path.string());
  }
  return parse_manifest(read_file(path), path.parent_path());
}

// ---------------------------------------------------------------------------
// Resource tables
// ---------------------------------------------------------------------------

UnicodeMap UnicodeMap::parse(std::string_view text) {
  UnicodeMap m;
  for (const auto& [lineno, line] : resource_lines(text)) {
    const auto where = "unicode map line " + std::to_string(lineno);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError(where + ": expected codepoint<TAB>replacement");
    std::string_view code(line.data(), tab);
    if (code.starts_with("U+") || code.starts_with("u+")) code.remove_prefix(2);
    std::uint32_t cp = 0;
    auto [ptr, ec] = std::from_chars(code.data(), code.data() + code.size(), cp, 16);
    if (ec != std::errc() || ptr != code.data() + code.size() || code.empty() || cp > 0x10FFFF)
      throw InputError(where + ": bad code point \"" + std::string(code) + "\"");

    std::string replacement;
    for (std::size_t i = tab + 1; i < line.size(); ++i) {
      char c = line[i];
      if (c == '\\' && i + 1 < line.size()) {
        const char e = line[++i];
        if (e == 's') c = ' ';
        else if (e == 't') c = '\t';
        else if (e == '\\') c = '\\';
        else throw InputError(where + ": unknown escape \\" + std::string(1, e));
      }
      if (static_cast<unsigned char>(c) >= 0x80)
        throw InputError(where + ": replacement must be ASCII");
      replacement.push_back(c);
    }
    if (!m.map_.emplace(static_cast<char32_t>(cp), std::move(replacement)).second)
      throw InputError(where + ": duplicate code point");
  }
  return m;
}

UnicodeMap UnicodeMap::load(const std::filesystem::path& path) { return parse(read_file(path)); }

const std::string* UnicodeMap::find(char32_t cp) const {
  auto it = map_.find(cp);
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<std::string> load_abbreviations(const std::filesystem::path& path) {
  std::vector<std::string> out;
  for (auto& [lineno, line] : resource_lines(read_file(path))) {
    auto entry = std::string(trim(line));
    if (!entry.empty()) out.push_back(std::move(entry));
  }
  if (out.empty()) throw InputError("abbreviation list is empty: " + path.string());
  return out;
}

std::unordered_map<std::string, std::string> load_lemma_table(const std::filesystem::path& path) {
  std::unordered_map<std::string, std::string> table;
  for (const auto& [lineno, line] : resource_lines(read_file(path))) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": expected inflected<TAB>lemma");
    }
    if (!table.emplace(line.substr(0, tab), line.substr(tab + 1)).second) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": duplicate entry");
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// TextProcessor
// ---------------------------------------------------------------------------

TextProcessor TextProcessor::load(const std::filesystem::path& resource_dir) {
  return TextProcessor(UnicodeMap::load(resource_dir / "unicode_map.tsv"),
                       load_abbreviations(resource_dir / "abbreviations.txt"),
                       load_lemma_table(resource_dir / "lemma_table.tsv"));
}

TextProcessor::TextProcessor(UnicodeMap unicode_map, std::vector<std::string> abbreviations,
                             std::unordered_map<std::string, std::string> lemmas)
    : unicode_map_(std::move(unicode_map)), lemmas_(std::move(lemmas)) {
  for (const auto& a : abbreviations) abbreviations_.insert(utf8::to_lower_ascii(a));
}

std::string TextProcessor::clean_text(std::string_view raw) const {
  // Map code points and turn every whitespace character into a space.
  std::string mapped;
  mapped.reserve(raw.size());
  for (std::size_t pos = 0; pos < raw.size();) {
    const char32_t cp = utf8::next(raw, pos);
    if (cp == utf8::kInvalid) continue;
    if (const auto* rep = unicode_map_.find(cp)) {
      for (char c : *rep) mapped.push_back(is_space(c) ? ' ' : c);
    } else if (cp < 0x80 && is_space(static_cast<char>(cp))) {
      mapped.push_back(' ');
    } else {
      utf8::append(mapped, cp);
    }
  }

  while (remove_urls_once(mapped)) {
  }

  std::string out;
  out.reserve(mapped.size());
  for (char c : mapped) {
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(c);
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

bool TextProcessor::is_abbreviation(std::string_view word) const {
  while (!word.empty() && is_opener(word.front())) word.remove_prefix(1);
  if (word.empty()) return false;
  if (is_dotted_acronym(word)) return true;
  return abbreviations_.contains(utf8::to_lower_ascii(word));
}

std::vector<std::string> TextProcessor::split_sentences(std::string_view text) const {
  std::vector<std::string> sentences;
  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminator(text[j])) ++j;
    const bool single_period = (j - i == 1 && text[i] == '.');
    while (j < n && is_closer(text[j])) ++j;
    if (j >= n || !is_space(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < n && is_space(text[k])) ++k;
    std::size_t m = k;
    while (m < n && is_opener(text[m])) ++m;
    if (m >= n || !is_ascii_upper(text[m])) {
      i = j;
      continue;
    }
    if (single_period) {
      std::size_t w = i;
      while (w > start && !is_space(text[w - 1])) --w;
      if (is_abbreviation(text.substr(w, i + 1 - w))) {
        i = j;
        continue;
      }
    }
    auto sentence = trim(text.substr(start, j - start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    start = k;
    i = k;
  }
  auto rest = trim(text.substr(std::min(start, n)));
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const char c = sentence[i];
    if (is_space(c)) {
      flush();
    } else if (is_word_byte(c)) {
      word.push_back(c);
    } else if (c == '\'' && !word.empty() && i + 1 < sentence.size() &&
               is_word_byte(sentence[i + 1])) {
      word.push_back(c);
    } else {
      flush();
      tokens.emplace_back(1, c);
    }
  }
  flush();
  return tokens;
}

std::string fallback_lemma(std::string_view w) {
  const std::size_t n = w.size();
  auto ends = [&](std::string_view suffix) { return w.ends_with(suffix); };
  if (ends("ies") && n >= 5) return std::string(w.substr(0, n - 3)) + "y";
  if ((ends("sses") || ends("xes") || ends("zes") || ends("ches") || ends("shes")) && n >= 5)
    return std::string(w.substr(0, n - 2));
  if (ends("s") && !ends("ss") && !ends("us") && !ends("is") && n >= 4)
    return std::string(w.substr(0, n - 1));
  for (std::string_view suffix : {std::string_view("ing"), std::string_view("ed")}) {
    if (ends(suffix) && n >= suffix.size() + 3) {
      std::string stem(w.substr(0, n - suffix.size()));
      const char last = stem.back();
      if (stem.size() >= 4 && last == stem[stem.size() - 2] &&
          std::string_view("aeiouslz").find(last) == std::string_view::npos) {
        stem.pop_back();
      }
      return stem;
    }
  }
  return std::string(w);
}

std::string TextProcessor::lemmatize(std::string_view token) const {
  if (token.empty() || !std::all_of(token.begin(), token.end(), utf8::is_ascii_lower)) {
    return std::string(token);
  }
  if (auto it = lemmas_.find(std::string(token)); it != lemmas_.end()) return it->second;
  return fallback_lemma(token);
}

std::vector<std::string> TextProcessor::normalize_for_affect(std::string_view sentence) const {
  std::vector<std::string> lemmas;
  for (const auto& token : tokenize(sentence)) {
    std::string kept;
    for (char c : token) {
      if (is_alnum(c)) kept.push_back(c);
    }
    if (kept.empty()) continue;
    lemmas.push_back(lemmatize(utf8::to_lower_ascii(kept)));
  }
  return lemmas;
}

DocumentRecord load_document(const ManifestEntry& entry, const TextProcessor& text) {
  std::string raw;
  try {
    raw = read_file(entry.path);
  } catch (const InputError&) {
    throw InputError("cannot read manifesto text for " + entry.party + " " +
                     std::to_string(entry.year) + ": " + entry.path.string());
  }
  DocumentRecord doc;
  doc.party = entry.party;
  doc.year = entry.year;
  doc.gov_status = entry.gov_status;
  doc.sentences = text.split_sentences(text.clean_text(raw));
  return doc;
}

}  // namespace emotive
