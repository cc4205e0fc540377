#include "emotive/affect.hpp"

#include <algorithm>

#include "emotive/corpus.hpp"
#include "emotive/error.hpp"
#include "utf8.hpp"

namespace emotive {

std::string_view to_string(AffectCategory category) {
  switch (category) {
    case AffectCategory::positive: return "positive";
    case AffectCategory::negative: return "negative";
    case AffectCategory::joy: return "joy";
    case AffectCategory::trust: return "trust";
    case AffectCategory::anticipation: return "anticipation";
    case AffectCategory::surprise: return "surprise";
    case AffectCategory::fear: return "fear";
    case AffectCategory::sadness: return "sadness";
    case AffectCategory::anger: return "anger";
    case AffectCategory::disgust: return "disgust";
  }
  return "unknown";
}

std::optional<AffectCategory> parse_affect_category(std::string_view name) {
  for (auto c : kAffectCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

AffectGroup affect_group(AffectCategory category) {
  switch (category) {
    case AffectCategory::positive:
    case AffectCategory::negative:
      return AffectGroup::sentiment;
    case AffectCategory::trust:
    case AffectCategory::joy:
    case AffectCategory::anticipation:
      return AffectGroup::tja;
    case AffectCategory::fear:
    case AffectCategory::anger:
    case AffectCategory::sadness:
    case AffectCategory::disgust:
      return AffectGroup::fasd;
    case AffectCategory::surprise:
      break;
  }
  return AffectGroup::ungrouped;
}

AffectLexicon AffectLexicon::parse(std::string_view text, std::string_view origin) {
  AffectLexicon lex;
  std::unordered_map<std::string, AffectMask> seen;  // includes all-zero words
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos || t1 == 0)
      throw InputError(where + ": expected word<TAB>category<TAB>flag");
    const auto word = utf8::to_lower_ascii(line.substr(0, t1));
    const auto name = line.substr(t1 + 1, t2 - t1 - 1);
    const auto flag = line.substr(t2 + 1);

    const auto category = parse_affect_category(name);
    if (!category) throw InputError(where + ": unknown category \"" + std::string(name) + "\"");
    if (flag != "0" && flag != "1")
      throw InputError(where + ": flag must be 0 or 1, got \"" + std::string(flag) + "\"");

    auto& mask = seen[word];
    if (flag == "1") mask |= mask_of(*category);
  }
  for (auto& [word, mask] : seen) {
    if (mask != 0) lex.entries_.emplace(word, mask);
  }
  if (lex.entries_.empty()) throw InputError(std::string(origin) + ": empty lexicon");
  return lex;
}

AffectLexicon AffectLexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

AffectMask AffectLexicon::find(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? AffectMask{0} : it->second;
}

AffectCounts affect_counts(std::span<const std::string> lemmas, const AffectLexicon& lexicon) {
  AffectCounts counts{};
  for (const auto& lemma : lemmas) {
    const AffectMask mask = lexicon.find(lemma);
    if (mask == 0) continue;
    for (std::size_t i = 0; i < kAffectCategoryCount; ++i) {
      if (mask & (1u << i)) ++counts[i];
    }
  }
  return counts;
}

AffectProfile affect_frequencies(const AffectCounts& counts) {
  AffectProfile profile;
  for (auto n : counts) profile.total_hits += n;
  if (profile.total_hits == 0) return profile;
  const auto total = static_cast<double>(profile.total_hits);
  for (std::size_t i = 0; i < kAffectCategoryCount; ++i) {
    profile.frequencies[i] = static_cast<double>(counts[i]) / total;
  }
  return profile;
}

}  // namespace emotive
