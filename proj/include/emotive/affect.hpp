#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

namespace emotive {

/// The two sentiments and eight basic emotions, in reporting order.
enum class AffectCategory : std::uint8_t {
  positive,
  negative,
  joy,
  trust,
  anticipation,
  surprise,
  fear,
  sadness,
  anger,
  disgust,
};

inline constexpr std::size_t kAffectCategoryCount = 10;

inline constexpr std::array<AffectCategory, kAffectCategoryCount> kAffectCategories = {
    AffectCategory::positive, AffectCategory::negative, AffectCategory::joy,
    AffectCategory::trust,    AffectCategory::anticipation, AffectCategory::surprise,
    AffectCategory::fear,     AffectCategory::sadness,  AffectCategory::anger,
    AffectCategory::disgust};

std::string_view to_string(AffectCategory category);
std::optional<AffectCategory> parse_affect_category(std::string_view name);

/// Chart groupings: the two sentiments, trust/joy/anticipation (TJA),
/// fear/anger/sadness/disgust (FASD). Surprise belongs to none of them.
enum class AffectGroup { sentiment, tja, fasd, ungrouped };
AffectGroup affect_group(AffectCategory category);

/// Bit i set <=> association with kAffectCategories[i].
using AffectMask = std::uint16_t;

inline constexpr AffectMask mask_of(AffectCategory c) {
  return static_cast<AffectMask>(1u << static_cast<unsigned>(c));
}

class AffectLexicon {
 public:
  /// "word<TAB>category<TAB>flag" triples with flag 0 or 1. Words whose
  /// flags are all zero are omitted.
  static AffectLexicon load(const std::filesystem::path& path);
  static AffectLexicon parse(std::string_view text, std::string_view origin = "affect lexicon");

  /// Zero when the lemma is not in the lexicon.
  AffectMask find(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, AffectMask> entries_;
};

using AffectCounts = std::array<std::uint64_t, kAffectCategoryCount>;

struct AffectProfile {
  std::array<double, kAffectCategoryCount> frequencies{};
  std::uint64_t total_hits = 0;

  double frequency(AffectCategory c) const { return frequencies[static_cast<std::size_t>(c)]; }
};

/// Occurrence-weighted category counts over a lemma stream.
AffectCounts affect_counts(std::span<const std::string> lemmas, const AffectLexicon& lexicon);

/// Each category's share of all hits; all zero when nothing matched.
AffectProfile affect_frequencies(const AffectCounts& counts);

}  // namespace emotive
