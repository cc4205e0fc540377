#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emotive/corpus.hpp"

namespace emotive {

/// How a compound of exactly +/-0.05 is labeled.
enum class BoundaryMode {
  strict_paper,         // positive iff > 0.05, negative iff < -0.05
  inclusive_reference,  // positive iff >= 0.05, negative iff <= -0.05
};

std::string_view to_string(BoundaryMode mode);
BoundaryMode parse_boundary_mode(std::string_view text);  // throws InputError

/// Heuristic constants of the rule-based scorer. Defaults are the values of
/// the reference VADER implementation; data/resources/valence_constants.tsv
/// documents each one.
struct ValenceConstants {
  double alpha = 15.0;                  // compound normalization
  double booster_increment = 0.293;     // booster/dampener magnitude
  double caps_increment = 0.733;        // ALL-CAPS emphasis
  double negation_scalar = -0.74;       // negation multiplier
  double booster_scale_2 = 0.95;        // booster two words back
  double booster_scale_3 = 0.90;        // booster three words back
  double never_so_scale = 1.25;         // "never so/this" intensification
  double but_before = 0.5;              // weight of words before "but"
  double but_after = 1.5;               // weight of words after "but"
  double exclamation_increment = 0.292; // per '!'
  int exclamation_cap = 4;              // '!' counted at most this many times
  double question_increment = 0.18;     // per '?' when 2..question_cap
  int question_cap = 3;
  double question_flood = 0.96;         // more than question_cap '?'
  double label_threshold = 0.05;
  BoundaryMode boundary_mode = BoundaryMode::strict_paper;

  bool operator==(const ValenceConstants&) const = default;
};

/// Reads "key<TAB>value" lines; keys not present keep their defaults.
ValenceConstants load_valence_constants(const std::filesystem::path& path);

/// Lower-case token -> mean valence rating in [-4, 4].
class ValenceLexicon {
 public:
  /// Tab-separated "token mean stddev ratings"; '#' lines are comments.
  static ValenceLexicon load(const std::filesystem::path& path);
  static ValenceLexicon parse(std::string_view text, std::string_view origin = "lexicon");

  std::optional<double> find(std::string_view lower_token) const;
  bool contains(std::string_view lower_token) const { return find(lower_token).has_value(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, double> entries_;
};

enum class SentimentLabel { positive, negative, neutral };
std::string_view to_string(SentimentLabel label);

struct SentenceScore {
  double compound = 0.0;
  SentimentLabel label = SentimentLabel::neutral;
};

/// compound / sqrt(compound^2 + alpha), clamped to [-1, 1].
double normalize_score(double raw_sum, double alpha = 15.0);

/// Ternary label at +/-threshold. Precondition: compound in [-1, 1].
SentimentLabel classify(double compound, BoundaryMode mode = BoundaryMode::strict_paper,
                        double threshold = 0.05);

/// Whitespace split with leading/trailing ASCII punctuation stripped from
/// each word unless that leaves two or fewer characters (which keeps
/// emoticons like ":)" intact). This is the word sequence the scoring
/// heuristics walk over.
std::vector<std::string> valence_words(std::string_view sentence);

class ValenceScorer {
 public:
  explicit ValenceScorer(const ValenceLexicon& lexicon, ValenceConstants constants = {});

  /// One entry per word: the adjusted valence of lexicon words, 0 for the
  /// rest, with the "but" clause weighting already applied.
  std::vector<double> token_valences(std::span<const std::string> words) const;

  /// Punctuation emphasis for the raw sentence ('!' and '?' runs).
  double punctuation_emphasis(std::string_view sentence) const;

  SentenceScore score(std::string_view sentence) const;

  const ValenceConstants& constants() const { return constants_; }

 private:
  double word_valence(std::span<const std::string> words, std::span<const std::string> lower,
                      std::size_t i, bool cap_differential) const;

  const ValenceLexicon* lexicon_;
  ValenceConstants constants_;
};

struct SentimentCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;

  std::size_t total() const { return positive + negative + neutral; }
  bool operator==(const SentimentCounts&) const = default;
};

/// Labels every sentence of a document. Throws ProcessingError when the
/// document has no sentences.
SentimentCounts analyze_document_sentiment(const DocumentRecord& doc, const ValenceScorer& scorer);

}  // namespace emotive
