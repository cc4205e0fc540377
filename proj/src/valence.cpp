#include "emotive/valence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include "emotive/error.hpp"
#include "utf8.hpp"

namespace emotive {

namespace {

const std::unordered_set<std::string_view> kNegations = {
    "aint",     "arent",    "cannot",   "cant",     "couldnt",  "darent",   "didnt",
    "doesnt",   "ain't",    "aren't",   "can't",    "couldn't", "daren't",  "didn't",
    "doesn't",  "dont",     "hadnt",    "hasnt",    "havent",   "isnt",     "mightnt",
    "mustnt",   "neither",  "don't",    "hadn't",   "hasn't",   "haven't",  "isn't",
    "mightn't", "mustn't",  "neednt",   "needn't",  "never",    "none",     "nope",
    "nor",      "not",      "nothing",  "nowhere",  "oughtnt",  "shant",    "shouldnt",
    "uhuh",     "wasnt",    "werent",   "oughtn't", "shan't",   "shouldn't", "uh-uh",
    "wasn't",   "weren't",  "without",  "wont",     "wouldnt",  "won't",    "wouldn't",
    "rarely",   "seldom",   "despite"};

// +1 boosts, -1 dampens; scaled by ValenceConstants::booster_increment.
const std::unordered_map<std::string_view, int> kBoosters = {
    {"absolutely", 1},   {"amazingly", 1},   {"awfully", 1},       {"completely", 1},
    {"considerable", 1}, {"considerably", 1}, {"decidedly", 1},    {"deeply", 1},
    {"effing", 1},       {"enormous", 1},    {"enormously", 1},    {"entirely", 1},
    {"especially", 1},   {"exceptional", 1}, {"exceptionally", 1}, {"extreme", 1},
    {"extremely", 1},    {"fabulously", 1},  {"flipping", 1},      {"flippin", 1},
    {"frackin", 1},      {"fracking", 1},    {"fricking", 1},      {"frickin", 1},
    {"frigging", 1},     {"friggin", 1},     {"fully", 1},         {"fuckin", 1},
    {"fucking", 1},      {"fuggin", 1},      {"fugging", 1},       {"greatly", 1},
    {"hella", 1},        {"highly", 1},      {"hugely", 1},        {"incredible", 1},
    {"incredibly", 1},   {"intensely", 1},   {"major", 1},         {"majorly", 1},
    {"more", 1},         {"most", 1},        {"particularly", 1},  {"purely", 1},
    {"quite", 1},        {"really", 1},      {"remarkably", 1},    {"so", 1},
    {"substantially", 1}, {"thoroughly", 1}, {"total", 1},         {"totally", 1},
    {"tremendous", 1},   {"tremendously", 1}, {"uber", 1},         {"unbelievably", 1},
    {"unusually", 1},    {"utter", 1},       {"utterly", 1},       {"very", 1},
    {"almost", -1},      {"barely", -1},     {"hardly", -1},       {"just enough", -1},
    {"kind of", -1},     {"kinda", -1},      {"kindof", -1},       {"kind-of", -1},
    {"less", -1},        {"little", -1},     {"marginal", -1},     {"marginally", -1},
    {"occasional", -1},  {"occasionally", -1}, {"partly", -1},     {"scarce", -1},
    {"scarcely", -1},    {"slight", -1},     {"slightly", -1},     {"somewhat", -1},
    {"sort of", -1},     {"sorta", -1},      {"sortof", -1},       {"sort-of", -1}};

// Multi-word phrases whose valence replaces the word's own.
const std::unordered_map<std::string_view, double> kSpecialCases = {
    {"the shit", 3.0},     {"the bomb", 3.0},      {"bad ass", 1.5},
    {"badass", 1.5},       {"bus stop", 0.0},      {"yeah right", -2.0},
    {"kiss of death", -1.5}, {"to die for", 3.0},  {"beating heart", 3.5}};

/// str.isupper(): at least one cased character and no lower-case ones.
bool is_all_caps(std::string_view word) {
  bool upper = false;
  for (char c : word) {
    if (utf8::is_ascii_lower(c)) return false;
    if (utf8::is_ascii_upper(c)) upper = true;
  }
  return upper;
}

bool is_negation(std::string_view lower_word) {
  return kNegations.contains(lower_word) || lower_word.find("n't") != std::string_view::npos;
}

std::string join(std::span<const std::string> words, std::size_t first, std::size_t count) {
  std::string out;
  for (std::size_t k = 0; k < count; ++k) {
    if (k) out.push_back(' ');
    out += words[first + k];
  }
  return out;
}

bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && utf8::is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && utf8::is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::string_view to_string(BoundaryMode mode) {
  return mode == BoundaryMode::strict_paper ? "strict_paper" : "inclusive_reference";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
  if (text == "strict_paper") return BoundaryMode::strict_paper;
  if (text == "inclusive_reference") return BoundaryMode::inclusive_reference;
  throw InputError("unknown boundary mode \"" + std::string(text) +
                   "\" (expected strict_paper or inclusive_reference)");
}

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::positive: return "positive";
    case SentimentLabel::negative: return "negative";
    case SentimentLabel::neutral: break;
  }
  return "neutral";
}

ValenceConstants load_valence_constants(const std::filesystem::path& path) {
  ValenceConstants c;
  const std::unordered_map<std::string_view, double*> reals = {
      {"alpha", &c.alpha},
      {"booster_increment", &c.booster_increment},
      {"caps_increment", &c.caps_increment},
      {"negation_scalar", &c.negation_scalar},
      {"booster_scale_2", &c.booster_scale_2},
      {"booster_scale_3", &c.booster_scale_3},
      {"never_so_scale", &c.never_so_scale},
      {"but_before", &c.but_before},
      {"but_after", &c.but_after},
      {"exclamation_increment", &c.exclamation_increment},
      {"question_increment", &c.question_increment},
      {"question_flood", &c.question_flood},
      {"label_threshold", &c.label_threshold}};
  const std::unordered_map<std::string_view, int*> ints = {
      {"exclamation_cap", &c.exclamation_cap}, {"question_cap", &c.question_cap}};

  const std::string text = read_file(path);
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split_tabs(line);
    const auto where = path.string() + ":" + std::to_string(lineno);
    if (cols.size() < 2) throw InputError(where + ": expected key<TAB>value");
    const std::string_view key = cols[0];
    const std::string_view value = cols[1];
    if (key == "boundary_mode") {
      c.boundary_mode = parse_boundary_mode(value);
    } else if (auto it = reals.find(key); it != reals.end()) {
      if (!parse_double(value, *it->second) || !std::isfinite(*it->second))
        throw InputError(where + ": bad number for " + std::string(key));
    } else if (auto jt = ints.find(key); jt != ints.end()) {
      double v = 0;
      if (!parse_double(value, v) || v != std::floor(v) || v < 0)
        throw InputError(where + ": bad integer for " + std::string(key));
      *jt->second = static_cast<int>(v);
    } else {
      throw InputError(where + ": unknown constant \"" + std::string(key) + "\"");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Lexicon
// ---------------------------------------------------------------------------

ValenceLexicon ValenceLexicon::parse(std::string_view text, std::string_view origin) {
  ValenceLexicon lex;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = split_tabs(line);
    if (cols.size() != 4) {
      throw InputError(where + ": expected 4 tab-separated columns, found " +
                       std::to_string(cols.size()));
    }
    const std::string_view token = cols[0];
    if (token.empty()) throw InputError(where + ": empty token");
    if (std::any_of(token.begin(), token.end(), utf8::is_ascii_upper))
      throw InputError(where + ": token \"" + std::string(token) + "\" is not lower-case");
    double mean = 0;
    double stddev = 0;
    if (!parse_double(cols[1], mean) || !std::isfinite(mean))
      throw InputError(where + ": non-numeric mean \"" + std::string(cols[1]) + "\"");
    if (mean < -4.0 || mean > 4.0)
      throw InputError(where + ": mean " + std::string(cols[1]) + " outside [-4, 4]");
    if (!parse_double(cols[2], stddev))
      throw InputError(where + ": non-numeric stddev \"" + std::string(cols[2]) + "\"");
    if (!cols[3].starts_with('[') || !cols[3].ends_with(']'))
      throw InputError(where + ": ratings must be a bracketed list");
    if (!lex.entries_.emplace(std::string(token), mean).second)
      throw InputError(where + ": duplicate token \"" + std::string(token) + "\"");
  }
  if (lex.entries_.empty()) throw InputError(std::string(origin) + ": empty lexicon");
  return lex;
}

ValenceLexicon ValenceLexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::optional<double> ValenceLexicon::find(std::string_view lower_token) const {
  auto it = entries_.find(std::string(lower_token));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

double normalize_score(double raw_sum, double alpha) {
  const double norm = raw_sum / std::sqrt(raw_sum * raw_sum + alpha);
  return std::clamp(norm, -1.0, 1.0);
}

SentimentLabel classify(double compound, BoundaryMode mode, double threshold) {
  if (mode == BoundaryMode::inclusive_reference) {
    if (compound >= threshold) return SentimentLabel::positive;
    if (compound <= -threshold) return SentimentLabel::negative;
  } else {
    if (compound > threshold) return SentimentLabel::positive;
    if (compound < -threshold) return SentimentLabel::negative;
  }
  return SentimentLabel::neutral;
}

std::vector<std::string> valence_words(std::string_view sentence) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && utf8::is_space(sentence[i])) ++i;
    if (i >= sentence.size()) break;
    std::size_t end = i;
    while (end < sentence.size() && !utf8::is_space(sentence[end])) ++end;
    std::string_view word = sentence.substr(i, end - i);
    std::string_view stripped = word;
    while (!stripped.empty() && utf8::is_ascii_punct(stripped.front())) stripped.remove_prefix(1);
    while (!stripped.empty() && utf8::is_ascii_punct(stripped.back())) stripped.remove_suffix(1);
    words.emplace_back(utf8::length(stripped) <= 2 ? word : stripped);
    i = end;
  }
  return words;
}

ValenceScorer::ValenceScorer(const ValenceLexicon& lexicon, ValenceConstants constants)
    : lexicon_(&lexicon), constants_(constants) {}

double ValenceScorer::word_valence(std::span<const std::string> words,
                                   std::span<const std::string> lower, std::size_t i,
                                   bool cap_differential) const {
  const auto& c = constants_;
  const auto base = lexicon_->find(lower[i]);
  if (!base) return 0.0;
  double valence = *base;
  auto in_lexicon = [&](std::size_t k) { return lexicon_->contains(lower[k]); };

  // "no" directly before another lexicon word acts as a negator instead.
  if (lower[i] == "no" && i + 1 < words.size() && in_lexicon(i + 1)) valence = 0.0;
  if ((i > 0 && lower[i - 1] == "no") || (i > 1 && lower[i - 2] == "no") ||
      (i > 2 && lower[i - 3] == "no" && (lower[i - 1] == "or" || lower[i - 1] == "nor"))) {
    valence = *base * c.negation_scalar;
  }

  if (cap_differential && is_all_caps(words[i])) {
    valence += valence > 0 ? c.caps_increment : -c.caps_increment;
  }

  for (std::size_t back = 1; back <= 3; ++back) {
    if (i < back || in_lexicon(i - back)) continue;
    const std::string& prev = lower[i - back];

    double scalar = 0.0;
    if (auto b = kBoosters.find(prev); b != kBoosters.end()) {
      scalar = b->second * c.booster_increment;
      if (valence < 0) scalar = -scalar;
      if (cap_differential && is_all_caps(words[i - back])) {
        scalar += valence > 0 ? c.caps_increment : -c.caps_increment;
      }
      if (back == 2) scalar *= c.booster_scale_2;
      if (back == 3) scalar *= c.booster_scale_3;
    }
    valence += scalar;

    // Negation within the preceding trigram, with the "never so/this" and
    // "without doubt" exceptions.
    if (back == 1) {
      if (is_negation(lower[i - 1])) valence *= c.negation_scalar;
    } else if (back == 2) {
      if (lower[i - 2] == "never" && (lower[i - 1] == "so" || lower[i - 1] == "this")) {
        valence *= c.never_so_scale;
      } else if (lower[i - 2] == "without" && lower[i - 1] == "doubt") {
      } else if (is_negation(lower[i - 2])) {
        valence *= c.negation_scalar;
      }
    } else {
      if ((lower[i - 3] == "never" && (lower[i - 2] == "so" || lower[i - 2] == "this")) ||
          lower[i - 1] == "so" || lower[i - 1] == "this") {
        valence *= c.never_so_scale;
      } else if (lower[i - 3] == "without" &&
                 (lower[i - 2] == "doubt" || lower[i - 1] == "doubt")) {
      } else if (is_negation(lower[i - 3])) {
        valence *= c.negation_scalar;
      }

      // Phrase overrides, then two/three-word dampeners ("kind of").
      const std::string one_zero = join(lower, i - 1, 2);
      const std::string two_one_zero = join(lower, i - 2, 3);
      const std::string two_one = join(lower, i - 2, 2);
      const std::string three_two_one = join(lower, i - 3, 3);
      const std::string three_two = join(lower, i - 3, 2);
      for (const auto* seq : {&one_zero, &two_one_zero, &two_one, &three_two_one, &three_two}) {
        if (auto s = kSpecialCases.find(*seq); s != kSpecialCases.end()) {
          valence = s->second;
          break;
        }
      }
      if (i + 1 < words.size()) {
        if (auto s = kSpecialCases.find(join(lower, i, 2)); s != kSpecialCases.end())
          valence = s->second;
      }
      if (i + 2 < words.size()) {
        if (auto s = kSpecialCases.find(join(lower, i, 3)); s != kSpecialCases.end())
          valence = s->second;
      }
      for (const auto* gram : {&three_two_one, &three_two, &two_one}) {
        if (auto b = kBoosters.find(*gram); b != kBoosters.end())
          valence += b->second * c.booster_increment;
      }
    }
  }

  // "least" negates unless it is "at least" / "very least".
  if (i > 0 && lower[i - 1] == "least" && !in_lexicon(i - 1)) {
    if (i == 1 || (lower[i - 2] != "at" && lower[i - 2] != "very")) valence *= c.negation_scalar;
  }
  return valence;
}

std::vector<double> ValenceScorer::token_valences(std::span<const std::string> words) const {
  std::vector<std::string> lower;
  lower.reserve(words.size());
  for (const auto& w : words) lower.push_back(utf8::to_lower_ascii(w));

  std::size_t all_caps = 0;
  for (const auto& w : words) all_caps += is_all_caps(w) ? 1 : 0;
  const std::size_t differential = words.size() - all_caps;
  const bool cap_differential = differential > 0 && differential < words.size();

  std::vector<double> valences(words.size(), 0.0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (kBoosters.contains(lower[i])) continue;
    if (lower[i] == "kind" && i + 1 < words.size() && lower[i + 1] == "of") continue;
    valences[i] = word_valence(words, lower, i, cap_differential);
  }

  // Contrastive "but": damp the clause before the first one, stress the rest.
  if (auto but = std::find(lower.begin(), lower.end(), "but"); but != lower.end()) {
    const auto pivot = static_cast<std::size_t>(but - lower.begin());
    for (std::size_t k = 0; k < valences.size(); ++k) {
      if (k < pivot) valences[k] *= constants_.but_before;
      if (k > pivot) valences[k] *= constants_.but_after;
    }
  }
  return valences;
}

double ValenceScorer::punctuation_emphasis(std::string_view sentence) const {
  const auto& c = constants_;
  const auto bangs = std::min<std::ptrdiff_t>(std::count(sentence.begin(), sentence.end(), '!'),
                                              c.exclamation_cap);
  double emphasis = static_cast<double>(bangs) * c.exclamation_increment;
  const auto questions = std::count(sentence.begin(), sentence.end(), '?');
  if (questions > 1) {
    emphasis += questions <= c.question_cap ? static_cast<double>(questions) * c.question_increment
                                            : c.question_flood;
  }
  return emphasis;
}

SentenceScore ValenceScorer::score(std::string_view sentence) const {
  const auto words = valence_words(sentence);
  double compound = 0.0;
  if (!words.empty()) {
    const auto valences = token_valences(words);
    double sum = 0.0;
    for (double v : valences) sum += v;
    const double emphasis = punctuation_emphasis(sentence);
    if (sum > 0) sum += emphasis;
    else if (sum < 0) sum -= emphasis;
    compound = normalize_score(sum, constants_.alpha);
  }
  return {compound, classify(compound, constants_.boundary_mode, constants_.label_threshold)};
}

SentimentCounts analyze_document_sentiment(const DocumentRecord& doc, const ValenceScorer& scorer) {
  if (doc.sentences.empty()) {
    throw ProcessingError("document " + doc.party + " " + std::to_string(doc.year) +
                          " has no sentences");
  }
  SentimentCounts counts;
  for (const auto& sentence : doc.sentences) {
    switch (scorer.score(sentence).label) {
      case SentimentLabel::positive: ++counts.positive; break;
      case SentimentLabel::negative: ++counts.negative; break;
      case SentimentLabel::neutral: ++counts.neutral; break;
    }
  }
  return counts;
}

}  // namespace emotive
