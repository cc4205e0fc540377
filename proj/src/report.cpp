#include "emotive/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "emotive/error.hpp"

namespace emotive {

namespace {

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, round_to(v, places));
  std::string s(buf);
  // "-0.00" after rounding a tiny negative
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string coord(double v) { return fixed(v, 2); }

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

/// Rows grouped by first appearance of their party, years ascending.
std::vector<const ElectionRow*> table_order(std::span<const ElectionRow> rows) {
  std::vector<std::string> parties;
  for (const auto& r : rows) {
    if (std::find(parties.begin(), parties.end(), r.party) == parties.end())
      parties.push_back(r.party);
  }
  std::vector<const ElectionRow*> ordered;
  for (const auto& p : parties) {
    const auto first = ordered.size();
    for (const auto& r : rows) {
      if (r.party == p) ordered.push_back(&r);
    }
    std::stable_sort(ordered.begin() + static_cast<std::ptrdiff_t>(first), ordered.end(),
                     [](const ElectionRow* a, const ElectionRow* b) { return a->year < b->year; });
  }
  return ordered;
}

template <typename T>
T parse_number(std::string_view field, std::size_t lineno, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw InputError("summary line " + std::to_string(lineno) + ": bad " + name + " \"" +
                     std::string(field) + "\"");
  }
  return value;
}

struct Rgb {
  int r, g, b;
};

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

// Chart geometry.
constexpr double kWidth = 760;
constexpr double kHeight = 440;
constexpr double kLeft = 72;
constexpr double kRight = 180;
constexpr double kTop = 52;
constexpr double kBottom = 64;
constexpr int kYTicks = 5;

}  // namespace

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  throw InputError("unknown table format \"" + std::string(text) + "\" (expected csv or json)");
}

std::string emit_table(std::span<const ElectionRow> rows, TableFormat format) {
  if (rows.empty()) throw ProcessingError("cannot emit a table with no rows");
  const auto ordered = table_order(rows);

  if (format == TableFormat::json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto* r : ordered) {
      nlohmann::ordered_json row;
      row["party"] = r->party;
      row["year"] = r->year;
      row["sentences"] = r->sentences;
      row["gov_status"] = std::string(to_string(r->gov_status));
      row["pos_share"] = round_to(r->shares.positive, 3);
      row["pos_change"] = round_to(r->pos_change, 2);
      row["neg_share"] = round_to(r->shares.negative, 3);
      row["neg_change"] = round_to(r->neg_change, 2);
      row["neut_share"] = round_to(r->shares.neutral, 3);
      out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
  }

  std::string csv(kSummaryCsvHeader);
  csv += "\n";
  for (const auto* r : ordered) {
    csv += r->party + "," + std::to_string(r->year) + "," + std::to_string(r->sentences) + "," +
           std::string(to_string(r->gov_status)) + "," + fixed(r->shares.positive, 3) + "," +
           fixed(r->pos_change, 2) + "," + fixed(r->shares.negative, 3) + "," +
           fixed(r->neg_change, 2) + "," + fixed(r->shares.neutral, 3) + "\n";
  }
  return csv;
}

std::string emit_affect_table(std::span<const ElectionRow> rows) {
  if (rows.empty()) throw ProcessingError("cannot emit a table with no rows");
  std::string csv = "party,year,total_hits";
  for (auto c : kAffectCategories) csv += "," + std::string(to_string(c));
  csv += "\n";
  for (const auto* r : table_order(rows)) {
    csv += r->party + "," + std::to_string(r->year) + "," + std::to_string(r->affect.total_hits);
    for (auto c : kAffectCategories) csv += "," + fixed(r->affect.frequency(c), 6);
    csv += "\n";
  }
  return csv;
}

std::vector<TableRecord> parse_summary_csv(std::string_view text) {
  std::vector<TableRecord> records;
  std::size_t lineno = 0;
  std::size_t start = 0;
  bool header = true;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kSummaryCsvHeader) throw InputError("summary CSV has an unexpected header");
      header = false;
      continue;
    }
    std::vector<std::string_view> f;
    for (std::size_t p = 0;;) {
      auto comma = line.find(',', p);
      f.push_back(line.substr(p, comma == std::string_view::npos ? line.npos : comma - p));
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    if (f.size() != 9) {
      throw InputError("summary line " + std::to_string(lineno) + ": expected 9 fields");
    }
    TableRecord r;
    r.party = std::string(f[0]);
    r.year = parse_number<int>(f[1], lineno, "year");
    r.sentences = parse_number<std::size_t>(f[2], lineno, "sentences");
    r.gov_status = parse_gov_status(f[3]);
    r.pos_share = parse_number<double>(f[4], lineno, "pos_share");
    r.pos_change = parse_number<double>(f[5], lineno, "pos_change");
    r.neg_share = parse_number<double>(f[6], lineno, "neg_share");
    r.neg_change = parse_number<double>(f[7], lineno, "neg_change");
    r.neut_share = parse_number<double>(f[8], lineno, "neut_share");
    records.push_back(std::move(r));
  }
  if (header) throw InputError("summary CSV is empty");
  return records;
}

// ---------------------------------------------------------------------------
// Line charts
// ---------------------------------------------------------------------------

std::string_view to_string(ChartGroup group) {
  switch (group) {
    case ChartGroup::sentiment: return "sentiment";
    case ChartGroup::tja: return "tja";
    case ChartGroup::fasd: return "fasd";
    case ChartGroup::all: break;
  }
  return "all";
}

bool in_chart_group(AffectCategory category, ChartGroup group) {
  switch (group) {
    case ChartGroup::sentiment: return affect_group(category) == AffectGroup::sentiment;
    case ChartGroup::tja: return affect_group(category) == AffectGroup::tja;
    case ChartGroup::fasd: return affect_group(category) == AffectGroup::fasd;
    case ChartGroup::all: break;
  }
  return true;
}

void validate(const ChartSpec& spec) {
  if (spec.series.empty()) throw ProcessingError("chart \"" + spec.title + "\": empty series list");
  if (spec.years.empty()) throw ProcessingError("chart \"" + spec.title + "\": no years");
  for (std::size_t i = 1; i < spec.years.size(); ++i) {
    if (spec.years[i] <= spec.years[i - 1])
      throw ProcessingError("chart \"" + spec.title + "\": years must be strictly increasing");
  }
  for (const auto& s : spec.series) {
    if (s.points.size() != spec.years.size()) {
      throw ProcessingError("chart \"" + spec.title + "\": series \"" + s.name + "\" has " +
                            std::to_string(s.points.size()) + " points for " +
                            std::to_string(spec.years.size()) + " years");
    }
    for (double v : s.points) {
      if (!std::isfinite(v))
        throw ProcessingError("chart \"" + spec.title + "\": non-finite point in " + s.name);
    }
    if (s.group != ChartGroup::all) {
      const auto category = parse_affect_category(s.name);
      if (!category || !in_chart_group(*category, s.group)) {
        throw ProcessingError("chart \"" + spec.title + "\": series \"" + s.name +
                              "\" does not belong to group " + std::string(to_string(s.group)));
      }
    }
  }
}

ChartSpec make_affect_chart(const PartySeries& series, ChartGroup group) {
  ChartSpec spec;
  switch (group) {
    case ChartGroup::sentiment:
      spec.title = series.party + ": positive and negative affect frequency";
      break;
    case ChartGroup::tja:
      spec.title = series.party + ": trust, joy, anticipation (TJA)";
      break;
    case ChartGroup::fasd:
      spec.title = series.party + ": fear, anger, sadness, disgust (FASD)";
      break;
    case ChartGroup::all:
      spec.title = series.party + ": change in emotion-associated content";
      break;
  }
  spec.years = series.years;
  for (auto c : kAffectCategories) {
    if (!in_chart_group(c, group)) continue;
    spec.series.push_back({std::string(to_string(c)), group, series.affect_series(c)});
  }
  return spec;
}

std::string_view series_color(std::string_view name) {
  static const std::map<std::string_view, std::string_view> kPalette = {
      {"positive", "#2ca02c"}, {"negative", "#d62728"}, {"joy", "#e6ab02"},
      {"trust", "#1f77b4"},    {"anticipation", "#17becf"}, {"surprise", "#9467bd"},
      {"fear", "#8c564b"},     {"sadness", "#7f7f7f"},  {"anger", "#ff7f0e"},
      {"disgust", "#bcbd22"},  {"pos_share", "#2ca02c"}, {"neg_share", "#d62728"},
      {"neut_share", "#7f7f7f"}};
  auto it = kPalette.find(name);
  return it == kPalette.end() ? std::string_view("#333333") : it->second;
}

std::string render_line_chart(const ChartSpec& spec) {
  validate(spec);

  double max_point = 0.0;
  for (const auto& s : spec.series) {
    for (double v : s.points) max_point = std::max(max_point, v);
  }
  const double y_max = max_point > 0.0 ? max_point * 1.1 : 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x0 = spec.years.front();
  const double x1 = spec.years.back();
  auto px = [&](int year) {
    if (spec.years.size() == 1) return kLeft + plot_w / 2;
    return kLeft + (static_cast<double>(year) - x0) / (x1 - x0) * plot_w;
  };
  auto py = [&](double v) { return kTop + plot_h - v / y_max * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << "<text x=\"" << coord(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(spec.title) << "</text>\n";

  // Grid and y ticks.
  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
  for (int t = 0; t <= kYTicks; ++t) {
    const double v = y_max * t / kYTicks;
    const double y = py(v);
    svg << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(y) << "\" x2=\""
        << coord(kLeft + plot_w) << "\" y2=\"" << coord(y)
        << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(y + 4)
        << "\" text-anchor=\"end\">" << fixed(v, 3) << "</text>\n";
  }
  for (int year : spec.years) {
    const double x = px(year);
    svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(kTop + plot_h) << "\" x2=\""
        << coord(x) << "\" y2=\"" << coord(kTop + plot_h + 5) << "\" stroke=\"#333333\"/>\n"
        << "<text x=\"" << coord(x) << "\" y=\"" << coord(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << year << "</text>\n";
  }
  svg << "</g>\n";

  // Axes and labels.
  svg << "<path d=\"M" << coord(kLeft) << " " << coord(kTop) << " V" << coord(kTop + plot_h)
      << " H" << coord(kLeft + plot_w) << "\" fill=\"none\" stroke=\"#333333\"/>\n"
      << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 16)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << "Election year</text>\n"
      << "<text x=\"18\" y=\"" << coord(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 18 "
      << coord(kTop + plot_h / 2) << ")\">" << xml_escape(spec.y_label) << "</text>\n";

  for (const auto& s : spec.series) {
    const auto color = series_color(s.name);
    svg << "<g class=\"series\" data-name=\"" << xml_escape(s.name) << "\">\n<polyline points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) svg << " ";
      svg << coord(px(spec.years[i])) << "," << coord(py(s.points[i]));
    }
    svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      svg << "<circle cx=\"" << coord(px(spec.years[i])) << "\" cy=\"" << coord(py(s.points[i]))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    svg << "</g>\n";
  }

  // Legend.
  svg << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = kLeft + plot_w + 20;
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const double ly = kTop + 10 + static_cast<double>(i) * 20;
    svg << "<rect x=\"" << coord(lx) << "\" y=\"" << coord(ly - 9) << "\" width=\"14\" height=\"10\" "
        << "fill=\"" << series_color(spec.series[i].name) << "\"/>\n"
        << "<text x=\"" << coord(lx + 20) << "\" y=\"" << coord(ly) << "\">"
        << xml_escape(spec.series[i].name) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

// ---------------------------------------------------------------------------
// Heatmap
// ---------------------------------------------------------------------------

std::string heatmap_color(double r) {
  constexpr Rgb kNeg{33, 102, 172};   // -1
  constexpr Rgb kPos{178, 24, 43};    // +1
  const double t = std::clamp(std::fabs(r), 0.0, 1.0);
  const Rgb target = r < 0 ? kNeg : kPos;
  auto mix = [&](int channel) {
    return static_cast<int>(std::lround(255.0 + (channel - 255.0) * t));
  };
  return hex({mix(target.r), mix(target.g), mix(target.b)});
}

std::string render_heatmap(const CorrelationMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0 || matrix.cells.size() != n * n)
    throw ProcessingError("heatmap: matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix.at(i, i) != 1.0) throw ProcessingError("heatmap: diagonal entry is not 1");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix.at(i, j);
      if (!std::isfinite(v) || v < -1.0 || v > 1.0)
        throw ProcessingError("heatmap: correlation outside [-1, 1]");
      if (std::fabs(v - matrix.at(j, i)) > 1e-12)
        throw ProcessingError("heatmap: matrix is not symmetric");
    }
  }

  constexpr double kCell = 54;
  constexpr double kLabel = 110;
  constexpr double kTopLabel = 110;
  constexpr double kBarW = 18;
  const double grid = kCell * static_cast<double>(n);
  const double width = kLabel + grid + 90;
  const double height = kTopLabel + grid + 30;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << coord(width) << "\" height=\""
      << coord(height) << "\" viewBox=\"0 0 " << coord(width) << " " << coord(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << "<text x=\"" << coord(kLabel + grid / 2) << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">Correlation matrix, all parties</text>\n"
      << "<g font-family=\"sans-serif\" font-size=\"11\">\n";

  for (std::size_t i = 0; i < n; ++i) {
    const double c = kTopLabel + (static_cast<double>(i) + 0.5) * kCell;
    svg << "<text x=\"" << coord(kLabel - 6) << "\" y=\"" << coord(c + 4)
        << "\" text-anchor=\"end\">" << xml_escape(matrix.variables[i]) << "</text>\n";
    const double cx = kLabel + (static_cast<double>(i) + 0.5) * kCell;
    svg << "<text x=\"" << coord(cx) << "\" y=\"" << coord(kTopLabel - 6)
        << "\" text-anchor=\"start\" transform=\"rotate(-60 " << coord(cx) << " "
        << coord(kTopLabel - 6) << ")\">" << xml_escape(matrix.variables[i]) << "</text>\n";
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = matrix.at(i, j);
      const double x = kLabel + static_cast<double>(j) * kCell;
      const double y = kTopLabel + static_cast<double>(i) * kCell;
      svg << "<rect x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" width=\"" << coord(kCell)
          << "\" height=\"" << coord(kCell) << "\" fill=\"" << heatmap_color(v)
          << "\" stroke=\"#ffffff\"/>\n"
          << "<text x=\"" << coord(x + kCell / 2) << "\" y=\"" << coord(y + kCell / 2 + 4)
          << "\" text-anchor=\"middle\" fill=\"" << (std::fabs(v) > 0.6 ? "#ffffff" : "#000000")
          << "\">" << fixed(v, 2) << "</text>\n";
    }
  }

  // Colour bar from +1 (top) to -1 (bottom).
  const double bx = kLabel + grid + 24;
  constexpr int kSteps = 20;
  const double step_h = grid / kSteps;
  for (int s = 0; s < kSteps; ++s) {
    const double v = 1.0 - (s + 0.5) * 2.0 / kSteps;
    svg << "<rect x=\"" << coord(bx) << "\" y=\"" << coord(kTopLabel + s * step_h)
        << "\" width=\"" << coord(kBarW) << "\" height=\"" << coord(step_h) << "\" fill=\""
        << heatmap_color(v) << "\"/>\n";
  }
  const std::pair<double, const char*> ticks[] = {{1.0, "1"}, {0.0, "0"}, {-1.0, "-1"}};
  for (const auto& [v, label] : ticks) {
    const double y = kTopLabel + (1.0 - v) / 2.0 * grid;
    svg << "<text x=\"" << coord(bx + kBarW + 6) << "\" y=\"" << coord(y + 4) << "\">" << label
        << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace emotive
