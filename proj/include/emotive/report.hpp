#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotive/analytics.hpp"

namespace emotive {

enum class TableFormat { csv, json };
TableFormat parse_table_format(std::string_view text);  // throws InputError

inline constexpr std::string_view kSummaryCsvHeader =
    "party,year,sentences,gov_status,pos_share,pos_change,neg_share,neg_change,neut_share";

/// Summary table, one line per (party, year): parties in order of first
/// appearance, years ascending. Shares at 3 decimals, changes at 2.
/// Throws ProcessingError on empty input.
std::string emit_table(std::span<const ElectionRow> rows, TableFormat format);

/// Per-document affect frequencies (6 decimals) and hit totals.
std::string emit_affect_table(std::span<const ElectionRow> rows);

/// One parsed line of the summary CSV.
struct TableRecord {
  std::string party;
  int year = 0;
  std::size_t sentences = 0;
  GovStatus gov_status = GovStatus::opposition;
  double pos_share = 0.0;
  double pos_change = 0.0;
  double neg_share = 0.0;
  double neg_change = 0.0;
  double neut_share = 0.0;
};

/// Reads back a table written by emit_table(csv). Throws InputError.
std::vector<TableRecord> parse_summary_csv(std::string_view text);

enum class ChartGroup { sentiment, tja, fasd, all };
std::string_view to_string(ChartGroup group);

/// True when the category is plotted on a chart of the given group.
bool in_chart_group(AffectCategory category, ChartGroup group);

struct ChartSeries {
  std::string name;
  ChartGroup group = ChartGroup::all;
  std::vector<double> points;  // one per year
};

struct ChartSpec {
  std::string title;
  std::string y_label = "Affect frequency";
  std::vector<int> years;
  std::vector<ChartSeries> series;
};

/// Throws ProcessingError when the chart is inconsistent: no series, point
/// counts that differ from the year count, unordered years, or a series
/// placed in a group it does not belong to.
void validate(const ChartSpec& spec);

/// Affect-frequency chart for one party restricted to a group.
ChartSpec make_affect_chart(const PartySeries& series, ChartGroup group);

/// Fixed colour for a series name; unknown names get a neutral grey.
std::string_view series_color(std::string_view name);

/// Deterministic SVG line chart, y axis spanning [0, 1.1 * max point].
std::string render_line_chart(const ChartSpec& spec);

/// Diverging blue/white/red grid anchored at -1, 0 and +1 with each cell
/// annotated at 2 decimals.
std::string render_heatmap(const CorrelationMatrix& matrix);

/// Heatmap fill for a correlation value, as "#rrggbb".
std::string heatmap_color(double r);

}  // namespace emotive
