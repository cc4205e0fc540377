#pragma once

#include <array>
#include <string_view>

#include "emotive/corpus.hpp"

namespace fixture {

// Published per-election sentiment tables for the two parties: values as
// printed, including their mixed rounding.
struct TableRow {
  std::string_view party;
  int year;
  int sentences;
  emotive::GovStatus status;
  double pos_share;
  double pos_change;
  double neg_share;
  double neg_change;
  double neut_share;
};

inline constexpr auto I = emotive::GovStatus::incumbent;
inline constexpr auto O = emotive::GovStatus::opposition;

inline constexpr std::array<TableRow, 12> kTables = {{
    {"labour", 2001, 977, I, 62.641, 0.0, 16.07, 0.0, 21.29},
    {"labour", 2005, 801, I, 63.92, 1.28, 19.725, 3.7, 16.355},
    {"labour", 2010, 1313, I, 66.565, 2.64, 16.375, -3.4, 17.06},
    {"labour", 2015, 865, O, 60.231, -6.33, 22.89, 6.5, 16.879},
    {"labour", 2017, 1136, O, 53.257, -6.97, 24.032, 1.1, 22.711},
    {"labour", 2019, 1192, O, 50.336, -2.92, 30.369, 6.3, 19.295},
    {"conservative", 2001, 680, O, 48.382, 0.0, 25.735, 0.0, 25.882},
    {"conservative", 2005, 415, O, 53.012, 4.63, 20.241, -5.5, 26.747},
    {"conservative", 2010, 494, O, 58.3, 5.29, 22.065, 1.8, 19.636},
    {"conservative", 2015, 283, I, 75.618, 17.32, 13.428, -8.6, 10.954},
    {"conservative", 2017, 1275, I, 70.667, -4.95, 13.961, 0.5, 15.373},
    {"conservative", 2019, 974, I, 64.682, -5.98, 15.811, 1.8, 19.507},
}};

}  // namespace fixture
