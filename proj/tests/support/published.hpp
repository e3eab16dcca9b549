#pragma once

// Published classification data for a <= 14: canonical pairs, symmetric
// representatives in P-notation, the affine mapping column, and the
// blowup-sequence table.

#include <string>
#include <vector>

#include "sedfkit/group.hpp"

namespace published {

using sedfkit::Int;

struct Row {
  Int a;
  std::string number;
  std::vector<Int> sym_a;  // pair indices
  std::vector<Int> sym_b;
  std::string mapping;
  std::vector<Int> canon_a;
  std::vector<Int> canon_b;
};

inline std::vector<Int> range(Int lo, Int hi, Int step = 1) {
  std::vector<Int> out;
  for (Int x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

inline const std::vector<Row>& table1() {
  static const std::vector<Row> rows{
      {3, "3.1", {0, 1}, {2, 5}, "X+1", range(0, 2), range(3, 9, 3)},
      {4, "4.1", {1, 3}, {4, 5}, "8X+10", range(0, 3), range(4, 16, 4)},
      {4, "4.2", {1, 4}, {2, 8}, "6X+11", {0, 1, 4, 5}, {6, 8, 14, 16}},
      {5, "5.1", {0, 1, 2}, {3, 8, 13}, "X+2", range(0, 4), range(5, 25, 5)},
      {6, "6.1", {1, 3, 5}, {6, 7, 18}, "18X+21", range(0, 5), range(6, 36, 6)},
      {6, "6.2", {1, 2, 17}, {4, 10, 16}, "2X+4", {0, 1, 2, 6, 7, 8}, {9, 12, 21, 24, 33, 36}},
      {7, "7.1", {0, 1, 2, 3}, {4, 11, 18, 25}, "X+3", range(0, 6), range(7, 49, 7)},
      {8, "8.1", {1, 3, 5, 7}, {8, 9, 24, 25}, "32X+36", range(0, 7), range(8, 64, 8)},
      {8, "8.2", {1, 6, 8, 15}, {5, 13, 23, 24}, "28X+38", {0, 1, 2, 3, 8, 9, 10, 11},
       {12, 16, 28, 32, 44, 48, 60, 64}},
      {8, "8.3", {1, 4, 13, 16}, {2, 8, 26, 32}, "22X+43", {0, 1, 4, 5, 16, 17, 20, 21},
       {22, 24, 30, 32, 54, 56, 62, 64}},
      {9, "9.1", {0, 1, 2, 3, 4}, {5, 14, 23, 32, 41}, "X+4", range(0, 8), range(9, 81, 9)},
      {9, "9.2", {0, 1, 8, 9, 10}, {11, 14, 17, 38, 41}, "X+10", {0, 1, 2, 9, 10, 11, 18, 19, 20},
       {21, 24, 27, 48, 51, 54, 75, 78, 81}},
      {10, "10.1", {1, 3, 5, 7, 9}, {10, 11, 30, 31, 50}, "50X+55", range(0, 9), range(10, 100, 10)},
      {10, "10.2", {1, 2, 32, 35, 36}, {11, 16, 31, 38, 43}, "3X+7", {0, 1, 2, 3, 4, 10, 11, 12, 13, 14},
       {15, 20, 35, 40, 55, 60, 75, 80, 95, 100}},
      {11, "11.1", {0, 1, 2, 3, 4, 5}, {6, 17, 28, 39, 50, 61}, "X+5", range(0, 10), range(11, 121, 11)},
      {12, "12.1", {1, 3, 5, 7, 9, 11}, {12, 13, 36, 37, 60, 61}, "72X+78", range(0, 11), range(12, 144, 12)},
      {12, "12.2", {1, 6, 27, 34, 55, 62}, {8, 22, 31, 45, 54, 68}, "57X+93",
       {0, 1, 2, 3, 4, 5, 12, 13, 14, 15, 16, 17}, {18, 24, 42, 48, 66, 72, 90, 96, 114, 120, 138, 144}},
      {12, "12.3", {1, 2, 4, 5, 68, 71}, {7, 19, 31, 43, 55, 67}, "48X+98",
       {0, 1, 2, 3, 4, 5, 18, 19, 20, 21, 22, 23}, {24, 30, 36, 60, 66, 72, 96, 102, 108, 132, 138, 144}},
      {12, "12.4", {1, 3, 13, 15, 17, 19}, {20, 21, 28, 29, 68, 69}, "72X+82",
       {0, 1, 2, 3, 4, 5, 24, 25, 26, 27, 28, 29}, {30, 36, 42, 48, 78, 84, 90, 96, 126, 132, 138, 144}},
      {12, "12.5", {1, 3, 21, 23, 25, 27}, {28, 29, 36, 37, 44, 45}, "72X+86",
       {0, 1, 2, 3, 12, 13, 14, 15, 24, 25, 26, 27}, {28, 32, 36, 64, 68, 72, 100, 104, 108, 136, 140, 144}},
      {12, "12.6", {1, 2, 17, 20, 35, 38}, {4, 10, 16, 58, 64, 70}, "8X+16",
       {0, 1, 2, 6, 7, 8, 24, 25, 26, 30, 31, 32}, {33, 36, 45, 48, 81, 84, 93, 96, 129, 132, 141, 144}},
      {12, "12.7", {1, 10, 19, 35, 44, 53}, {12, 15, 25, 52, 56, 62}, "16X+22",
       {0, 1, 2, 6, 7, 8, 36, 37, 38, 42, 43, 44}, {45, 48, 57, 60, 69, 72, 117, 120, 129, 132, 141, 144}},
      {13, "13.1", {0, 1, 2, 3, 4, 5, 6}, {7, 20, 33, 46, 59, 72, 85}, "X+6", range(0, 12), range(13, 169, 13)},
      {14, "14.1", {1, 3, 5, 7, 9, 11, 13}, {14, 15, 42, 43, 70, 71, 98}, "98X+105", range(0, 13),
       range(14, 196, 14)},
      {14, "14.2", {1, 2, 38, 41, 77, 78, 80}, {19, 26, 43, 64, 71, 81, 88}, "5X+10",
       {0, 1, 2, 3, 4, 5, 6, 14, 15, 16, 17, 18, 19, 20},
       {21, 28, 49, 56, 77, 84, 105, 112, 133, 140, 161, 168, 189, 196}},
  };
  return rows;
}

struct SequenceRow {
  Int a;
  std::string number;
  std::string sequence;
};

inline const std::vector<SequenceRow>& table2() {
  static const std::vector<SequenceRow> rows{
      {3, "3.1", "(3,3)"},           {4, "4.1", "(4,4)"},         {4, "4.2", "(2,2,2,2)"},
      {5, "5.1", "(5,5)"},           {6, "6.1", "(6,6)"},         {6, "6.2", "(3,2,2,3)"},
      {7, "7.1", "(7,7)"},           {8, "8.1", "(8,8)"},         {8, "8.2", "(2,2,4,4)"},
      {8, "8.3", "(2,2,2,2,2,2)"},   {9, "9.1", "(9,9)"},         {9, "9.2", "(3,3,3,3)"},
      {10, "10.1", "(10,10)"},       {10, "10.2", "(5,2,2,5)"},   {11, "11.1", "(11,11)"},
      {12, "12.1", "(4,2,3,6)"},     {12, "12.2", "(3,2,2,2,2,3)"}, {12, "12.3", "(3,2,4,6)"},
      {12, "12.4", "(12,12)"},       {12, "12.5", "(4,3,3,4)"},   {12, "12.6", "(6,2,2,6)"},
      {12, "12.7", "(2,2,3,2,2,3)"}, {13, "13.1", "(13,13)"},     {14, "14.1", "(14,14)"},
      {14, "14.2", "(7,2,2,7)"},
  };
  return rows;
}

inline std::vector<Row> rows_for(Int a) {
  std::vector<Row> out;
  for (const auto& r : table1()) {
    if (r.a == a) out.push_back(r);
  }
  return out;
}

}  // namespace published
