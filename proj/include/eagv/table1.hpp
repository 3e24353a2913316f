#pragma once

#include "eagv/pareto.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace eagv {

struct Table1Row {
  std::uint64_t q, n, k1, k2, c;
  std::vector<DistancePair> expected_old;
  std::vector<DistancePair> expected_new;
};

struct Table1RowResult {
  Table1Row row;
  ParetoFrontier actual_old;
  ParetoFrontier actual_new;
  bool match_old = false;
  bool match_new = false;
  bool improves = false;

  bool match() const { return match_old && match_new; }
};

struct Table1Report {
  std::vector<Table1RowResult> rows;

  bool all_match() const {
    for (const auto& r : rows)
      if (!r.match()) return false;
    return true;
  }
};

// Published comparison of the conventional and symplectic frontiers, in
// print order. Pairs are (d_z, d_x).
inline const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {4, 15, 3, 1, 1, {{2, 1}}, {{2, 1}, {1, 2}}},
      {5, 24, 5, 3, 3, {{2, 2}}, {{4, 1}, {2, 2}, {1, 4}}},
      {7, 19, 7, 4, 4, {{4, 2}}, {{7, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 7}}},
      {7, 19, 13, 10, 10, {{8, 6}},
       {{19, 2}, {16, 3}, {12, 4}, {10, 5}, {9, 6}, {8, 7}, {7, 8}, {6, 9}, {5, 10}, {4, 12}, {3, 16}, {2, 19}}},
      {8, 63, 7, 1, 1, {{3, 1}}, {{4, 1}, {2, 2}, {1, 4}}},
      {8, 63, 11, 3, 3, {{5, 2}}, {{6, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 6}}},
      {9, 40, 10, 5, 5, {{5, 3}}, {{8, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 8}}},
      {9, 40, 12, 3, 3, {{6, 2}}, {{8, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 8}}},
      {9, 40, 12, 7, 7, {{6, 3}}, {{11, 1}, {9, 2}, {7, 3}, {6, 4}, {5, 5}, {4, 6}, {3, 7}, {2, 9}, {1, 11}}},
      {16, 51, 9, 3, 3, {{5, 2}}, {{7, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 7}}},
      {16, 51, 11, 1, 1, {{6, 1}}, {{7, 1}, {5, 2}, {4, 3}, {3, 4}, {2, 5}, {1, 7}}},
      {16, 51, 11, 3, 3, {{6, 2}}, {{8, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 8}}},
      {16, 51, 17, 5, 5, {{10, 3}},
       {{13, 1}, {11, 2}, {10, 3}, {9, 4}, {8, 5}, {6, 6}, {5, 8}, {4, 9}, {3, 10}, {2, 11}, {1, 13}}},
      {16, 51, 19, 5, 5, {{11, 3}},
       {{15, 1}, {13, 2}, {11, 3}, {10, 4}, {9, 5}, {8, 6}, {7, 7}, {6, 8}, {5, 9}, {4, 10}, {3, 11}, {2, 13},
        {1, 15}}},
      {16, 51, 23, 3, 3, {{14, 2}},
       {{16, 1}, {14, 2}, {13, 3}, {11, 4}, {10, 5}, {9, 6}, {8, 7}, {7, 8}, {6, 9}, {5, 10}, {4, 11}, {3, 13},
        {2, 14}, {1, 16}}},
      {16, 51, 23, 9, 9, {{14, 5}},
       {{21, 1}, {19, 2}, {17, 3}, {16, 4}, {14, 5}, {13, 6}, {12, 7}, {11, 8}, {10, 9}, {9, 10}, {8, 11},
        {7, 12}, {6, 13}, {5, 14}, {4, 16}, {3, 17}, {2, 19}, {1, 21}}},
      {16, 51, 27, 5, 5, {{17, 3}},
       {{21, 1}, {19, 2}, {17, 3}, {16, 4}, {14, 5}, {13, 6}, {12, 7}, {11, 8}, {10, 9}, {9, 10}, {8, 11},
        {7, 12}, {6, 13}, {5, 14}, {4, 16}, {3, 17}, {2, 19}, {1, 21}}},
      {25, 48, 6, 4, 4, {{4, 2}}, {{6, 1}, {5, 2}, {3, 3}, {2, 5}, {1, 6}}},
      {25, 48, 10, 4, 4, {{6, 2}}, {{8, 1}, {7, 2}, {6, 3}, {5, 4}, {4, 5}, {3, 6}, {2, 7}, {1, 8}}},
      {25, 48, 10, 7, 7, {{6, 4}}, {{11, 1}, {9, 2}, {8, 3}, {7, 4}, {5, 5}, {4, 7}, {3, 8}, {2, 9}, {1, 11}}},
      {25, 48, 12, 3, 3, {{7, 2}}, {{9, 1}, {8, 2}, {6, 3}, {5, 4}, {4, 5}, {3, 6}, {2, 8}, {1, 9}}},
      {25, 48, 12, 6, 6, {{7, 4}},
       {{11, 1}, {10, 2}, {8, 3}, {7, 4}, {6, 5}, {5, 6}, {4, 7}, {3, 8}, {2, 10}, {1, 11}}},
  };
  return rows;
}

inline Table1RowResult evaluate_table1_row(const Table1Row& row) {
  Table1RowResult r;
  r.row = row;
  r.actual_old = pareto_old(row.q, row.n, row.k1, row.k2, row.c);
  r.actual_new = pareto_new(row.q, row.n, row.k1 + row.k2, row.c);
  r.match_old = r.actual_old.pairs == row.expected_old;
  r.match_new = r.actual_new.pairs == row.expected_new;
  r.improves = improves(r.actual_new, r.actual_old);
  return r;
}

/// Recomputes both frontiers for every published row (or only the 1-based
/// `only_row` when nonzero) and compares them with the embedded values.
inline Table1Report reproduce_table1(std::size_t only_row = 0) {
  const auto& rows = table1_rows();
  if (only_row > rows.size())
    throw InvalidParameters("row must be in 1.." + std::to_string(rows.size()));
  Table1Report report;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (only_row != 0 && i + 1 != only_row) continue;
    report.rows.push_back(evaluate_table1_row(rows[i]));
  }
  return report;
}

} // namespace eagv
