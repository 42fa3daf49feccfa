#include "ppcount/published.hpp"

#include <stdexcept>

namespace ppcount::published {

const std::vector<Rank3Column>& rank3_columns() {
  static const std::vector<Rank3Column> cols{
      {"Dih6", "A1xI2(6)"}, {"alpha3", "A3"}, {"beta3", "B3"}, {"H3", "H3"}};
  return cols;
}

const std::vector<std::vector<std::uint64_t>>& rank3_raw() {
  static const std::vector<std::vector<std::uint64_t>> t{
      {3, 1, 2, 3}, {4, 2, 3, 4}, {3, 2, 3, 5}, {1, 2, 2, 4}, {3, 2, 4, 8},
      {4, 3, 5, 9}, {1, 2, 3, 7}, {1, 1, 3, 5}, {2, 2, 4, 6}, {9, 7, 16, 37},
  };
  return t;
}

// The printed captions of these two tables are exchanged; the contents are
// identified by their values (the univalent table is the one with 0/1 cells).
const std::vector<std::vector<std::uint64_t>>& rank3_univalent() {
  static const std::vector<std::vector<std::uint64_t>> t{
      {1, 0, 1, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 0, 0, 0}, {1, 0, 1, 1}, {1, 9, 23, 31},
  };
  return t;
}

const std::vector<std::vector<std::uint64_t>>& rank3_non_univalent() {
  static const std::vector<std::vector<std::uint64_t>> t{
      {2, 1, 1, 2}, {3, 2, 3, 5}, {1, 1, 2, 4}, {2, 1, 3, 7}, {1, 2, 3, 7}, {0, 1, 2, 4}, {5, 7, 12, 44},
  };
  return t;
}

const CentralizerTable& alpha4_table() {
  static const CentralizerTable t{
      {"id", "(12)", "(123)", "(12)(34)"},
      {"C_W(w)", "C_A3(w)", "C_A2xA1(w)"},
      {{120, 12, 6, 8}, {24, 4, 3, 8}, {12, 3, 6, 4}},
  };
  return t;
}

const CentralizerTable& h3_table() {
  static const CentralizerTable t{
      {"id", "(12)(23)", "(12345)", "(13524)"},
      {"C_W(w)", "C_Dih5(w)", "C_W(w^2)", "C_Dih5(w^2)"},
      {{120, 8, 10, 10}, {10, 2, 5, 5}, {120, 120, 10, 10}, {10, 10, 5, 5}},
  };
  return t;
}

const CentralizerTable& beta3_table() {
  static const CentralizerTable t{
      {"id", "(000,(12))", "(001,(12))", "(001,id)", "(011,id)", "(111,id)"},
      {"C_W(w)", "C_id(w)", "C_W(w^2)", "C_id(w^2)"},
      {{48, 8, 8, 16, 16, 48}, {1, 0, 0, 0, 0, 0}, {48, 48, 48, 8, 8, 16}, {1, 1, 1, 1, 1, 1}},
  };
  return t;
}

std::string CellDiscrepancy::describe() const {
  return table + " [" + row + "][" + column + "]: printed " + std::to_string(printed) + ", computed " +
         std::to_string(computed);
}

std::vector<CellDiscrepancy> compare_rank3(const Rank3Tables& computed) {
  const auto& cols = rank3_columns();
  if (computed.columns.size() != cols.size())
    throw std::invalid_argument("comparison needs the four default rank-3 groups");
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (computed.columns[c].group.name() != parse_group_spec(cols[c].group_spec).name())
      throw std::invalid_argument("comparison needs the default rank-3 groups in default order");

  std::vector<CellDiscrepancy> out;
  const auto& rows = computed.rows;
  std::size_t orbit_row = 0;
  std::uint64_t printed_non_univalent = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& col = computed.columns[c];
      if (col.raw[r] != rank3_raw()[r][c])
        out.push_back({"raw", rows[r].label(), cols[c].heading, rank3_raw()[r][c], col.raw[r]});
      if (rows[r].kind != RowKind::Orbit) continue;
      if (col.univalent[r] != rank3_univalent()[orbit_row][c])
        out.push_back({"univalent", rows[r].label(), cols[c].heading, rank3_univalent()[orbit_row][c],
                       col.univalent[r]});
      if (col.non_univalent[r] != rank3_non_univalent()[orbit_row][c])
        out.push_back({"non-univalent", rows[r].label(), cols[c].heading, rank3_non_univalent()[orbit_row][c],
                       col.non_univalent[r]});
    }
    if (rows[r].kind == RowKind::Orbit) ++orbit_row;
  }
  for (const auto& row : rank3_non_univalent())
    for (auto v : row) printed_non_univalent += v;
  if (computed.raw_total() != kRawGrandTotal)
    out.push_back({"raw", "grand total", "all", kRawGrandTotal, computed.raw_total()});
  if (computed.non_univalent_total() != kNonUnivalentGrandTotal)
    out.push_back({"non-univalent", "grand total", "all", kNonUnivalentGrandTotal, computed.non_univalent_total()});
  if (printed_non_univalent != kNonUnivalentGrandTotal)
    out.push_back({"non-univalent", "sum of printed cells", "all", kNonUnivalentGrandTotal, printed_non_univalent});
  return out;
}

}  // namespace ppcount::published
