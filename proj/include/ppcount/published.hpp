#pragma once

// Values printed in the source article, kept verbatim so that computed values
// can be compared against them. Several are known to be inconsistent; the
// comparison helpers report disagreements rather than assuming either side.

#include <cstdint>
#include <string>
#include <vector>

#include "ppcount/enumeration.hpp"

namespace ppcount::published {

/// Column headings of the printed rank-3 tables and the groups they denote.
struct Rank3Column {
  std::string heading;
  std::string group_spec;
};
const std::vector<Rank3Column>& rank3_columns();

/// Raw table: one row per rank3_rows() entry, one value per column.
const std::vector<std::vector<std::uint64_t>>& rank3_raw();
/// Univalent and non-univalent tables: the seven orbit rows (no quasi rows).
const std::vector<std::vector<std::uint64_t>>& rank3_univalent();
const std::vector<std::vector<std::uint64_t>>& rank3_non_univalent();

constexpr std::uint64_t kRawGrandTotal = 188;
constexpr std::uint64_t kNonUnivalentGrandTotal = 128;

/// A printed centraliser table: column representatives and named rows.
struct CentralizerTable {
  std::vector<std::string> representatives;
  std::vector<std::string> row_names;
  std::vector<std::vector<std::int64_t>> rows;
};
/// A4 with I = {1,2,3}, J = {1,2,4}: rows C_W, C_{A3}, C_{A2xA1}.
const CentralizerTable& alpha4_table();
/// H3 with I = {1,2}: rows C_W, C_{Dih5}, C_W(w^2), C_{Dih5}(w^2).
const CentralizerTable& h3_table();
/// B3 with I = ∅: rows C_W, C_{id}, C_W(w^2), C_{id}(w^2).
const CentralizerTable& beta3_table();

/// Worked-example results as printed.
constexpr std::uint64_t kExampleAlpha4P = 2;
constexpr std::uint64_t kExampleH3P = 1;
constexpr std::uint64_t kExampleH3U = 1;
constexpr std::uint64_t kExampleBeta3U = 23;
constexpr std::int64_t kExampleBeta3DisplayedP = 13;
constexpr std::int64_t kExampleBeta3StatedP = 23;

struct CellDiscrepancy {
  std::string table;  // "raw", "univalent" or "non-univalent"
  std::string row;
  std::string column;
  std::uint64_t printed = 0;
  std::uint64_t computed = 0;
  std::string describe() const;
};

/// Cell-by-cell comparison of computed tables (Lang convention, default groups
/// in default order) against the printed ones, plus the three grand totals.
std::vector<CellDiscrepancy> compare_rank3(const Rank3Tables& computed);

}  // namespace ppcount::published
