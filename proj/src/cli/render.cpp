#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ppcount/cli.hpp"

namespace ppcount::cli {

Format parse_format(const std::string& text) {
  if (text == "human") return Format::Human;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + text + "'");
}

namespace {

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? sep : "") + cells[i];
  return s;
}

std::string human(const TextTable& t) {
  std::vector<std::size_t> width(t.headers.size(), 0);
  for (std::size_t c = 0; c < t.headers.size(); ++c) width[c] = t.headers[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  if (!t.title.empty()) os << t.title << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      s += (c ? "  " : "") + cell;
    }
    os << s << "\n";
  };
  line(t.headers);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string markdown(const TextTable& t) {
  std::ostringstream os;
  if (!t.title.empty()) os << "### " << t.title << "\n\n";
  os << "| " << join(t.headers, " | ") << " |\n";
  os << "|";
  for (std::size_t c = 0; c < t.headers.size(); ++c) os << "---|";
  os << "\n";
  for (const auto& row : t.rows) os << "| " << join(row, " | ") << " |\n";
  return os.str();
}

// Cells are never quoted; a comma inside a label (e.g. "(001,(12))") becomes ';'.
std::string csv(const TextTable& t) {
  auto clean = [](std::vector<std::string> cells) {
    for (auto& c : cells) std::replace(c.begin(), c.end(), ',', ';');
    return cells;
  };
  std::ostringstream os;
  os << join(clean(t.headers), ",") << "\n";
  for (const auto& row : t.rows) os << join(clean(row), ",") << "\n";
  return os.str();
}

}  // namespace

std::string render(const TextTable& table, Format format) {
  switch (format) {
    case Format::Human:
      return human(table);
    case Format::Csv:
      return csv(table);
    case Format::Markdown:
      return markdown(table);
    case Format::Json:
      break;
  }
  throw std::invalid_argument("JSON output is produced per command, not from a text table");
}

}  // namespace ppcount::cli
