#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppcount::cli {

enum class Format { Human, Csv, Json, Markdown };

Format parse_format(const std::string& text);

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCapExceeded = 3 };

/// A rectangular text table rendered as aligned text, CSV or Markdown.
struct TextTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const TextTable& table, Format format);

/// Runs the tool with argv[0] being the program name. Output goes to `out`,
/// diagnostics to `err`; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppcount::cli
