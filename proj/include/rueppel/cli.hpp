#ifndef RUEPPEL_CLI_HPP
#define RUEPPEL_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rueppel/oeis.hpp"
#include "rueppel/verify.hpp"

namespace rueppel {

inline constexpr const char* kOutputSchema = "rueppel-lab/1";

enum class OutputFormat { plain, json, csv, bfile };
OutputFormat parse_output_format(std::string_view s);
const char* to_string(OutputFormat f);

/// A named list of values with the index of its first entry.
struct OutputList {
  std::string name;
  long offset = 0;
  std::vector<std::string> values;
  bool integral = true;  // every value is an integer literal

  friend bool operator==(const OutputList&, const OutputList&) = default;
};

/// Everything a subcommand prints, independent of the output format.
struct OutputRecord {
  std::vector<std::string> command;  // argv echo, program name excluded
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<OutputList> lists;
  std::vector<std::vector<std::string>> matrix;
  std::vector<std::string> matrix_header;
  std::vector<CheckReport> reports;
  std::vector<std::pair<std::string, std::string>> summary;
};

bool operator==(const OutputRecord& a, const OutputRecord& b);

std::string to_json_text(const OutputRecord& r);
/// Inverse of to_json_text; ParseError on schema mismatch.
OutputRecord record_from_json(std::string_view text);
/// Renders in the given format. bfile needs exactly one integral list (Usage otherwise).
std::string render(const OutputRecord& r, OutputFormat f);

/// `key = value` settings with `[section]` prefixes ("section.key").
struct LabConfig {
  std::string ring = "int";
  std::string format = "plain";
  std::string depth_profile = "default";
  int jobs = 0;
  std::size_t truncation = 64;
  std::string reference = "fixtures";
  OeisConfig oeis;

  /// Defaults, then the OEIS environment.
  static LabConfig defaults();
  /// Applies a config file on top; Usage error with the line number on bad input.
  void load(const std::filesystem::path& path);
  void apply(std::string_view text);
  /// OEIS environment variables win over the file.
  void apply_env();
};

struct CliHooks {
  Fetcher fetcher;  // live OEIS access, when the binary links it
};

/// Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace rueppel

#endif  // RUEPPEL_CLI_HPP
