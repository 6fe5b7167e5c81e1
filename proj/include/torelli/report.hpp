#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& s);

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int genus = 3;
  int graph_cap = 3;    // AS/IHX dimension table cap
  int chord_cap = 6;    // plain diagram counts
  int colored_cap = 5;  // colored diagram counts
  int threads = 2;
  std::string out = "-";
  OutputFormat format = OutputFormat::json;

  void validate() const;
  static RunConfig from_file(const std::string& path);
  void set_key(const std::string& key, const std::string& value);
};

struct CheckRecord {
  std::string id;
  std::string reference;  // what pins the expected value
  std::string expected;   // empty when there is no stated expectation
  std::string computed;
  std::string verdict;    // pass | fail | computed-no-expectation
  std::string note;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;
  double wall_seconds = 0.0;  // printed to stderr only, never serialized

  bool all_pass() const;
  void sort_records();
  void add(CheckRecord r);
};

// Renders without the wall time so identical config + seed gives
// byte-identical output.
std::string render_report(const Report& r, OutputFormat f);

// Suite drivers shared by the CLI and the tests.
Report cmd_dims(const RunConfig& cfg);
Report cmd_table219(const RunConfig& cfg);
Report cmd_identities(const RunConfig& cfg, const std::string& suite);
Report cmd_lagrangian(const RunConfig& cfg);
Report cmd_figure8(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg, const std::string& suite_filter);
Report cmd_contract(const RunConfig& cfg, const std::string& diagram_text,
                    bool colored);

}  // namespace torelli
