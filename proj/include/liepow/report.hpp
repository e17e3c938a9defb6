#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace liepow {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::uint64_t seed = 1;
  int retry_bound = 20;
  std::size_t samples = 100;   // random pairs for automorphism and power checks
  std::size_t triples = 1000;  // random triples for associativity
  std::string cache_dir;       // empty: no on-disk cache
  OutputFormat format = OutputFormat::Text;
  bool operator==(const RunConfig&) const = default;
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool operator==(const ReportTable&) const = default;
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
  bool operator==(const CheckLine&) const = default;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  RunConfig config;
  std::vector<ReportTable> tables;
  std::vector<CheckLine> checks;

  void check(std::string name, bool passed, std::string detail = {});
  bool all_passed() const;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
// Throws nlohmann::json::exception on schema mismatch.
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r);
std::string render(const Report& r);

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);

}  // namespace liepow
