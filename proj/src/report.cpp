#include "liepow/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liepow {

void Report::check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

std::string to_string(OutputFormat f) { return f == OutputFormat::Text ? "text" : "json"; }

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json params = json::array();
  for (const auto& [k, v] : r.parameters) params.push_back({k, v});
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {
      {"command", r.command},
      {"parameters", params},
      {"config",
       {{"seed", r.config.seed},
        {"retry_bound", r.config.retry_bound},
        {"samples", r.config.samples},
        {"triples", r.config.triples},
        {"cache_dir", r.config.cache_dir},
        {"format", to_string(r.config.format)}}},
      {"tables", tables},
      {"checks", checks},
      {"all_passed", r.all_passed()},
  };
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& p : j.at("parameters"))
    r.parameters.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  const auto& c = j.at("config");
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.config.retry_bound = c.at("retry_bound").get<int>();
  r.config.samples = c.at("samples").get<std::size_t>();
  r.config.triples = c.at("triples").get<std::size_t>();
  r.config.cache_dir = c.at("cache_dir").get<std::string>();
  r.config.format = parse_output_format(c.at("format").get<std::string>());
  for (const auto& t : j.at("tables"))
    r.tables.push_back({t.at("title").get<std::string>(),
                        t.at("columns").get<std::vector<std::string>>(),
                        t.at("rows").get<std::vector<std::vector<std::string>>>()});
  for (const auto& ch : j.at("checks"))
    r.checks.push_back({ch.at("name").get<std::string>(), ch.at("passed").get<bool>(),
                        ch.at("detail").get<std::string>()});
  return r;
}

namespace {

// Display width, counting each UTF-8 code point once.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, width(s)), ' '); }

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "# liepow " << r.command << '\n';
  out << "# seed=" << r.config.seed << " retries=" << r.config.retry_bound
      << " samples=" << r.config.samples << " triples=" << r.config.triples
      << " cache=" << (r.config.cache_dir.empty() ? "-" : r.config.cache_dir)
      << " format=" << to_string(r.config.format) << '\n';
  for (const auto& [k, v] : r.parameters) out << "# " << k << ": " << v << '\n';
  for (const auto& t : r.tables) {
    out << "\n== " << t.title << " ==\n";
    std::vector<std::size_t> w(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = width(t.columns[i]);
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(row[i]));
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "  " : "") + pad(cells[i], i < w.size() ? w[i] : 0);
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  if (!r.checks.empty()) out << '\n';
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  out << "\nchecks: " << passed << "/" << r.checks.size() << " passed\n";
  return out.str();
}

std::string render(const Report& r) {
  return r.config.format == OutputFormat::Json ? to_json(r).dump(2) + "\n" : render_text(r);
}

}  // namespace liepow
