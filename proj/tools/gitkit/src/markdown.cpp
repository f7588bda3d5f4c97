#include "gitkit_cli/markdown.hpp"

#include <algorithm>
#include <sstream>

namespace gitkit::cli {

namespace {

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("rays") && j.contains("rank")) {
    // Cones read better as their rays.
    return "rays " + j["rays"].dump() + (j["lineality"].empty() ? "" : " lin " + j["lineality"].dump());
  }
  std::string s = j.dump();
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!row.is_object()) return false;
  return true;
}

void table(std::ostringstream& out, const Json& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  out << "|";
  for (const auto& k : keys) out << " " << k << " |";
  out << "\n|";
  for (std::size_t i = 0; i < keys.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : rows) {
    out << "|";
    for (const auto& k : keys) out << " " << (row.contains(k) ? cell(row[k]) : "") << " |";
    out << "\n";
  }
}

void section(std::ostringstream& out, const std::string& title, const Json& value, int level) {
  out << std::string(static_cast<std::size_t>(level), '#') << " " << title << "\n\n";
  if (is_table(value)) {
    table(out, value);
  } else if (value.is_object() && !(value.contains("rays") && value.contains("rank")) && level < 4) {
    for (const auto& [k, v] : value.items()) section(out, k, v, level + 1);
    return;
  } else {
    out << "`" << cell(value) << "`\n";
  }
  out << "\n";
}

}  // namespace

std::string to_markdown(const Json& report) {
  std::ostringstream out;
  out << "# gitkit " << (report.contains("command") ? report["command"].get<std::string>() : "report") << "\n\n";
  for (const auto& [k, v] : report.items()) {
    if (k == "command") continue;
    section(out, k, v, 2);
  }
  return out.str();
}

}  // namespace gitkit::cli
