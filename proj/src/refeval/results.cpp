#include "geobench/refeval/results.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace geobench {

using nlohmann::json;

namespace {

bool looks_like_iri(std::string_view v) {
  const auto colon = v.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(v[0]))) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    const char c = v[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
  }
  return v.find_first_of(" \t\n\"<>") == std::string_view::npos;
}

}  // namespace

std::string to_sparql_json(const ResultTable& table) {
  json doc;
  doc["head"]["vars"] = table.vars;
  if (table.boolean) {
    doc["boolean"] = *table.boolean;
    return doc.dump();
  }
  json bindings = json::array();
  for (const auto& row : table.rows) {
    json b = json::object();
    for (std::size_t i = 0; i < table.vars.size() && i < row.size(); ++i) {
      if (row[i].empty()) continue;
      b[table.vars[i]] = {{"type", looks_like_iri(row[i]) ? "uri" : "literal"}, {"value", row[i]}};
    }
    bindings.push_back(std::move(b));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump();
}

ResultTable parse_sparql_json(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw ResultsFormatError(std::string("results body is not JSON: ") + e.what());
  }
  try {
    ResultTable t;
    if (!doc.is_object() || !doc.contains("head")) throw ResultsFormatError("results body lacks head");
    const json& head = doc.at("head");
    if (head.contains("vars")) t.vars = head.at("vars").get<std::vector<std::string>>();
    if (doc.contains("boolean")) {
      t.boolean = doc.at("boolean").get<bool>();
      return t;
    }
    for (const json& b : doc.at("results").at("bindings")) {
      std::vector<std::string> row(t.vars.size());
      for (std::size_t i = 0; i < t.vars.size(); ++i) {
        if (b.contains(t.vars[i])) row[i] = b.at(t.vars[i]).at("value").get<std::string>();
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  } catch (const json::exception& e) {
    throw ResultsFormatError(std::string("malformed results document: ") + e.what());
  }
}

std::string canonical_rows(const ResultTable& table) {
  if (table.boolean) return *table.boolean ? "true" : "false";
  std::vector<std::string> lines;
  lines.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line.push_back('\t');
      line += row[i];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out.append(l).push_back('\n');
  return out;
}

std::vector<std::string> result_variables(std::string_view text) {
  std::vector<std::string> vars;
  std::size_t pos = std::string_view::npos;
  // First SELECT outside comment lines.
  for (std::size_t line = 0; line < text.size();) {
    const auto end = std::min(text.find('\n', line), text.size());
    const auto l = text.substr(line, end - line);
    if (!l.starts_with("#")) {
      const auto s = l.find("SELECT");
      if (s != std::string_view::npos) {
        pos = line + s + 6;
        break;
      }
    }
    line = end + 1;
  }
  if (pos == std::string_view::npos) return vars;
  int depth = 0;
  bool alias_next = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char c = text[i];
    if (depth == 0 && (c == '{' || text.substr(i).starts_with("WHERE"))) break;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth > 0 && text.substr(i).starts_with("AS ")) alias_next = true;
    if (c == '?' || c == '$') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      if (depth == 0 || alias_next) vars.emplace_back(text.substr(i + 1, j - i - 1));
      alias_next = false;
      i = j - 1;
    }
  }
  return vars;
}

}  // namespace geobench
