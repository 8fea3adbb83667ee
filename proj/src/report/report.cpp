#include "geobench/report/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

#include "geobench/querygen/catalog.hpp"

namespace geobench {

namespace {

using Key = std::pair<std::string, std::string>;  // query, store

constexpr int kMeasuredRuns = 3;

bool mean_mode(const std::string& workload, const std::string& cache_state) {
  return workload == "macro" || cache_state == "load";
}

CellState failure_state(const std::string& status) {
  if (status == "timeout") return CellState::Timeout;
  if (status == "skipped") return CellState::Skipped;
  return CellState::Error;
}

SummaryCell median_cell(const std::map<int, RawSample>& runs) {
  for (const auto& [idx, s] : runs) {
    if (s.status != "ok") return {failure_state(s.status), 0.0, false};
  }
  double v[kMeasuredRuns];
  for (int i = 1; i <= kMeasuredRuns; ++i) {
    const auto it = runs.find(i);
    if (it == runs.end()) return {};
    v[i - 1] = it->second.millis;
  }
  std::sort(v, v + kMeasuredRuns);
  return {CellState::Value, v[1], false};
}

SummaryCell mean_cell(const std::map<int, RawSample>& runs) {
  double total = 0.0;
  std::size_t ok = 0;
  std::optional<CellState> failed;
  for (const auto& [idx, s] : runs) {
    if (s.status == "ok") {
      total += s.millis;
      ++ok;
    } else if (!failed || s.status == "timeout") {
      failed = failure_state(s.status);
    }
  }
  if (ok > 0) return {CellState::Value, total / static_cast<double>(ok), false};
  if (failed) return {*failed, 0.0, false};
  return {};
}

void flag_best(SummaryTable& t) {
  for (auto& row : t.rows) {
    std::optional<double> best;
    for (const auto& c : row.cells) {
      if (c.state == CellState::Value && (!best || c.millis < *best)) best = c.millis;
    }
    for (auto& c : row.cells) c.best = c.state == CellState::Value && best && c.millis == *best;
  }
}

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false, dirty = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
      continue;
    }
    dirty = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rec.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      rec.push_back(std::move(field));
      field.clear();
      out.push_back(std::move(rec));
      rec.clear();
      dirty = false;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (quoted) throw ReportError("unterminated quoted field in summary CSV");
  if (dirty) {
    rec.push_back(std::move(field));
    out.push_back(std::move(rec));
  }
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string markdown_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\\') out.push_back('\\');
    out.push_back(c == '\n' ? ' ' : c);
  }
  return out;
}

std::string marker(const SummaryCell& c, std::chrono::milliseconds limit) {
  switch (c.state) {
    case CellState::Timeout: return ">" + format_limit(limit);
    case CellState::Error: return "error";
    case CellState::Skipped: return "skipped";
    case CellState::Missing: return "missing";
    case CellState::Value: break;
  }
  return "";
}

}  // namespace

std::string format_limit(std::chrono::milliseconds limit) {
  const auto ms = limit.count();
  if (ms > 0 && ms % 3'600'000 == 0) return std::to_string(ms / 3'600'000) + "h";
  if (ms > 0 && ms % 60'000 == 0) return std::to_string(ms / 60'000) + "min";
  if (ms > 0 && ms % 1000 == 0) return std::to_string(ms / 1000) + "s";
  return std::to_string(ms) + "ms";
}

std::chrono::milliseconds default_limit(std::string_view workload) {
  return workload == "scalability" ? std::chrono::hours(24) : std::chrono::hours(1);
}

SummaryTable aggregate(const std::vector<RawSample>& samples, const std::string& workload,
                       const std::string& cache_state, std::chrono::milliseconds limit) {
  SummaryTable t;
  t.workload = workload;
  t.cache_state = cache_state;
  t.limit = limit;
  std::map<Key, std::map<int, RawSample>> groups;
  std::set<std::string> conflicts;
  std::set<std::string> stores;
  for (const auto& s : samples) {
    const bool cache_match = s.cache_state == cache_state || (cache_state == "cold" && s.cache_state == "cold-unavailable");
    if (s.workload != workload || !cache_match) continue;
    stores.insert(s.store);
    auto& runs = groups[{s.query_id, s.store}];
    const auto [it, inserted] = runs.emplace(s.run_idx, s);
    if (!inserted && !(it->second == s)) {
      conflicts.insert(s.query_id + " @ " + s.store + " run " + std::to_string(s.run_idx));
    }
  }
  if (!conflicts.empty()) {
    std::string msg = "conflicting samples for:";
    for (const auto& c : conflicts) msg += "\n  " + c;
    throw ReportError(msg);
  }
  t.stores.assign(stores.begin(), stores.end());
  std::vector<std::string> queries;
  for (const auto& [key, runs] : groups) queries.push_back(key.first);
  std::sort(queries.begin(), queries.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  queries.erase(std::unique(queries.begin(), queries.end()), queries.end());
  const bool mean = mean_mode(workload, cache_state);
  for (const auto& q : queries) {
    SummaryRow row;
    row.query_id = q;
    for (const auto& store : t.stores) {
      const auto it = groups.find({q, store});
      if (it == groups.end()) {
        row.cells.emplace_back();
      } else {
        row.cells.push_back(mean ? mean_cell(it->second) : median_cell(it->second));
      }
    }
    t.rows.push_back(std::move(row));
  }
  flag_best(t);
  return t;
}

std::string emit(const SummaryTable& t, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Csv) {
    out = "query_id";
    for (const auto& s : t.stores) out += "," + csv_field(s);
    out += "\n";
    for (const auto& row : t.rows) {
      out += csv_field(row.query_id);
      for (const auto& c : row.cells) out += "," + csv_field(c.state == CellState::Value ? shortest(c.millis) : marker(c, t.limit));
      out += "\n";
    }
    return out;
  }
  const bool seconds = t.workload == "macro";
  out = "Workload " + markdown_escape(t.workload) + ", cache " + markdown_escape(t.cache_state) + ", " +
        (seconds ? "mean seconds" : "milliseconds") + ", limit " + format_limit(t.limit) + "\n\n";
  out += "| query |";
  for (const auto& s : t.stores) out += " " + markdown_escape(s) + " |";
  out += "\n| --- |";
  for (std::size_t i = 0; i < t.stores.size(); ++i) out += " ---: |";
  out += "\n";
  for (const auto& row : t.rows) {
    out += "| " + markdown_escape(row.query_id) + " |";
    for (const auto& c : row.cells) {
      std::string text = c.state == CellState::Value ? fixed2(seconds ? c.millis / 1000.0 : c.millis) : marker(c, t.limit);
      if (c.best) text = "**" + text + "**";
      out += " " + text + " |";
    }
    out += "\n";
  }
  return out;
}

SummaryTable parse_summary_csv(std::string_view text, const std::string& workload, const std::string& cache_state,
                               std::chrono::milliseconds limit) {
  const auto records = csv_records(text);
  if (records.empty() || records.front().empty() || records.front().front() != "query_id") {
    throw ReportError("summary CSV must start with a query_id header");
  }
  SummaryTable t;
  t.workload = workload;
  t.cache_state = cache_state;
  t.limit = limit;
  t.stores.assign(records.front().begin() + 1, records.front().end());
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != t.stores.size() + 1) {
      throw ReportError("summary CSV line " + std::to_string(r + 1) + " has " + std::to_string(rec.size()) + " fields");
    }
    SummaryRow row;
    row.query_id = rec[0];
    for (std::size_t i = 1; i < rec.size(); ++i) {
      const std::string& f = rec[i];
      SummaryCell c;
      if (!f.empty() && f.front() == '>') {
        c.state = CellState::Timeout;
      } else if (f == "error") {
        c.state = CellState::Error;
      } else if (f == "skipped") {
        c.state = CellState::Skipped;
      } else if (f == "missing") {
        c.state = CellState::Missing;
      } else {
        const auto res = std::from_chars(f.data(), f.data() + f.size(), c.millis);
        if (f.empty() || res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
          throw ReportError("summary CSV line " + std::to_string(r + 1) + ": bad cell '" + f + "'");
        }
        c.state = CellState::Value;
      }
      row.cells.push_back(c);
    }
    t.rows.push_back(std::move(row));
  }
  flag_best(t);
  return t;
}

Comparison compare(const SummaryTable& baseline, const SummaryTable& current, double threshold_percent) {
  Comparison out;
  if (baseline.workload != current.workload || baseline.cache_state != current.cache_state) {
    out.key_mismatches.push_back("tables differ in workload or cache state: " + baseline.workload + "/" +
                                 baseline.cache_state + " vs " + current.workload + "/" + current.cache_state);
  }
  std::map<Key, SummaryCell> base;
  for (const auto& row : baseline.rows) {
    for (std::size_t i = 0; i < baseline.stores.size(); ++i) base[{row.query_id, baseline.stores[i]}] = row.cells[i];
  }
  std::set<Key> seen;
  for (const auto& row : current.rows) {
    for (std::size_t i = 0; i < current.stores.size(); ++i) {
      const Key key{row.query_id, current.stores[i]};
      const auto it = base.find(key);
      if (it == base.end()) {
        out.key_mismatches.push_back(key.first + " @ " + key.second + " only in current");
        continue;
      }
      seen.insert(key);
      const SummaryCell& b = it->second;
      const SummaryCell& c = row.cells[i];
      if (b.state != CellState::Value) continue;
      if (c.state == CellState::Timeout || c.state == CellState::Error) {
        out.regressions.push_back({key.first, key.second, b, c, c.state == CellState::Timeout ? "ok to timeout" : "ok to error"});
      } else if (c.state == CellState::Value && c.millis > b.millis * (1.0 + threshold_percent / 100.0)) {
        const double pct = b.millis > 0 ? (c.millis / b.millis - 1.0) * 100.0 : 100.0;
        out.regressions.push_back({key.first, key.second, b, c, "slower by " + fixed2(pct) + "%"});
      }
    }
  }
  for (const auto& [key, cell] : base) {
    if (!seen.count(key)) out.key_mismatches.push_back(key.first + " @ " + key.second + " only in baseline");
  }
  return out;
}

}  // namespace geobench
