#include "geobench/refeval/verify.hpp"

#include <algorithm>
#include <map>

#include "geobench/geometry/geometry.hpp"
#include "geobench/geometry/wkt.hpp"

namespace geobench {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Unverifiable: return "unverifiable";
  }
  return "?";
}

namespace {

std::string canonical_value(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  if (v.size() >= 2 && v.front() == '<' && v.back() == '>') v = v.substr(1, v.size() - 2);
  return std::string(v);
}

// Endpoint rows re-ordered to the oracle's variables; nullopt when the
// variable sets differ.
std::optional<std::vector<std::vector<std::string>>> aligned_rows(const ResultTable& oracle,
                                                                  const ResultTable& endpoint) {
  std::vector<std::string> a = oracle.vars, b = endpoint.vars;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  std::vector<std::size_t> from(oracle.vars.size());
  for (std::size_t i = 0; i < oracle.vars.size(); ++i) {
    from[i] = static_cast<std::size_t>(std::find(endpoint.vars.begin(), endpoint.vars.end(), oracle.vars[i]) -
                                       endpoint.vars.begin());
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(endpoint.rows.size());
  for (const auto& r : endpoint.rows) {
    std::vector<std::string> out(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) out[i] = from[i] < r.size() ? canonical_value(r[from[i]]) : "";
    rows.push_back(std::move(out));
  }
  return rows;
}

std::string join_row(const std::vector<std::string>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s.push_back(' ');
    s += row[i];
  }
  return s;
}

std::vector<std::vector<std::string>> canonical(const std::vector<std::vector<std::string>>& rows) {
  auto out = rows;
  for (auto& r : out) {
    for (auto& v : r) v = canonical_value(v);
  }
  return out;
}

bool cell_equal(const std::string& a, const std::string& b) {
  if (a == b) return true;
  try {
    return equal_within(parse_wkt(a), parse_wkt(b), kConstructTolerance);
  } catch (const std::exception&) {
    return false;
  }
}

void compare_exact(const std::vector<std::vector<std::string>>& want, const std::vector<std::vector<std::string>>& got,
                   VerificationReport& r) {
  std::map<std::string, long> balance;
  for (const auto& row : want) ++balance[join_row(row)];
  for (const auto& row : got) --balance[join_row(row)];
  for (const auto& [row, n] : balance) {
    for (long i = 0; i < n; ++i) r.missing.push_back(row);
    for (long i = 0; i < -n; ++i) r.spurious.push_back(row);
  }
}

void compare_geometric(const std::vector<std::vector<std::string>>& want,
                       const std::vector<std::vector<std::string>>& got, VerificationReport& r) {
  std::vector<bool> used(got.size(), false);
  for (const auto& row : want) {
    bool found = false;
    for (std::size_t j = 0; j < got.size() && !found; ++j) {
      if (used[j] || got[j].size() != row.size()) continue;
      found = std::equal(row.begin(), row.end(), got[j].begin(), cell_equal);
      if (found) used[j] = true;
    }
    if (!found) r.missing.push_back(join_row(row));
  }
  for (std::size_t j = 0; j < got.size(); ++j) {
    if (!used[j]) r.spurious.push_back(join_row(got[j]));
  }
}

}  // namespace

VerificationReport verify(std::string query_id, const std::optional<ResultTable>& oracle,
                          const ResultTable& endpoint, AnswerMode mode) {
  VerificationReport r;
  r.query_id = std::move(query_id);
  r.endpoint_cardinality = endpoint.cardinality();
  if (!oracle || mode == AnswerMode::None) {
    r.note = oracle ? "template declares no comparable answer" : "no oracle answer for this query";
    return r;
  }
  r.oracle_cardinality = oracle->cardinality();
  if (oracle->boolean || endpoint.boolean) {
    const bool same = oracle->boolean == endpoint.boolean;
    r.verdict = same ? Verdict::Match : Verdict::Mismatch;
    if (!same) r.note = "boolean answers differ";
    return r;
  }
  const auto got = aligned_rows(*oracle, endpoint);
  if (!got) {
    r.verdict = Verdict::Mismatch;
    r.note = "projected variables differ";
    return r;
  }
  const auto want = canonical(oracle->rows);
  if (mode == AnswerMode::Construct) {
    compare_geometric(want, *got, r);
  } else {
    compare_exact(want, *got, r);
  }
  const bool match = r.missing.empty() && r.spurious.empty() && *r.oracle_cardinality == r.endpoint_cardinality;
  r.verdict = match ? Verdict::Match : Verdict::Mismatch;
  return r;
}

}  // namespace geobench
