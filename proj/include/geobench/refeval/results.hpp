#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geobench {

/// Query answer in solution-sequence form. Cells hold the term's lexical
/// value (IRIs without angle brackets); unbound cells are empty.
struct ResultTable {
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> rows;
  std::optional<bool> boolean;  // ASK answers

  std::size_t cardinality() const { return boolean ? 1 : rows.size(); }
  friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

class ResultsFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// application/sparql-results+json. Cells that look like absolute IRIs are
/// written as "uri" terms, everything else as plain literals.
std::string to_sparql_json(const ResultTable& table);
/// Throws ResultsFormatError on anything that is not a results document.
ResultTable parse_sparql_json(std::string_view body);

/// Rows joined by '\t' and '\n' after sorting, the basis of result digests.
std::string canonical_rows(const ResultTable& table);

/// Variables projected by the first SELECT clause of a query text, in
/// order; expressions contribute their AS alias.
std::vector<std::string> result_variables(std::string_view query_text);

}  // namespace geobench
