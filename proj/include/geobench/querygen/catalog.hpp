#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geobench/querygen/dialect.hpp"
#include "geobench/querygen/header.hpp"

namespace geobench {

enum class Workload { Micro, Macro, Synthetic, Scalability };
/// Shape of the expected answer, used when verifying endpoint results.
enum class AnswerMode { Ids, Count, Construct, None };
/// Which reference evaluation answers the template, if any.
enum class OracleKind { Selection, Join, None };

std::string_view to_string(Workload w);
std::string_view to_string(AnswerMode m);
std::string_view to_string(OracleKind o);
std::optional<Workload> parse_workload(std::string_view s);

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tab-separated value sets; the first non-comment line names the columns.
struct ParameterPool {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t size() const { return rows.size(); }
  Bindings row(std::size_t i) const;
};

/// Throws CatalogError on ragged rows or a missing header.
ParameterPool parse_pool(std::string_view text);
ParameterPool load_pool(const std::filesystem::path& path);

struct QueryTemplate {
  std::string id;
  Workload workload = Workload::Micro;
  AnswerMode mode = AnswerMode::None;
  OracleKind oracle = OracleKind::None;
  /// Declared slots, in declaration order.
  std::vector<std::string> placeholders;
  Bindings defaults;
  std::string description;
  std::string scenario;  // macro only
  int order = 0;         // position inside its scenario
  std::string body;      // text without front matter
};

/// Parses one template file. Front-matter lines start with "#@" and hold
/// "key=value" pairs separated by ';'. Throws CatalogError.
QueryTemplate parse_template(std::string_view text, std::string_view origin = "<memory>");

struct Scenario {
  std::string id;
  std::vector<std::string> query_ids;  // execution order
  ParameterPool pool;
};

struct RenderedQuery {
  QueryHeader header;
  std::string text;
};

class QueryCatalog {
 public:
  /// Throws CatalogError on duplicate ids or scenario inconsistencies.
  void add(QueryTemplate t);
  void add_scenario_pool(const std::string& scenario, ParameterPool pool);

  bool empty() const { return templates_.empty(); }
  std::size_t size() const { return templates_.size(); }
  const QueryTemplate* find(std::string_view id) const;
  const QueryTemplate& at(std::string_view id) const;
  /// Templates of one workload in natural id order (Q2 before Q10).
  std::vector<const QueryTemplate*> workload(Workload w) const;
  std::vector<const QueryTemplate*> all() const;
  /// Macro scenarios keyed by id.
  const std::map<std::string, Scenario>& scenarios() const { return scenarios_; }
  const Scenario& scenario(std::string_view id) const;

 private:
  std::map<std::string, QueryTemplate, std::less<>> templates_;
  std::map<std::string, Scenario> scenarios_;
};

/// Loads every *.rq below `dir` plus pools/<scenario>.tsv sidecars. A
/// missing or empty directory yields an empty catalog.
QueryCatalog load_catalog(const std::filesystem::path& dir);

/// Directory of the stock catalog shipped with the sources.
std::filesystem::path stock_catalog_dir();

/// Header line plus dialect-rendered body. Bindings override template
/// defaults; the header records every declared placeholder's value.
RenderedQuery render_query(const QueryTemplate& t, const Bindings& bindings, const Dialect& dialect);

/// "Q2" < "Q10"; then plain string order.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace geobench
