#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "geobench/querygen/catalog.hpp"
#include "geobench/refeval/dataset.hpp"
#include "geobench/refeval/results.hpp"

namespace geobench {

/// Oracle answer for a rendered catalog query, located through its header.
/// nullopt when the template has no oracle. Throws std::invalid_argument
/// for a missing header, an unknown template or bad parameters, and
/// UnknownNamespaceError for layers the dataset lacks.
std::optional<ResultTable> oracle_answer(const Dataset& ds, const QueryCatalog& catalog, std::string_view query_text);

/// SPARQL-protocol endpoint that answers header-tagged catalog queries from
/// a dataset. Accepts POST application/sparql-query, POST form-encoded
/// query=... and GET ?query=... on any path; replies
/// application/sparql-results+json, or 400 with a plain-text diagnostic.
class OracleServer {
 public:
  /// Binds immediately; port 0 picks a free port. Throws
  /// std::runtime_error when the address cannot be bound.
  OracleServer(std::shared_ptr<const Dataset> ds, std::shared_ptr<const QueryCatalog> catalog,
               const std::string& host = "127.0.0.1", int port = 0);
  ~OracleServer();
  OracleServer(const OracleServer&) = delete;
  OracleServer& operator=(const OracleServer&) = delete;

  int port() const;
  std::string url() const;  // http://host:port/sparql
  /// Blocks until stop() is called from another thread or a signal handler.
  void wait();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace geobench
