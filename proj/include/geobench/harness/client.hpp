#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "geobench/harness/config.hpp"
#include "geobench/refeval/results.hpp"

namespace geobench {

enum class SampleStatus { Ok, Timeout, Error };
/// Cause of an Error sample.
enum class ErrorClass { None, Transport, Http, Malformed };

std::string_view to_string(SampleStatus s);
std::string_view to_string(ErrorClass e);

struct QuerySample {
  /// Submission to fully parsed answer; capped near the limit on timeout.
  double millis = 0.0;
  SampleStatus status = SampleStatus::Ok;
  ErrorClass error = ErrorClass::None;
  std::string message;
  std::size_t cardinality = 0;
  std::string digest;  // SHA-256 of canonical_rows; empty unless ok
  std::optional<ResultTable> results;
};

/// Executes one query text under a wall-clock limit.
using QueryExecutor = std::function<QuerySample(const std::string& query, std::chrono::milliseconds limit)>;

/// SPARQL protocol POST against the store endpoint. The limit is enforced
/// client-side: the connection is aborted once it elapses, whatever the
/// server does.
QuerySample execute_query(const StoreProfile& store, const std::string& query, std::chrono::milliseconds limit,
                          bool keep_results = false);

QueryExecutor http_executor(const StoreProfile& store, bool keep_results = false);

}  // namespace geobench
