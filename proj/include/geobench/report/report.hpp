#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geobench/harness/raw_csv.hpp"

namespace geobench {

enum class CellState { Value, Timeout, Error, Skipped, Missing };

struct SummaryCell {
  CellState state = CellState::Missing;
  double millis = 0.0;  // Value cells only
  bool best = false;    // row minimum among Value cells

  friend bool operator==(const SummaryCell&, const SummaryCell&) = default;
};

struct SummaryRow {
  std::string query_id;
  std::vector<SummaryCell> cells;  // aligned with SummaryTable::stores

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// Queries by stores. Every cell is present; absent measurements are
/// Missing cells.
struct SummaryTable {
  std::string workload;
  std::string cache_state;
  std::chrono::milliseconds limit{0};
  std::vector<std::string> stores;  // sorted
  std::vector<SummaryRow> rows;     // natural query order

  bool empty() const { return rows.empty(); }
  friend bool operator==(const SummaryTable&, const SummaryTable&) = default;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "1h" for 3,600 s, "24h", "90min", "10s", else milliseconds.
std::string format_limit(std::chrono::milliseconds limit);

/// Per-workload default limit used to render timeouts.
std::chrono::milliseconds default_limit(std::string_view workload);

/// Cells from raw samples of one workload and cache state (cold includes
/// cold-unavailable rows). Macro and load rows average their ok samples;
/// other cells take the median of the three measured runs, and a timeout,
/// error or skip in any run marks the cell. Throws ReportError listing every
/// (query, store, run) key that has conflicting samples.
SummaryTable aggregate(const std::vector<RawSample>& samples, const std::string& workload,
                       const std::string& cache_state, std::chrono::milliseconds limit);

enum class ReportFormat { Csv, Markdown };

/// Deterministic bytes. CSV cells hold the shortest round-trip decimal of
/// the milliseconds or a marker (">1h", "error", "skipped", "missing");
/// markdown shows two decimals, in seconds for macro tables and
/// milliseconds otherwise, with the best cell in bold.
std::string emit(const SummaryTable& table, ReportFormat format);

/// Inverse of emit(csv) given the metadata it does not carry.
SummaryTable parse_summary_csv(std::string_view text, const std::string& workload, const std::string& cache_state,
                               std::chrono::milliseconds limit);

struct Regression {
  std::string query_id;
  std::string store;
  SummaryCell baseline;
  SummaryCell current;
  std::string reason;
};

struct Comparison {
  std::vector<Regression> regressions;
  std::vector<std::string> key_mismatches;  // cells present on one side only
};

/// Cells slower by more than `threshold_percent`, plus every transition
/// from a value to a timeout or error. Compares the common cells.
Comparison compare(const SummaryTable& baseline, const SummaryTable& current, double threshold_percent);

}  // namespace geobench
