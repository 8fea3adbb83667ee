#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geobench {

/// One row of the raw results file.
///
/// run_idx 0 is the unmeasured warm-up; measured runs count from 1.
/// status is ok, timeout, error or skipped (cold phase without a reset
/// hook). cardinality is empty when unknown; load rows carry the
/// repository size there.
struct RawSample {
  std::string workload;
  std::string query_id;
  std::string store;
  std::string cache_state;  // cold, warm, cold-unavailable, load
  int run_idx = 0;
  double millis = 0.0;
  std::string status;
  std::optional<std::uint64_t> cardinality;
  std::string digest;

  friend bool operator==(const RawSample&, const RawSample&) = default;
};

inline constexpr const char* kRawHeader = "workload,query_id,store,cache_state,run_idx,millis,status,cardinality,digest";

using RawSink = std::function<void(const RawSample&)>;

class RawFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only writer; the header is written only to a new or empty file.
/// Every row is flushed before append() returns.
class RawWriter {
 public:
  explicit RawWriter(const std::filesystem::path& path);
  void append(const RawSample& s);
  RawSink sink();

 private:
  std::ofstream out_;
};

std::string format_raw_row(const RawSample& s);
/// Throws RawFormatError naming the offending line.
std::vector<RawSample> read_raw(std::istream& in);
std::vector<RawSample> read_raw_file(const std::filesystem::path& path);

}  // namespace geobench
