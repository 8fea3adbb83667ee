#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geobench/querygen/dialect.hpp"
#include "geobench/querygen/synthetic.hpp"

namespace geobench {

/// One benchmarked store configuration. Serial and parallel execution
/// modes of the same product are separate profiles.
struct StoreProfile {
  std::string name;
  std::string endpoint_url;  // http://host[:port]/path
  std::string dialect = "geosparql";
  std::optional<double> tolerance;  // point_tolerance dialect only
  /// Graph placeholder suffix (LANDCOVER for GRAPH_LANDCOVER) to graph IRI.
  std::map<std::string, std::string> graphs;
  std::optional<std::string> cold_reset_command;
  /// Bulk-load command; "{file}" is replaced by the quoted chunk path.
  std::optional<std::string> load_command;
  std::optional<std::filesystem::path> repo_size_path;
  /// Command printing the repository size in bytes on stdout.
  std::optional<std::string> repo_size_command;

  /// Throws std::invalid_argument for a malformed URL, an unknown dialect
  /// or a load command without {file}.
  void validate() const;
  Dialect make_dialect() const;
  /// GRAPH_* bindings for rendering, IRIs wrapped in angle brackets.
  Bindings graph_bindings() const;
};

struct EndpointAddress {
  std::string scheme_host_port;  // http://host:port
  std::string path;              // /sparql
};
/// Throws std::invalid_argument unless `url` is an http URL with a host.
EndpointAddress parse_endpoint_url(const std::string& url);

struct MicroSection {
  std::chrono::milliseconds limit{std::chrono::hours(1)};
  std::vector<std::string> queries;  // empty means all
};

struct MacroSection {
  std::chrono::milliseconds budget{std::chrono::hours(1)};
  std::chrono::milliseconds query_timeout{std::chrono::hours(1)};
  std::uint64_t seed = 0;
  std::vector<std::string> scenarios;  // empty means all
};

struct SyntheticSection {
  int n = 64;
  int k = 6;
  SyntheticPlanOptions plan;
  std::chrono::milliseconds limit{std::chrono::hours(1)};
  bool verify = true;
};

struct ScalabilityStage {
  std::string name;
  std::vector<std::filesystem::path> files;  // loaded in order, times summed
};

struct ScalabilitySection {
  std::chrono::milliseconds limit{std::chrono::hours(24)};
  std::vector<ScalabilityStage> stages;
  Bindings bindings;  // values for SC1-SC3 slots without defaults
};

struct HarnessConfig {
  std::vector<StoreProfile> stores;
  std::filesystem::path output = "results.csv";
  std::optional<std::filesystem::path> catalog;
  MicroSection micro;
  MacroSection macro;
  SyntheticSection synthetic;
  ScalabilitySection scalability;

  const StoreProfile& store(const std::string& name) const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document; relative paths resolve against `base_dir`. Throws
/// ConfigError naming the offending key.
HarnessConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = ".");
HarnessConfig load_config(const std::filesystem::path& path);

}  // namespace geobench
