#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geobench/harness/client.hpp"
#include "geobench/harness/command.hpp"
#include "geobench/harness/config.hpp"
#include "geobench/harness/raw_csv.hpp"
#include "geobench/querygen/catalog.hpp"
#include "geobench/querygen/synthetic.hpp"
#include "geobench/refeval/dataset.hpp"
#include "geobench/refeval/verify.hpp"

namespace geobench {

/// Middle order statistic. Throws std::invalid_argument unless given
/// exactly three finite samples.
double median(std::span<const double> samples);

/// One (query, store, cache state) measurement.
struct RunResult {
  std::string workload;
  std::string query_id;
  std::string store;
  std::string cache_state;  // cold, warm or cold-unavailable
  std::vector<double> samples_ms;  // measured runs only
  std::optional<double> median_ms;  // present iff three ok samples
  std::string status;  // ok, timeout, error or skipped
  std::size_t cardinality = 0;
  std::string digest;
  std::string message;
  std::string timestamp;  // UTC, ISO 8601, when the phase started
  std::optional<ResultTable> last_results;  // last ok answer when kept
};

struct MicroTask {
  std::string query_id;
  std::string text;
  std::string render_error;  // non-empty when the template could not be rendered
};

/// Cold phase then warm phase for one query.
///
/// Cold: reset, run; three times. Without a reset hook the phase is
/// reported as cold-unavailable and nothing is measured. Warm: one
/// unmeasured warm-up (run_idx 0), then three runs. A timeout or error
/// ends its phase. Every execution is appended to `sink`. A task with a
/// render error yields error results without contacting the store.
std::vector<RunResult> run_micro_query(const std::string& workload, const MicroTask& task, const StoreProfile& store,
                                       std::chrono::milliseconds limit, const QueryExecutor& execute,
                                       const CommandRunner& runner, const RawSink& sink);

std::vector<RunResult> run_micro(const std::string& workload, std::span<const MicroTask> plan,
                                 const StoreProfile& store, std::chrono::milliseconds limit,
                                 const QueryExecutor& execute, const CommandRunner& runner, const RawSink& sink);

/// Templates of `workload` rendered with their defaults, store graphs and
/// `extra` bindings, in natural id order. `only` restricts to the listed
/// ids and throws CatalogError for an unknown one. A template that cannot
/// be rendered keeps its id and reports why.
std::vector<MicroTask> micro_plan(const QueryCatalog& catalog, Workload workload, const StoreProfile& store,
                                  const Bindings& extra = {}, const std::vector<std::string>& only = {});

struct MacroOptions {
  std::chrono::milliseconds budget{std::chrono::hours(1)};
  std::uint64_t seed = 0;
  std::chrono::milliseconds query_timeout{std::chrono::hours(1)};
};

struct MacroQueryStats {
  std::string query_id;
  std::size_t executions = 0;  // ok executions
  std::size_t failures = 0;
  double mean_ms = 0.0;  // over ok executions
};

struct ScenarioResult {
  std::string scenario_id;
  std::string store;
  std::chrono::milliseconds budget{0};
  std::size_t iterations_completed = 0;
  std::size_t iterations_failed = 0;
  double mean_iteration_ms = 0.0;  // over completed iterations
  std::vector<MacroQueryStats> per_query;  // scenario order
  std::vector<Bindings> bindings;  // drawn pool row per iteration, failed ones included
};

/// Iterates the scenario until the budget is spent; an iteration starts
/// only while time remains. Bindings are drawn with
/// sample_scenario_params(seed, i) and layered over store graphs. A failed
/// query aborts its iteration. Caches are never reset.
ScenarioResult run_macro(const QueryCatalog& catalog, const std::string& scenario_id, const StoreProfile& store,
                         const MacroOptions& options, const QueryExecutor& execute, const RawSink& sink);

struct LoadMeasurement {
  bool ok = false;
  double millis = 0.0;  // summed over chunks
  std::optional<std::uint64_t> repo_bytes;  // nullopt when no probe or it failed
  std::string output;  // of the failing command
};

/// Repository size from the store's path probe, else its command probe
/// (which must print a byte count).
std::optional<std::uint64_t> probe_repo_size(const StoreProfile& store, const CommandRunner& runner);

/// Runs the load command once per chunk, in order, and sums wall times.
/// Stops at the first nonzero exit. The size probe runs after success.
LoadMeasurement measure_load(const StoreProfile& store, std::span<const std::filesystem::path> chunks,
                             const CommandRunner& runner);

struct StageResult {
  std::string stage;
  LoadMeasurement load;
  std::vector<RunResult> queries;
};

/// Per stage: load, size probe, then the scalability templates under the
/// micro protocol. A failed load skips that stage's queries only.
std::vector<StageResult> run_scalability(const QueryCatalog& catalog, const ScalabilitySection& section,
                                         const StoreProfile& store, const QueryExecutor& execute,
                                         const CommandRunner& runner, const RawSink& sink);

struct SyntheticRun {
  std::vector<PlannedQuery> plan;
  std::vector<RunResult> results;
  std::vector<VerificationReport> reports;  // one per planned query when verifying
};

/// Plans the synthetic workload in the store's dialect, measures it under
/// the micro protocol and, when `verify_answers`, checks the last ok answer
/// of each query against the reference evaluator.
SyntheticRun run_synthetic(const SyntheticDataset& data, const Dataset& reference, const QueryCatalog& catalog,
                           const StoreProfile& store, const SyntheticPlanOptions& options,
                           std::chrono::milliseconds limit, bool verify_answers, const QueryExecutor& execute,
                           const CommandRunner& runner, const RawSink& sink);

}  // namespace geobench
