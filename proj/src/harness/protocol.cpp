#include "geobench/harness/protocol.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <stdexcept>

#include "geobench/querygen/scenario.hpp"
#include "geobench/refeval/oracle.hpp"

namespace geobench {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMeasuredRuns = 3;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RawSample raw_row(const RunResult& r, int run_idx, const QuerySample& s) {
  RawSample row{r.workload, r.query_id, r.store, r.cache_state, run_idx, s.millis, std::string(to_string(s.status)),
                std::nullopt, s.digest};
  if (s.status == SampleStatus::Ok) row.cardinality = s.cardinality;
  return row;
}

std::string describe(const QuerySample& s) {
  if (s.status == SampleStatus::Error) return std::string(to_string(s.error)) + " error: " + s.message;
  return s.message;
}

// Records an ok sample's answer; returns false when the phase must stop.
bool take(RunResult& r, QuerySample&& s, bool measured) {
  if (measured) r.samples_ms.push_back(s.millis);
  if (s.status != SampleStatus::Ok) {
    r.status = to_string(s.status);
    r.message = describe(s);
    return false;
  }
  r.cardinality = s.cardinality;
  r.digest = s.digest;
  if (s.results) r.last_results = std::move(s.results);
  return true;
}

void finish(RunResult& r) {
  if (r.status.empty() && r.samples_ms.size() == kMeasuredRuns) {
    r.status = "ok";
    r.median_ms = median(r.samples_ms);
  }
}

RunResult start_phase(const std::string& workload, const MicroTask& task, const StoreProfile& store,
                      const char* cache_state) {
  RunResult r;
  r.workload = workload;
  r.query_id = task.query_id;
  r.store = store.name;
  r.cache_state = cache_state;
  r.timestamp = utc_now();
  return r;
}

RunResult unrenderable(RunResult r, const MicroTask& task, const RawSink& sink) {
  r.status = "error";
  r.message = "render error: " + task.render_error;
  sink(RawSample{r.workload, r.query_id, r.store, r.cache_state, 1, 0.0, "error", std::nullopt, ""});
  return r;
}

RunResult cold_phase(const std::string& workload, const MicroTask& task, const StoreProfile& store,
                     std::chrono::milliseconds limit, const QueryExecutor& execute, const CommandRunner& runner,
                     const RawSink& sink) {
  if (!store.cold_reset_command) {
    RunResult r = start_phase(workload, task, store, "cold-unavailable");
    r.status = "skipped";
    r.message = "store has no cold reset command";
    sink(RawSample{r.workload, r.query_id, r.store, r.cache_state, 1, 0.0, "skipped", std::nullopt, ""});
    return r;
  }
  RunResult r = start_phase(workload, task, store, "cold");
  if (!task.render_error.empty()) return unrenderable(std::move(r), task, sink);
  for (int run = 1; run <= kMeasuredRuns; ++run) {
    const CommandResult reset = runner(*store.cold_reset_command);
    if (reset.exit_code != 0) {
      r.status = "error";
      r.message = "cold reset exited with " + std::to_string(reset.exit_code) + ": " + reset.output;
      sink(RawSample{r.workload, r.query_id, r.store, r.cache_state, run, 0.0, "error", std::nullopt, ""});
      break;
    }
    QuerySample s = execute(task.text, limit);
    sink(raw_row(r, run, s));
    if (!take(r, std::move(s), true)) break;
  }
  finish(r);
  return r;
}

RunResult warm_phase(const std::string& workload, const MicroTask& task, const StoreProfile& store,
                     std::chrono::milliseconds limit, const QueryExecutor& execute, const RawSink& sink) {
  RunResult r = start_phase(workload, task, store, "warm");
  if (!task.render_error.empty()) return unrenderable(std::move(r), task, sink);
  for (int run = 0; run <= kMeasuredRuns; ++run) {
    QuerySample s = execute(task.text, limit);
    sink(raw_row(r, run, s));
    if (!take(r, std::move(s), run > 0)) break;
  }
  finish(r);
  return r;
}

std::optional<std::uint64_t> parse_bytes(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return std::nullopt;
  const auto end = text.find_first_of(" \t\r\n", begin);
  const std::string token = text.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
  std::uint64_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

Bindings layered(const Bindings& base, const Bindings& top) {
  Bindings out = base;
  for (const auto& [k, v] : top) out[k] = v;
  return out;
}

}  // namespace

double median(std::span<const double> samples) {
  if (samples.size() != kMeasuredRuns) {
    throw std::invalid_argument("median needs exactly three samples, got " + std::to_string(samples.size()));
  }
  double v[kMeasuredRuns];
  for (int i = 0; i < kMeasuredRuns; ++i) {
    if (!std::isfinite(samples[i])) throw std::invalid_argument("median needs finite samples");
    v[i] = samples[i];
  }
  std::sort(v, v + kMeasuredRuns);
  return v[1];
}

std::vector<RunResult> run_micro_query(const std::string& workload, const MicroTask& task, const StoreProfile& store,
                                       std::chrono::milliseconds limit, const QueryExecutor& execute,
                                       const CommandRunner& runner, const RawSink& sink) {
  std::vector<RunResult> out;
  out.push_back(cold_phase(workload, task, store, limit, execute, runner, sink));
  out.push_back(warm_phase(workload, task, store, limit, execute, sink));
  return out;
}

std::vector<RunResult> run_micro(const std::string& workload, std::span<const MicroTask> plan,
                                 const StoreProfile& store, std::chrono::milliseconds limit,
                                 const QueryExecutor& execute, const CommandRunner& runner, const RawSink& sink) {
  if (plan.empty()) throw std::invalid_argument("empty query plan");
  std::vector<RunResult> out;
  for (const auto& task : plan) {
    for (auto& r : run_micro_query(workload, task, store, limit, execute, runner, sink)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<MicroTask> micro_plan(const QueryCatalog& catalog, Workload workload, const StoreProfile& store,
                                  const Bindings& extra, const std::vector<std::string>& only) {
  std::vector<const QueryTemplate*> templates;
  if (only.empty()) {
    templates = catalog.workload(workload);
  } else {
    for (const auto& id : only) {
      const QueryTemplate& t = catalog.at(id);
      if (t.workload != workload) throw CatalogError(id + " is not a " + std::string(to_string(workload)) + " query");
      templates.push_back(&t);
    }
  }
  const Dialect dialect = store.make_dialect();
  const Bindings bindings = layered(store.graph_bindings(), extra);
  std::vector<MicroTask> out;
  for (const auto* t : templates) {
    MicroTask task;
    task.query_id = t->id;
    try {
      task.text = render_query(*t, bindings, dialect).text;
    } catch (const RenderError& e) {
      task.render_error = e.what();
    }
    out.push_back(std::move(task));
  }
  return out;
}

ScenarioResult run_macro(const QueryCatalog& catalog, const std::string& scenario_id, const StoreProfile& store,
                         const MacroOptions& options, const QueryExecutor& execute, const RawSink& sink) {
  const Scenario& scenario = catalog.scenario(scenario_id);
  const Dialect dialect = store.make_dialect();
  const Bindings graphs = store.graph_bindings();
  ScenarioResult result;
  result.scenario_id = scenario.id;
  result.store = store.name;
  result.budget = options.budget;
  std::vector<double> query_total(scenario.query_ids.size(), 0.0);
  for (const auto& qid : scenario.query_ids) result.per_query.push_back({qid, 0, 0, 0.0});

  double iteration_total = 0.0;
  const auto start = Clock::now();
  for (std::uint64_t i = 0; Clock::now() - start < options.budget; ++i) {
    const Bindings row = sample_scenario_params(scenario, options.seed, i);
    result.bindings.push_back(row);
    const Bindings bindings = layered(graphs, row);
    const int run_idx = static_cast<int>(i + 1);
    const auto iteration_start = Clock::now();
    std::string status = "ok";
    for (std::size_t q = 0; q < scenario.query_ids.size(); ++q) {
      const std::string query_id = scenario.id + "/" + scenario.query_ids[q];
      QuerySample s;
      try {
        s = execute(render_query(catalog.at(scenario.query_ids[q]), bindings, dialect).text, options.query_timeout);
      } catch (const RenderError& e) {
        s.status = SampleStatus::Error;
        s.message = e.what();
      }
      RawSample raw{"macro", query_id, store.name, "warm", run_idx, s.millis, std::string(to_string(s.status)),
                    std::nullopt, s.digest};
      if (s.status == SampleStatus::Ok) raw.cardinality = s.cardinality;
      sink(raw);
      if (s.status != SampleStatus::Ok) {
        ++result.per_query[q].failures;
        status = to_string(s.status);
        break;
      }
      ++result.per_query[q].executions;
      query_total[q] += s.millis;
    }
    const double millis = std::chrono::duration<double, std::milli>(Clock::now() - iteration_start).count();
    sink(RawSample{"macro", scenario.id, store.name, "warm", run_idx, millis, status, std::nullopt, ""});
    if (status == "ok") {
      ++result.iterations_completed;
      iteration_total += millis;
    } else {
      ++result.iterations_failed;
    }
  }
  if (result.iterations_completed > 0) {
    result.mean_iteration_ms = iteration_total / static_cast<double>(result.iterations_completed);
  }
  for (std::size_t q = 0; q < result.per_query.size(); ++q) {
    auto& stats = result.per_query[q];
    if (stats.executions > 0) stats.mean_ms = query_total[q] / static_cast<double>(stats.executions);
  }
  return result;
}

std::optional<std::uint64_t> probe_repo_size(const StoreProfile& store, const CommandRunner& runner) {
  if (store.repo_size_path) return path_bytes(*store.repo_size_path);
  if (store.repo_size_command) {
    const CommandResult r = runner(*store.repo_size_command);
    if (r.exit_code != 0) return std::nullopt;
    return parse_bytes(r.output);
  }
  return std::nullopt;
}

LoadMeasurement measure_load(const StoreProfile& store, std::span<const std::filesystem::path> chunks,
                             const CommandRunner& runner) {
  LoadMeasurement m;
  if (!store.load_command) {
    m.output = "store " + store.name + " has no load command";
    return m;
  }
  for (const auto& chunk : chunks) {
    const std::string command = replace_all(*store.load_command, "{file}", shell_quote(chunk.string()));
    const auto start = Clock::now();
    const CommandResult r = runner(command);
    m.millis += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (r.exit_code != 0) {
      m.output = "exit " + std::to_string(r.exit_code) + ": " + r.output;
      return m;
    }
  }
  m.ok = true;
  m.repo_bytes = probe_repo_size(store, runner);
  return m;
}

std::vector<StageResult> run_scalability(const QueryCatalog& catalog, const ScalabilitySection& section,
                                         const StoreProfile& store, const QueryExecutor& execute,
                                         const CommandRunner& runner, const RawSink& sink) {
  std::vector<StageResult> out;
  for (const auto& stage : section.stages) {
    StageResult sr;
    sr.stage = stage.name;
    sr.load = measure_load(store, stage.files, runner);
    sink(RawSample{"scalability", stage.name + "/load", store.name, "load", 1, sr.load.millis,
                   sr.load.ok ? "ok" : "error", sr.load.repo_bytes, ""});
    if (sr.load.ok) {
      auto tasks = micro_plan(catalog, Workload::Scalability, store, section.bindings);
      for (auto& t : tasks) t.query_id = stage.name + "/" + t.query_id;
      sr.queries = run_micro("scalability", tasks, store, section.limit, execute, runner, sink);
    }
    out.push_back(std::move(sr));
  }
  return out;
}

SyntheticRun run_synthetic(const SyntheticDataset& data, const Dataset& reference, const QueryCatalog& catalog,
                           const StoreProfile& store, const SyntheticPlanOptions& options,
                           std::chrono::milliseconds limit, bool verify_answers, const QueryExecutor& execute,
                           const CommandRunner& runner, const RawSink& sink) {
  SyntheticRun run;
  run.plan = plan_synthetic(data, catalog, store.make_dialect(), options);
  std::vector<MicroTask> tasks;
  for (const auto& p : run.plan) tasks.push_back({p.query_id, p.query.text, ""});
  run.results = run_micro("synthetic", tasks, store, limit, execute, runner, sink);
  if (!verify_answers) return run;
  for (std::size_t i = 0; i < run.plan.size(); ++i) {
    const PlannedQuery& p = run.plan[i];
    // Results come in (cold, warm) pairs per task; prefer the warm answer.
    const ResultTable* answer = nullptr;
    for (std::size_t j = 2 * i + 2; j-- > 2 * i;) {
      if (run.results[j].last_results) {
        answer = &*run.results[j].last_results;
        break;
      }
    }
    if (!answer) {
      VerificationReport rep;
      rep.query_id = p.query_id;
      rep.verdict = Verdict::Mismatch;
      rep.note = "no ok answer to verify";
      run.reports.push_back(std::move(rep));
      continue;
    }
    const auto expected = oracle_answer(reference, catalog, p.query.text);
    run.reports.push_back(verify(p.query_id, expected, *answer, catalog.at(p.query.header.template_id).mode));
  }
  return run;
}

}  // namespace geobench
