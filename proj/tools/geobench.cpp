// Command-line front end: data generation, query rendering, workload runs,
// reporting and the reference endpoint.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "geobench/querygen/scenario.hpp"
#include "geobench/generator/ntriples.hpp"
#include "geobench/harness/protocol.hpp"
#include "geobench/querygen/synthetic.hpp"
#include "geobench/refeval/oracle.hpp"
#include "geobench/report/report.hpp"

using namespace geobench;

namespace {

std::atomic<bool> g_interrupted{false};

void on_signal(int) { g_interrupted = true; }

QueryCatalog open_catalog(const std::string& dir) {
  QueryCatalog c = load_catalog(dir.empty() ? stock_catalog_dir() : std::filesystem::path(dir));
  if (c.empty()) throw CatalogError("no templates found in " + (dir.empty() ? stock_catalog_dir().string() : dir));
  return c;
}

Bindings parse_binds(const std::vector<std::string>& binds) {
  Bindings out;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--bind", "expected NAME=VALUE, got " + b);
    out[b.substr(0, eq)] = b.substr(eq + 1);
  }
  return out;
}

std::vector<PredicateName> parse_functions(const std::vector<std::string>& names) {
  std::vector<PredicateName> out;
  for (const auto& n : names) {
    const auto p = parse_function_token(n);
    if (!p) throw CLI::ValidationError("--functions", "unknown function " + n);
    out.push_back(*p);
  }
  return out;
}

// ---- generate / slice ----

struct GenerateArgs {
  int n = 6, k = 0, precision = 6;
  std::vector<std::string> layers;
  std::string out = "-";
};

int cmd_generate(const GenerateArgs& a) {
  GeneratorParams p;
  p.n = a.n;
  p.k = a.k;
  p.precision = a.precision;
  const SyntheticDataset ds = generate_dataset(p);
  EmitOptions opt;
  opt.precision = a.precision;
  if (!a.layers.empty()) {
    opt.layers.emplace();
    for (const auto& l : a.layers) {
      const auto kind = parse_layer(l);
      if (!kind) throw CLI::ValidationError("--layers", "unknown layer " + l);
      opt.layers->insert(*kind);
    }
  }
  std::uint64_t triples = 0;
  std::string digest;
  if (a.out == "-") {
    triples = emit_ntriples(ds.layers, std::cout, opt);
    std::cout.flush();
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + a.out);
    triples = emit_ntriples(ds.layers, file, opt);
  }
  for (const auto& layer : ds.layers) {
    if (!opt.layers || opt.layers->count(layer.kind)) std::cerr << layer.slug() << ": " << layer.size() << " features\n";
  }
  std::cerr << "triples: " << triples << "\n";
  return 0;
}

int cmd_slice(const std::string& in_path, const std::string& out_path, std::uint64_t max_triples) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + in_path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  std::cerr << "triples: " << slice_ntriples(in, out, max_triples) << "\n";
  return 0;
}

// ---- queries ----

struct QueriesArgs {
  std::string workload = "synthetic";
  int n = 64, k = 6;
  std::string dialect = "geosparql";
  std::optional<double> tolerance;
  std::string out;
  std::string catalog;
  std::vector<double> fractions;
  std::vector<std::string> functions;
  std::vector<std::string> binds;
};

int cmd_queries(const QueriesArgs& a) {
  const QueryCatalog catalog = open_catalog(a.catalog);
  const Dialect dialect = dialect_by_name(a.dialect, a.tolerance);
  const auto workload = parse_workload(a.workload);
  if (!workload) throw CLI::ValidationError("--workload", "unknown workload " + a.workload);
  std::filesystem::create_directories(a.out);
  const std::filesystem::path dir(a.out);
  std::ofstream manifest(dir / "manifest.tsv");
  std::size_t written = 0;
  if (*workload == Workload::Synthetic) {
    GeneratorParams p;
    p.n = a.n;
    p.k = a.k;
    SyntheticPlanOptions opt;
    if (!a.fractions.empty()) opt.fractions = a.fractions;
    if (!a.functions.empty()) opt.functions = parse_functions(a.functions);
    const auto plan = plan_synthetic(generate_dataset(p), catalog, dialect, opt);
    manifest << "query_id\ttarget\tachieved\tcount\ttotal\n";
    for (const auto& q : plan) {
      std::ofstream(dir / (q.query_id + ".rq")) << q.query.text;
      manifest << q.query_id;
      if (q.calibration) {
        manifest << '\t' << q.calibration->target << '\t' << q.calibration->achieved << '\t' << q.calibration->count
                 << '\t' << q.calibration->total << '\n';
      } else {
        manifest << "\t\t\t\t\n";
      }
      ++written;
    }
  } else if (*workload == Workload::Macro) {
    manifest << "query_id\tstatus\n";
    for (const auto& [id, scenario] : catalog.scenarios()) {
      const Bindings row = scenario.pool.size() ? sample_scenario_params(scenario, 0, 0) : Bindings{};
      for (const auto& qid : scenario.query_ids) {
        Bindings b = row;
        for (const auto& [k, v] : parse_binds(a.binds)) b[k] = v;
        try {
          std::ofstream(dir / (qid + ".rq")) << render_query(catalog.at(qid), b, dialect).text;
          manifest << qid << "\trendered\n";
          ++written;
        } catch (const RenderError& e) {
          manifest << qid << '\t' << e.what() << '\n';
        }
      }
    }
  } else {
    manifest << "query_id\tstatus\n";
    StoreProfile store;
    store.dialect = a.dialect;
    store.tolerance = a.tolerance;
    for (const auto& task : micro_plan(catalog, *workload, store, parse_binds(a.binds))) {
      if (task.render_error.empty()) {
        std::ofstream(dir / (task.query_id + ".rq")) << task.text;
        manifest << task.query_id << "\trendered\n";
        ++written;
      } else {
        manifest << task.query_id << '\t' << task.render_error << '\n';
      }
    }
  }
  std::cerr << written << " queries written to " << a.out << "\n";
  return 0;
}

// ---- run ----

struct RunArgs {
  std::string config;
  std::string workload;
  std::vector<std::string> stores;
  std::optional<double> budget;
  std::optional<std::uint64_t> seed;
  bool parallel_stores = false;
};

void print_result(const RunResult& r) {
  std::cerr << r.store << " " << r.query_id << " " << r.cache_state << ": " << r.status;
  if (r.median_ms) std::cerr << " median " << *r.median_ms << " ms";
  if (!r.message.empty()) std::cerr << " (" << r.message << ")";
  std::cerr << "\n";
}

// Runs one store's share of the workload; returns false on mismatches or failed stages.
bool run_store(const HarnessConfig& cfg, const QueryCatalog& catalog, const StoreProfile& store,
               const RunArgs& a, const RawSink& sink, std::mutex& log_mu) {
  const auto log = [&](const auto& fn) {
    std::lock_guard lock(log_mu);
    fn();
  };
  const auto workload = *parse_workload(a.workload);
  bool clean = true;
  switch (workload) {
    case Workload::Micro: {
      const auto plan = micro_plan(catalog, Workload::Micro, store, {}, cfg.micro.queries);
      for (const auto& r : run_micro("micro", plan, store, cfg.micro.limit, http_executor(store), run_shell, sink)) {
        log([&] { print_result(r); });
      }
      break;
    }
    case Workload::Macro: {
      MacroOptions opt;
      opt.budget = a.budget ? std::chrono::milliseconds(static_cast<std::int64_t>(*a.budget * 1000)) : cfg.macro.budget;
      opt.seed = a.seed.value_or(cfg.macro.seed);
      opt.query_timeout = cfg.macro.query_timeout;
      std::vector<std::string> ids = cfg.macro.scenarios;
      if (ids.empty()) {
        for (const auto& [id, s] : catalog.scenarios()) ids.push_back(id);
      }
      for (const auto& id : ids) {
        const auto r = run_macro(catalog, id, store, opt, http_executor(store), sink);
        log([&] {
          std::cerr << store.name << " " << id << ": " << r.iterations_completed << " iterations, "
                    << r.iterations_failed << " failed, mean " << r.mean_iteration_ms << " ms\n";
        });
      }
      break;
    }
    case Workload::Synthetic: {
      GeneratorParams p;
      p.n = cfg.synthetic.n;
      p.k = cfg.synthetic.k;
      const SyntheticDataset data = generate_dataset(p);
      const Dataset reference = Dataset::from(data);
      const auto run = run_synthetic(data, reference, catalog, store, cfg.synthetic.plan, cfg.synthetic.limit,
                                     cfg.synthetic.verify, http_executor(store, cfg.synthetic.verify), run_shell, sink);
      log([&] {
        for (const auto& r : run.results) print_result(r);
        for (const auto& rep : run.reports) {
          if (rep.verdict != Verdict::Match) {
            clean = false;
            std::cerr << store.name << " " << rep.query_id << ": verify " << to_string(rep.verdict) << " "
                      << rep.note << " (" << rep.missing.size() << " missing, " << rep.spurious.size()
                      << " spurious)\n";
          }
        }
        std::cerr << store.name << ": " << run.reports.size() << " answers verified\n";
      });
      break;
    }
    case Workload::Scalability: {
      for (const auto& stage : run_scalability(catalog, cfg.scalability, store, http_executor(store), run_shell, sink)) {
        log([&] {
          std::cerr << store.name << " " << stage.stage << ": load " << (stage.load.ok ? "ok" : "failed") << " "
                    << stage.load.millis << " ms, repo bytes "
                    << (stage.load.repo_bytes ? std::to_string(*stage.load.repo_bytes) : "unavailable") << "\n";
          if (!stage.load.ok) std::cerr << stage.load.output << "\n";
          for (const auto& r : stage.queries) print_result(r);
        });
        clean = clean && stage.load.ok;
      }
      break;
    }
  }
  return clean;
}

int cmd_run(const RunArgs& a) {
  const HarnessConfig cfg = load_config(a.config);
  if (!parse_workload(a.workload)) throw CLI::ValidationError("--workload", "unknown workload " + a.workload);
  const QueryCatalog catalog = open_catalog(cfg.catalog ? cfg.catalog->string() : "");
  std::vector<const StoreProfile*> stores;
  if (a.stores.empty()) {
    for (const auto& s : cfg.stores) stores.push_back(&s);
  } else {
    for (const auto& name : a.stores) stores.push_back(&cfg.store(name));
  }
  if (cfg.output.has_parent_path()) std::filesystem::create_directories(cfg.output.parent_path());
  RawWriter writer(cfg.output);
  std::mutex write_mu, log_mu;
  const RawSink sink = [&](const RawSample& s) {
    std::lock_guard lock(write_mu);
    writer.append(s);
  };
  std::atomic<bool> clean{true};
  const auto one = [&](const StoreProfile* s) {
    if (!run_store(cfg, catalog, *s, a, sink, log_mu)) clean = false;
  };
  if (a.parallel_stores) {
    std::vector<std::thread> threads;
    for (const auto* s : stores) threads.emplace_back(one, s);
    for (auto& t : threads) t.join();
  } else {
    for (const auto* s : stores) one(s);
  }
  std::cerr << "raw results appended to " << cfg.output.string() << "\n";
  return clean ? 0 : 1;
}

// ---- report ----

struct ReportArgs {
  std::string in;
  std::string workload;
  std::string cache = "cold";
  std::string format = "markdown";
  std::optional<double> limit_seconds;
  std::string baseline;
  double threshold = 10.0;
};

SummaryTable load_table(const std::string& path, const ReportArgs& a, std::chrono::milliseconds limit) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  const std::string body = text.str();
  if (body.rfind("query_id", 0) == 0) return parse_summary_csv(body, a.workload, a.cache, limit);
  std::istringstream raw(body);
  return aggregate(read_raw(raw), a.workload, a.cache, limit);
}

int cmd_report(const ReportArgs& a) {
  const auto limit = a.limit_seconds
                         ? std::chrono::milliseconds(static_cast<std::int64_t>(*a.limit_seconds * 1000))
                         : default_limit(a.workload);
  const SummaryTable table = load_table(a.in, a, limit);
  if (table.empty()) {
    std::cerr << "no " << a.workload << "/" << a.cache << " results in " << a.in << "\n";
    return 2;
  }
  std::cout << emit(table, a.format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown);
  if (a.baseline.empty()) return 0;
  const Comparison c = compare(load_table(a.baseline, a, limit), table, a.threshold);
  for (const auto& m : c.key_mismatches) std::cerr << "key mismatch: " << m << "\n";
  for (const auto& r : c.regressions) std::cerr << "regression: " << r.query_id << " @ " << r.store << ": " << r.reason << "\n";
  return c.regressions.empty() ? 0 : 1;
}

// ---- serve-oracle ----

struct ServeArgs {
  int n = 64, k = 6;
  std::string data;
  std::string host = "127.0.0.1";
  int port = 0;
  std::string catalog;
};

int cmd_serve(const ServeArgs& a) {
  std::shared_ptr<const Dataset> ds;
  if (a.data.empty()) {
    GeneratorParams p;
    p.n = a.n;
    p.k = a.k;
    ds = std::make_shared<const Dataset>(Dataset::from(generate_dataset(p)));
  } else {
    ds = std::make_shared<const Dataset>(load_ntriples_file(a.data));
  }
  auto catalog = std::make_shared<const QueryCatalog>(open_catalog(a.catalog));
  OracleServer server(ds, catalog, a.host, a.port);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << server.url() << std::endl;
  std::thread waiter([&] { server.wait(); });
  while (!g_interrupted) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.stop();
  waiter.join();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial SPARQL store benchmark toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write the synthetic dataset as N-Triples");
  generate->add_option("--n", gen.n, "Grid dimension")->required()->check(CLI::PositiveNumber);
  generate->add_option("--k", gen.k, "Largest tag exponent")->check(CLI::NonNegativeNumber);
  generate->add_option("--precision", gen.precision, "WKT decimals")->check(CLI::Range(0, 15));
  generate->add_option("--layers", gen.layers, "Subset of land, state, road, poi")->delimiter(',');
  generate->add_option("--out", gen.out, "Output file, - for stdout");

  std::string slice_in, slice_out;
  std::uint64_t slice_triples = 0;
  auto* slice = app.add_subcommand("slice", "Copy a prefix of whole feature blocks");
  slice->add_option("--in", slice_in)->required();
  slice->add_option("--out", slice_out)->required();
  slice->add_option("--triples", slice_triples, "Largest triple count of the prefix")->required();

  QueriesArgs qa;
  auto* queries = app.add_subcommand("queries", "Render a workload's queries to .rq files");
  queries->add_option("--workload", qa.workload, "synthetic, micro, macro or scalability");
  queries->add_option("--n", qa.n)->check(CLI::PositiveNumber);
  queries->add_option("--k", qa.k)->check(CLI::NonNegativeNumber);
  queries->add_option("--dialect", qa.dialect, "geosparql, stsparql or point_tolerance");
  queries->add_option("--tolerance", qa.tolerance);
  queries->add_option("--out", qa.out, "Output directory")->required();
  queries->add_option("--catalog", qa.catalog, "Template directory");
  queries->add_option("--fractions", qa.fractions)->delimiter(',');
  queries->add_option("--functions", qa.functions)->delimiter(',');
  queries->add_option("--bind", qa.binds, "NAME=VALUE placeholder binding");

  RunArgs ra;
  auto* run = app.add_subcommand("run", "Run a workload against the configured stores");
  run->add_option("--config", ra.config)->required()->check(CLI::ExistingFile);
  run->add_option("--workload", ra.workload, "micro, macro, synthetic or scalability")->required();
  run->add_option("--store", ra.stores, "Only these stores");
  run->add_option("--budget", ra.budget, "Macro budget in seconds")->check(CLI::PositiveNumber);
  run->add_option("--seed", ra.seed, "Macro seed");
  run->add_flag("--parallel-stores", ra.parallel_stores, "Benchmark stores concurrently");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Summarize raw results");
  report->add_option("--in", rep.in)->required()->check(CLI::ExistingFile);
  report->add_option("--workload", rep.workload)->required();
  report->add_option("--cache", rep.cache)->check(CLI::IsMember({"cold", "warm", "load"}));
  report->add_option("--format", rep.format)->check(CLI::IsMember({"csv", "markdown"}));
  report->add_option("--limit", rep.limit_seconds, "Limit shown for timeouts, seconds");
  report->add_option("--baseline", rep.baseline)->check(CLI::ExistingFile);
  report->add_option("--threshold", rep.threshold, "Regression threshold, percent")->check(CLI::NonNegativeNumber);

  ServeArgs sa;
  auto* serve = app.add_subcommand("serve-oracle", "Serve reference answers over the SPARQL protocol");
  serve->add_option("--n", sa.n)->check(CLI::PositiveNumber);
  serve->add_option("--k", sa.k)->check(CLI::NonNegativeNumber);
  serve->add_option("--data", sa.data, "N-Triples file instead of a generated dataset")->check(CLI::ExistingFile);
  serve->add_option("--host", sa.host);
  serve->add_option("--port", sa.port)->check(CLI::Range(0, 65535));
  serve->add_option("--catalog", sa.catalog);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*generate) return cmd_generate(gen);
    if (*slice) return cmd_slice(slice_in, slice_out, slice_triples);
    if (*queries) return cmd_queries(qa);
    if (*run) return cmd_run(ra);
    if (*report) return cmd_report(rep);
    if (*serve) return cmd_serve(sa);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
