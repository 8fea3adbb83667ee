#include "geobench/harness/client.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "geobench/common/sha256.hpp"

namespace geobench {

std::string_view to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Ok: return "ok";
    case SampleStatus::Timeout: return "timeout";
    case SampleStatus::Error: return "error";
  }
  return "error";
}

std::string_view to_string(ErrorClass e) {
  switch (e) {
    case ErrorClass::None: return "none";
    case ErrorClass::Transport: return "transport";
    case ErrorClass::Http: return "http";
    case ErrorClass::Malformed: return "malformed";
  }
  return "none";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Aborts the client's socket when the deadline passes before disarm().
class Watchdog {
 public:
  Watchdog(httplib::Client& client, std::chrono::milliseconds limit)
      : thread_([this, &client, limit] {
          std::unique_lock lock(mu_);
          if (!cv_.wait_for(lock, limit, [this] { return done_; })) {
            fired_ = true;
            client.stop();
          }
        }) {}
  ~Watchdog() { disarm(); }
  void disarm() {
    {
      std::lock_guard lock(mu_);
      done_ = true;
    }
    cv_.notify_all();
    if (thread_.joinable()) thread_.join();
  }
  bool fired() const { return fired_; }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  bool done_ = false;
  std::atomic<bool> fired_{false};
  std::thread thread_;
};

QuerySample failure(double millis, ErrorClass cls, std::string message) {
  QuerySample s;
  s.millis = millis;
  s.status = SampleStatus::Error;
  s.error = cls;
  s.message = std::move(message);
  return s;
}

}  // namespace

QuerySample execute_query(const StoreProfile& store, const std::string& query, std::chrono::milliseconds limit,
                          bool keep_results) {
  EndpointAddress addr;
  try {
    addr = parse_endpoint_url(store.endpoint_url);
  } catch (const std::invalid_argument& e) {
    return failure(0.0, ErrorClass::Transport, e.what());
  }
  httplib::Client client(addr.scheme_host_port);
  // Socket timeouts are a backstop; the watchdog owns the limit.
  const auto backstop = limit + std::chrono::seconds(5);
  client.set_connection_timeout(backstop);
  client.set_read_timeout(backstop);
  client.set_write_timeout(backstop);
  const httplib::Headers headers{{"Accept", "application/sparql-results+json"}};

  const auto start = Clock::now();
  Watchdog watchdog(client, limit);
  auto res = client.Post(addr.path, headers, query, "application/sparql-query");
  std::string body;
  int status = 0;
  if (res) {
    status = res->status;
    body = std::move(res->body);
  }
  const bool fired = watchdog.fired();
  if (fired || (!res && millis_since(start) >= static_cast<double>(limit.count()))) {
    QuerySample s;
    s.millis = millis_since(start);
    s.status = SampleStatus::Timeout;
    s.message = "no complete answer within " + std::to_string(limit.count()) + " ms";
    return s;
  }
  if (!res) return failure(millis_since(start), ErrorClass::Transport, httplib::to_string(res.error()));
  if (status < 200 || status >= 300) {
    constexpr std::size_t kSnippet = 200;
    return failure(millis_since(start), ErrorClass::Http,
                   "HTTP " + std::to_string(status) + ": " + body.substr(0, kSnippet));
  }
  ResultTable table;
  try {
    table = parse_sparql_json(body);
  } catch (const ResultsFormatError& e) {
    return failure(millis_since(start), ErrorClass::Malformed, e.what());
  }
  QuerySample s;
  s.millis = millis_since(start);
  watchdog.disarm();
  s.cardinality = table.cardinality();
  s.digest = Sha256::of(canonical_rows(table));
  if (keep_results) s.results = std::move(table);
  return s;
}

QueryExecutor http_executor(const StoreProfile& store, bool keep_results) {
  return [store, keep_results](const std::string& query, std::chrono::milliseconds limit) {
    return execute_query(store, query, limit, keep_results);
  };
}

}  // namespace geobench
