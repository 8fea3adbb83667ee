#include "geobench/refeval/oracle.hpp"

#include <httplib.h>

#include <thread>

#include "geobench/querygen/spec.hpp"
#include "geobench/refeval/eval.hpp"

namespace geobench {

std::optional<ResultTable> oracle_answer(const Dataset& ds, const QueryCatalog& catalog, std::string_view query_text) {
  const auto header = parse_header(query_text);
  if (!header) throw std::invalid_argument("query carries no gq:template header");
  const QueryTemplate* t = catalog.find(header->template_id);
  if (!t) throw std::invalid_argument("unknown template " + header->template_id);
  ResultTable table;
  table.vars = result_variables(query_text);
  switch (t->oracle) {
    case OracleKind::None:
      return std::nullopt;
    case OracleKind::Selection: {
      if (table.vars.size() != 1) throw std::invalid_argument(t->id + " must project one variable");
      const auto spec = selection_from_params(t->id, header->params);
      for (FeatureId id : eval_selection(ds, spec)) table.rows.push_back({feature_iri(spec.layer, id)});
      return table;
    }
    case OracleKind::Join: {
      if (table.vars.size() != 2) throw std::invalid_argument(t->id + " must project two variables");
      const auto spec = join_from_params(t->id, header->params);
      for (const auto& [a, b] : eval_join(ds, spec)) {
        table.rows.push_back({feature_iri(spec.layer1, a), feature_iri(spec.layer2, b)});
      }
      return table;
    }
  }
  return std::nullopt;
}

struct OracleServer::Impl {
  std::shared_ptr<const Dataset> ds;
  std::shared_ptr<const QueryCatalog> catalog;
  std::string host;
  int port = 0;
  httplib::Server server;
  std::thread thread;
};

namespace {

void answer(const Dataset& ds, const QueryCatalog& catalog, const httplib::Request& req, httplib::Response& res) {
  std::string query;
  if (req.has_param("query")) {
    query = req.get_param_value("query");
  } else if (req.method == "POST") {
    query = req.body;
  }
  try {
    if (query.empty()) throw std::invalid_argument("request carries no query");
    const auto table = oracle_answer(ds, catalog, query);
    if (!table) throw std::invalid_argument("template has no oracle answer");
    res.set_content(to_sparql_json(*table), "application/sparql-results+json");
  } catch (const std::exception& e) {
    res.status = 400;
    res.set_content(std::string("unrecognized query: ") + e.what() + "\n", "text/plain");
  }
}

}  // namespace

OracleServer::OracleServer(std::shared_ptr<const Dataset> ds, std::shared_ptr<const QueryCatalog> catalog,
                           const std::string& host, int port)
    : impl_(std::make_unique<Impl>()) {
  impl_->ds = std::move(ds);
  impl_->catalog = std::move(catalog);
  impl_->host = host;
  auto handler = [impl = impl_.get()](const httplib::Request& req, httplib::Response& res) {
    answer(*impl->ds, *impl->catalog, req, res);
  };
  // Plain SO_REUSEADDR: the library default adds SO_REUSEPORT, which would
  // let a second endpoint share a busy port silently.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
    if (impl_->port < 0) throw std::runtime_error("cannot bind oracle endpoint on " + host);
  } else {
    if (!impl_->server.bind_to_port(host, port)) {
      throw std::runtime_error("cannot bind oracle endpoint on " + host + ":" + std::to_string(port));
    }
    impl_->port = port;
  }
  impl_->thread = std::thread([impl = impl_.get()] { impl->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

OracleServer::~OracleServer() {
  stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int OracleServer::port() const { return impl_->port; }

std::string OracleServer::url() const { return "http://" + impl_->host + ":" + std::to_string(impl_->port) + "/sparql"; }

void OracleServer::wait() {
  if (impl_->thread.joinable()) impl_->thread.join();
}

void OracleServer::stop() { impl_->server.stop(); }

}  // namespace geobench
