#include "geobench/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "geobench/querygen/spec.hpp"

namespace geobench {

using nlohmann::json;

EndpointAddress parse_endpoint_url(const std::string& url) {
  constexpr std::string_view scheme = "http://";
  if (url.rfind(scheme, 0) != 0) throw std::invalid_argument("endpoint must be an http:// URL: " + url);
  const auto slash = url.find('/', scheme.size());
  EndpointAddress a;
  a.scheme_host_port = url.substr(0, slash);
  a.path = slash == std::string::npos ? "/" : url.substr(slash);
  const std::string authority = a.scheme_host_port.substr(scheme.size());
  if (authority.empty() || authority.front() == ':') throw std::invalid_argument("endpoint has no host: " + url);
  const auto colon = authority.rfind(':');
  if (colon != std::string::npos) {
    const std::string port = authority.substr(colon + 1);
    if (port.empty() || port.find_first_not_of("0123456789") != std::string::npos || port.size() > 5 ||
        std::stoi(port) > 65535) {
      throw std::invalid_argument("endpoint has a bad port: " + url);
    }
  }
  if (url.find_first_of(" \t\n") != std::string::npos) throw std::invalid_argument("endpoint contains spaces");
  return a;
}

void StoreProfile::validate() const {
  if (name.empty()) throw std::invalid_argument("store needs a name");
  parse_endpoint_url(endpoint_url);
  make_dialect();
  if (load_command && load_command->find("{file}") == std::string::npos) {
    throw std::invalid_argument("load command must contain {file}");
  }
}

Dialect StoreProfile::make_dialect() const { return dialect_by_name(dialect, tolerance); }

Bindings StoreProfile::graph_bindings() const {
  Bindings b;
  for (const auto& [key, iri] : graphs) {
    const bool bracketed = !iri.empty() && iri.front() == '<';
    b["GRAPH_" + key] = bracketed ? iri : "<" + iri + ">";
  }
  return b;
}

const StoreProfile& HarnessConfig::store(const std::string& name) const {
  for (const auto& s : stores) {
    if (s.name == name) return s;
  }
  throw ConfigError("no store named " + name);
}

namespace {

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) throw ConfigError("unknown key " + where + "." + key);
  }
}

std::chrono::milliseconds seconds(const json& v, const std::string& where) {
  if (!v.is_number() || !(v.get<double>() > 0) || !std::isfinite(v.get<double>())) {
    throw ConfigError(where + " must be a positive number of seconds");
  }
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(v.get<double>() * 1000.0)));
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + " is missing or has the wrong type");
  }
}

StoreProfile parse_store(const json& j, const std::string& where, const std::filesystem::path& base) {
  only_keys(j, where,
            {"name", "endpoint", "dialect", "tolerance", "graphs", "cold_reset", "load", "repo_size_path",
             "repo_size_command"});
  StoreProfile s;
  s.name = get<std::string>(j, "name", where);
  s.endpoint_url = get<std::string>(j, "endpoint", where);
  if (j.contains("dialect")) s.dialect = get<std::string>(j, "dialect", where);
  if (j.contains("tolerance")) s.tolerance = get<double>(j, "tolerance", where);
  if (j.contains("graphs")) s.graphs = get<std::map<std::string, std::string>>(j, "graphs", where);
  if (j.contains("cold_reset")) s.cold_reset_command = get<std::string>(j, "cold_reset", where);
  if (j.contains("load")) s.load_command = get<std::string>(j, "load", where);
  if (j.contains("repo_size_path")) s.repo_size_path = resolve(base, get<std::string>(j, "repo_size_path", where));
  if (j.contains("repo_size_command")) s.repo_size_command = get<std::string>(j, "repo_size_command", where);
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return s;
}

}  // namespace

HarnessConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  only_keys(doc, "config", {"stores", "output", "catalog", "micro", "macro", "synthetic", "scalability"});
  HarnessConfig c;
  if (!doc.contains("stores") || !doc["stores"].is_array() || doc["stores"].empty()) {
    throw ConfigError("config.stores must be a non-empty array");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc["stores"].size(); ++i) {
    c.stores.push_back(parse_store(doc["stores"][i], "stores[" + std::to_string(i) + "]", base_dir));
    if (!names.insert(c.stores.back().name).second) throw ConfigError("duplicate store " + c.stores.back().name);
  }
  if (doc.contains("output")) c.output = resolve(base_dir, get<std::string>(doc, "output", "config"));
  if (doc.contains("catalog")) c.catalog = resolve(base_dir, get<std::string>(doc, "catalog", "config"));

  if (doc.contains("micro")) {
    const json& m = doc["micro"];
    only_keys(m, "micro", {"limit_seconds", "queries"});
    if (m.contains("limit_seconds")) c.micro.limit = seconds(m["limit_seconds"], "micro.limit_seconds");
    if (m.contains("queries")) c.micro.queries = get<std::vector<std::string>>(m, "queries", "micro");
  }
  if (doc.contains("macro")) {
    const json& m = doc["macro"];
    only_keys(m, "macro", {"budget_seconds", "query_timeout_seconds", "seed", "scenarios"});
    if (m.contains("budget_seconds")) c.macro.budget = seconds(m["budget_seconds"], "macro.budget_seconds");
    if (m.contains("query_timeout_seconds")) {
      c.macro.query_timeout = seconds(m["query_timeout_seconds"], "macro.query_timeout_seconds");
    }
    if (m.contains("seed")) c.macro.seed = get<std::uint64_t>(m, "seed", "macro");
    if (m.contains("scenarios")) c.macro.scenarios = get<std::vector<std::string>>(m, "scenarios", "macro");
  }
  if (doc.contains("synthetic")) {
    const json& m = doc["synthetic"];
    only_keys(m, "synthetic", {"n", "k", "fractions", "functions", "themas", "limit_seconds", "verify"});
    if (m.contains("n")) c.synthetic.n = get<int>(m, "n", "synthetic");
    if (m.contains("k")) c.synthetic.k = get<int>(m, "k", "synthetic");
    if (m.contains("fractions")) c.synthetic.plan.fractions = get<std::vector<double>>(m, "fractions", "synthetic");
    if (m.contains("themas")) c.synthetic.plan.themas = get<std::vector<std::uint64_t>>(m, "themas", "synthetic");
    if (m.contains("functions")) {
      c.synthetic.plan.functions.clear();
      for (const auto& f : get<std::vector<std::string>>(m, "functions", "synthetic")) {
        const auto p = parse_function_token(f);
        if (!p) throw ConfigError("synthetic.functions: unknown function " + f);
        c.synthetic.plan.functions.push_back(*p);
      }
    }
    if (m.contains("limit_seconds")) c.synthetic.limit = seconds(m["limit_seconds"], "synthetic.limit_seconds");
    if (m.contains("verify")) c.synthetic.verify = get<bool>(m, "verify", "synthetic");
  }
  if (doc.contains("scalability")) {
    const json& m = doc["scalability"];
    only_keys(m, "scalability", {"limit_seconds", "stages", "bindings"});
    if (m.contains("limit_seconds")) c.scalability.limit = seconds(m["limit_seconds"], "scalability.limit_seconds");
    if (m.contains("bindings")) c.scalability.bindings = get<Bindings>(m, "bindings", "scalability");
    if (m.contains("stages")) {
      for (std::size_t i = 0; i < m["stages"].size(); ++i) {
        const std::string where = "scalability.stages[" + std::to_string(i) + "]";
        const json& s = m["stages"][i];
        only_keys(s, where, {"name", "files"});
        ScalabilityStage stage;
        stage.name = get<std::string>(s, "name", where);
        for (const auto& f : get<std::vector<std::string>>(s, "files", where)) stage.files.push_back(resolve(base_dir, f));
        if (stage.files.empty()) throw ConfigError(where + ".files must not be empty");
        c.scalability.stages.push_back(std::move(stage));
      }
    }
  }
  return c;
}

HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace geobench
