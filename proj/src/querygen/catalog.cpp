#include "geobench/querygen/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace geobench {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const std::size_t p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out = split(text, '\n');
  for (auto& l : out) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename E, std::size_t N>
std::optional<E> lookup(std::string_view s, const std::pair<std::string_view, E> (&table)[N]) {
  for (const auto& [name, value] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

constexpr std::pair<std::string_view, Workload> kWorkloads[] = {
    {"micro", Workload::Micro}, {"macro", Workload::Macro},
    {"synthetic", Workload::Synthetic}, {"scalability", Workload::Scalability}};
constexpr std::pair<std::string_view, AnswerMode> kModes[] = {
    {"ids", AnswerMode::Ids}, {"count", AnswerMode::Count},
    {"construct", AnswerMode::Construct}, {"none", AnswerMode::None}};
constexpr std::pair<std::string_view, OracleKind> kOracles[] = {
    {"selection", OracleKind::Selection}, {"join", OracleKind::Join}, {"none", OracleKind::None}};

template <typename E, std::size_t N>
std::string_view name_of(E value, const std::pair<std::string_view, E> (&table)[N]) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

}  // namespace

std::string_view to_string(Workload w) { return name_of(w, kWorkloads); }
std::string_view to_string(AnswerMode m) { return name_of(m, kModes); }
std::string_view to_string(OracleKind o) { return name_of(o, kOracles); }
std::optional<Workload> parse_workload(std::string_view s) { return lookup(s, kWorkloads); }

Bindings ParameterPool::row(std::size_t i) const {
  Bindings b;
  const auto& r = rows.at(i);
  for (std::size_t c = 0; c < columns.size(); ++c) b[columns[c]] = r[c];
  return b;
}

ParameterPool parse_pool(std::string_view text) {
  ParameterPool pool;
  bool have_header = false;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    for (auto f : split(line, '\t')) fields.emplace_back(trim(f));
    if (!have_header) {
      pool.columns = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != pool.columns.size()) {
      throw CatalogError("pool line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                         " fields, expected " + std::to_string(pool.columns.size()));
    }
    pool.rows.push_back(std::move(fields));
  }
  if (!have_header) throw CatalogError("pool has no header line");
  return pool;
}

ParameterPool load_pool(const std::filesystem::path& path) {
  try {
    return parse_pool(read_file(path));
  } catch (const CatalogError& e) {
    throw CatalogError(path.string() + ": " + e.what());
  }
}

QueryTemplate parse_template(std::string_view text, std::string_view origin) {
  QueryTemplate t;
  std::string body;
  bool have_workload = false;
  auto fail = [&](const std::string& msg) { throw CatalogError(std::string(origin) + ": " + msg); };
  for (std::string_view line : lines_of(text)) {
    if (!line.starts_with("#@")) {
      body.append(line).push_back('\n');
      continue;
    }
    for (std::string_view item : split(line.substr(2), ';')) {
      item = trim(item);
      if (item.empty()) continue;
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) fail("front matter item without '=': " + std::string(item));
      const std::string_view key = trim(item.substr(0, eq));
      const std::string_view value = trim(item.substr(eq + 1));
      if (key == "id") {
        t.id = value;
      } else if (key == "workload") {
        auto w = lookup(value, kWorkloads);
        if (!w) fail("unknown workload " + std::string(value));
        t.workload = *w;
        have_workload = true;
      } else if (key == "mode") {
        auto m = lookup(value, kModes);
        if (!m) fail("unknown answer mode " + std::string(value));
        t.mode = *m;
      } else if (key == "oracle") {
        auto o = lookup(value, kOracles);
        if (!o) fail("unknown oracle " + std::string(value));
        t.oracle = *o;
      } else if (key == "placeholders") {
        for (auto p : split(value, ',')) {
          p = trim(p);
          if (!p.empty()) t.placeholders.emplace_back(p);
        }
      } else if (key.starts_with("default.")) {
        t.defaults[std::string(key.substr(8))] = std::string(value);
      } else if (key == "description") {
        t.description = value;
      } else if (key == "scenario") {
        t.scenario = value;
      } else if (key == "order") {
        if (std::from_chars(value.data(), value.data() + value.size(), t.order).ec != std::errc{}) {
          fail("bad order " + std::string(value));
        }
      } else {
        fail("unknown front matter key " + std::string(key));
      }
    }
  }
  if (t.id.empty()) fail("template without id");
  if (!have_workload) fail("template " + t.id + " without workload");
  while (body.size() >= 2 && body.ends_with("\n\n")) body.pop_back();
  while (!body.empty() && body.front() == '\n') body.erase(body.begin());
  t.body = std::move(body);

  const std::set<std::string> declared(t.placeholders.begin(), t.placeholders.end());
  for (const auto& name : placeholder_names(t.body)) {
    if (!is_dialect_token(name) && !declared.count(name)) {
      fail("template " + t.id + " uses undeclared placeholder {{" + name + "}}");
    }
  }
  for (const auto& [name, value] : t.defaults) {
    if (!declared.count(name)) fail("template " + t.id + " has a default for undeclared " + name);
  }
  if (t.workload == Workload::Macro && t.scenario.empty()) fail("macro template " + t.id + " without scenario");
  return t;
}

void QueryCatalog::add(QueryTemplate t) {
  if (templates_.count(t.id)) throw CatalogError("duplicate template id " + t.id);
  if (t.workload == Workload::Macro) {
    auto& sc = scenarios_[t.scenario];
    sc.id = t.scenario;
    sc.query_ids.push_back(t.id);
    std::stable_sort(sc.query_ids.begin(), sc.query_ids.end(), [&](const std::string& a, const std::string& b) {
      const int oa = a == t.id ? t.order : templates_.at(a).order;
      const int ob = b == t.id ? t.order : templates_.at(b).order;
      return oa != ob ? oa < ob : natural_less(a, b);
    });
  }
  std::string id = t.id;
  templates_.emplace(std::move(id), std::move(t));
}

void QueryCatalog::add_scenario_pool(const std::string& scenario, ParameterPool pool) {
  auto it = scenarios_.find(scenario);
  if (it == scenarios_.end()) throw CatalogError("pool for unknown scenario " + scenario);
  it->second.pool = std::move(pool);
}

const QueryTemplate* QueryCatalog::find(std::string_view id) const {
  auto it = templates_.find(id);
  return it == templates_.end() ? nullptr : &it->second;
}

const QueryTemplate& QueryCatalog::at(std::string_view id) const {
  const auto* t = find(id);
  if (!t) throw CatalogError("unknown template " + std::string(id));
  return *t;
}

std::vector<const QueryTemplate*> QueryCatalog::all() const {
  std::vector<const QueryTemplate*> out;
  for (const auto& [id, t] : templates_) out.push_back(&t);
  std::sort(out.begin(), out.end(), [](const QueryTemplate* a, const QueryTemplate* b) {
    if (a->workload != b->workload) return a->workload < b->workload;
    return natural_less(a->id, b->id);
  });
  return out;
}

std::vector<const QueryTemplate*> QueryCatalog::workload(Workload w) const {
  std::vector<const QueryTemplate*> out;
  for (const auto* t : all()) {
    if (t->workload == w) out.push_back(t);
  }
  return out;
}

const Scenario& QueryCatalog::scenario(std::string_view id) const {
  auto it = scenarios_.find(std::string(id));
  if (it == scenarios_.end()) throw CatalogError("unknown scenario " + std::string(id));
  return it->second;
}

QueryCatalog load_catalog(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  QueryCatalog catalog;
  if (!fs::is_directory(dir)) return catalog;
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".rq") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) catalog.add(parse_template(read_file(f), f.string()));
  for (const auto& [id, sc] : catalog.scenarios()) {
    const fs::path pool = dir / "pools" / (id + ".tsv");
    if (fs::exists(pool)) catalog.add_scenario_pool(id, load_pool(pool));
  }
  return catalog;
}

std::filesystem::path stock_catalog_dir() {
  if (const char* env = std::getenv("GEOBENCH_CATALOG")) return env;
#ifdef GEOBENCH_CATALOG_DIR
  return GEOBENCH_CATALOG_DIR;
#else
  return "catalog";
#endif
}

RenderedQuery render_query(const QueryTemplate& t, const Bindings& bindings, const Dialect& dialect) {
  Bindings effective = t.defaults;
  for (const auto& [k, v] : bindings) effective[k] = v;
  RenderedQuery q;
  q.header.template_id = t.id;
  for (const auto& name : t.placeholders) {
    auto it = effective.find(name);
    if (it == effective.end()) throw RenderError("template " + t.id + ": unbound placeholder {{" + name + "}}");
    q.header.params[name] = it->second;
  }
  q.text = format_header(q.header);
  q.text.push_back('\n');
  q.text.append(render_dialect(t.body, q.header.params, dialect));
  return q;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto split_num = [](std::string_view s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    long n = -1;
    if (i < s.size()) std::from_chars(s.data() + i, s.data() + s.size(), n);
    return std::pair{s.substr(0, i), n};
  };
  const auto [pa, na] = split_num(a);
  const auto [pb, nb] = split_num(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace geobench
