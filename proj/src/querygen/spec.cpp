#include "geobench/querygen/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/wkt.hpp"

namespace geobench {

namespace {

const std::string& param(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing query parameter " + key);
  return it->second;
}

std::uint64_t parse_key(const std::string& s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw std::invalid_argument("bad tag key " + s);
  validate_thema(v);
  return v;
}

LayerKind parse_ns(const std::string& s) {
  auto layer = layer_from_namespace(s);
  if (!layer) throw std::invalid_argument("unknown layer namespace " + s);
  return *layer;
}

PredicateName parse_fn(const std::string& s) {
  auto p = parse_function_token(s);
  if (!p) throw std::invalid_argument("unknown function " + s);
  return *p;
}

}  // namespace

std::string function_token(PredicateName p) {
  std::string s(to_string(p));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::optional<PredicateName> parse_function_token(std::string_view token) {
  std::string s(token);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return parse_predicate(s);
}

void validate_thema(std::uint64_t key) {
  if (key == 0 || (key & (key - 1)) != 0) {
    throw std::invalid_argument("tag key " + std::to_string(key) + " is not a power of two");
  }
}

std::optional<LayerKind> layer_from_namespace(std::string_view ns) {
  for (auto kind : kAllLayers) {
    if (layer_namespace(kind) == ns) return kind;
  }
  return std::nullopt;
}

Bindings selection_bindings(const SelectionQuerySpec& spec) {
  validate_thema(spec.thema);
  return {{"NS", layer_namespace(spec.layer)},
          {"THEMA", std::to_string(spec.thema)},
          {"GEOM", to_wkt(Geometry::from_rect(spec.geom), kQueryWktPrecision)},
          {"FUNCTION", function_token(spec.function)}};
}

Bindings join_bindings(const JoinQuerySpec& spec) {
  validate_thema(spec.thema1);
  validate_thema(spec.thema2);
  return {{"NS1", layer_namespace(spec.layer1)},
          {"THEMA1", std::to_string(spec.thema1)},
          {"NS2", layer_namespace(spec.layer2)},
          {"THEMA2", std::to_string(spec.thema2)},
          {"FUNCTION", function_token(spec.function)}};
}

RenderedQuery instantiate_selection(const QueryCatalog& catalog, const SelectionQuerySpec& spec,
                                    const Dialect& dialect) {
  const auto& t = catalog.at(spec.template_id);
  if (t.oracle != OracleKind::Selection) throw std::invalid_argument(t.id + " is not a selection template");
  return render_query(t, selection_bindings(spec), dialect);
}

RenderedQuery instantiate_join(const QueryCatalog& catalog, const JoinQuerySpec& spec, const Dialect& dialect) {
  const auto& t = catalog.at(spec.template_id);
  if (t.oracle != OracleKind::Join) throw std::invalid_argument(t.id + " is not a join template");
  return render_query(t, join_bindings(spec), dialect);
}

SelectionQuerySpec selection_from_params(const std::string& template_id,
                                         const std::map<std::string, std::string>& p) {
  SelectionQuerySpec spec;
  spec.template_id = template_id;
  spec.layer = parse_ns(param(p, "NS"));
  spec.thema = parse_key(param(p, "THEMA"));
  spec.function = parse_fn(param(p, "FUNCTION"));
  try {
    spec.geom = mbr(parse_wkt(param(p, "GEOM")));
  } catch (const WktParseError& e) {
    throw std::invalid_argument(std::string("bad GEOM: ") + e.what());
  }
  return spec;
}

JoinQuerySpec join_from_params(const std::string& template_id, const std::map<std::string, std::string>& p) {
  JoinQuerySpec spec;
  spec.template_id = template_id;
  spec.layer1 = parse_ns(param(p, "NS1"));
  spec.layer2 = parse_ns(param(p, "NS2"));
  spec.thema1 = parse_key(param(p, "THEMA1"));
  spec.thema2 = parse_key(param(p, "THEMA2"));
  spec.function = parse_fn(param(p, "FUNCTION"));
  return spec;
}

}  // namespace geobench
