#include "geobench/querygen/dialect.hpp"

#include <cctype>

#include "geobench/geometry/wkt.hpp"

namespace geobench {

namespace {

constexpr int kMaxPasses = 16;

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

struct Slot {
  std::size_t begin;  // offset of "{{"
  std::size_t end;    // offset past "}}"
  std::string_view name;
};

// Next slot whose name is made only of name characters; nested outer braces
// are skipped until their inner slots have been substituted.
std::optional<Slot> next_slot(std::string_view text, std::size_t from) {
  for (std::size_t i = text.find("{{", from); i != std::string_view::npos; i = text.find("{{", i + 1)) {
    std::size_t j = i + 2;
    while (j < text.size() && is_name_char(text[j])) ++j;
    if (j > i + 2 && text.substr(j, 2) == "}}") return Slot{i, j + 2, text.substr(i + 2, j - i - 2)};
  }
  return std::nullopt;
}

std::string iri(std::string_view base, std::string_view local) {
  std::string out = "<";
  out.append(base).append(local).push_back('>');
  return out;
}

}  // namespace

bool is_dialect_token(std::string_view name) {
  return name.starts_with("FN_") || name.starts_with("DT_") || name == "TOL_ARG" || name == "UOM_ARG";
}

bool Dialect::supports(std::string_view function_suffix) const {
  return functions.find(function_suffix) != functions.end();
}

std::string Dialect::resolve(std::string_view token) const {
  if (token.starts_with("FN_")) {
    auto it = functions.find(token.substr(3));
    if (it == functions.end()) {
      throw RenderError("dialect " + name + " has no mapping for " + std::string(token));
    }
    return it->second;
  }
  if (token == "DT_WKT") return wkt_datatype;
  if (token == "TOL_ARG") {
    if (!requires_tolerance) return "";
    if (!tolerance) throw RenderError("dialect " + name + " requires a bound tolerance (TOL)");
    return ", " + format_fixed(*tolerance, 9);
  }
  if (token == "UOM_ARG") return unit_argument.empty() ? "" : ", " + unit_argument;
  throw RenderError("unknown dialect token " + std::string(token));
}

Dialect geosparql_dialect() {
  constexpr std::string_view geof = "http://www.opengis.net/def/function/geosparql/";
  Dialect d;
  d.name = "geosparql";
  d.functions = {
      {"EQUALS", iri(geof, "sfEquals")},        {"DISJOINT", iri(geof, "sfDisjoint")},
      {"INTERSECTS", iri(geof, "sfIntersects")}, {"TOUCHES", iri(geof, "sfTouches")},
      {"CROSSES", iri(geof, "sfCrosses")},      {"WITHIN", iri(geof, "sfWithin")},
      {"CONTAINS", iri(geof, "sfContains")},    {"OVERLAPS", iri(geof, "sfOverlaps")},
      {"BOUNDARY", iri(geof, "boundary")},      {"ENVELOPE", iri(geof, "envelope")},
      {"CONVEXHULL", iri(geof, "convexHull")},  {"BUFFER", iri(geof, "buffer")},
      {"DISTANCE", iri(geof, "distance")},
  };
  d.wkt_datatype = "<http://www.opengis.net/ont/geosparql#wktLiteral>";
  d.unit_argument = "<http://www.opengis.net/def/uom/OGC/1.0/metre>";
  return d;
}

Dialect stsparql_dialect() {
  constexpr std::string_view strdf = "http://strdf.di.uoa.gr/ontology#";
  Dialect d;
  d.name = "stsparql";
  d.functions = {
      {"EQUALS", iri(strdf, "equals")},         {"DISJOINT", iri(strdf, "disjoint")},
      {"INTERSECTS", iri(strdf, "intersects")}, {"TOUCHES", iri(strdf, "touches")},
      {"CROSSES", iri(strdf, "crosses")},       {"WITHIN", iri(strdf, "within")},
      {"CONTAINS", iri(strdf, "contains")},     {"OVERLAPS", iri(strdf, "overlaps")},
      {"BOUNDARY", iri(strdf, "boundary")},     {"ENVELOPE", iri(strdf, "envelope")},
      {"CONVEXHULL", iri(strdf, "convexHull")}, {"BUFFER", iri(strdf, "buffer")},
      {"DISTANCE", iri(strdf, "distance")},     {"AREA", iri(strdf, "area")},
      {"EXTENT", iri(strdf, "extent")},         {"UNION", iri(strdf, "union")},
  };
  d.wkt_datatype = "<http://strdf.di.uoa.gr/ontology#WKT>";
  return d;
}

Dialect point_tolerance_dialect(std::optional<double> tolerance) {
  Dialect d;
  d.name = "point_tolerance";
  d.functions = {
      {"INTERSECTS", "bif:st_intersects"},
      {"WITHIN", "bif:st_within"},
      {"CONTAINS", "bif:st_contains"},
  };
  d.wkt_datatype = "<http://www.openlinksw.com/schemas/virtrdf#Geometry>";
  d.requires_tolerance = true;
  d.tolerance = tolerance;
  return d;
}

Dialect dialect_by_name(std::string_view name, std::optional<double> tolerance) {
  if (name == "geosparql") return geosparql_dialect();
  if (name == "stsparql") return stsparql_dialect();
  if (name == "point_tolerance") return point_tolerance_dialect(tolerance);
  throw std::invalid_argument("unknown dialect " + std::string(name));
}

std::set<std::string> placeholder_names(std::string_view text) {
  std::set<std::string> out;
  for (auto slot = next_slot(text, 0); slot; slot = next_slot(text, slot->end)) out.emplace(slot->name);
  return out;
}

std::string render_dialect(std::string_view template_text, const Bindings& bindings, const Dialect& dialect) {
  std::string text(template_text);
  for (int pass = 0;; ++pass) {
    if (pass == kMaxPasses) throw RenderError("placeholder substitution does not terminate");
    std::string next;
    bool changed = false;
    std::size_t copied = 0;
    for (auto slot = next_slot(text, 0); slot; slot = next_slot(text, slot->end)) {
      if (is_dialect_token(slot->name)) continue;
      auto it = bindings.find(std::string(slot->name));
      if (it == bindings.end()) throw RenderError("unbound placeholder {{" + std::string(slot->name) + "}}");
      next.append(text, copied, slot->begin - copied).append(it->second);
      copied = slot->end;
      changed = true;
    }
    if (!changed) break;
    next.append(text, copied);
    text = std::move(next);
  }
  std::string out;
  std::size_t copied = 0;
  for (auto slot = next_slot(text, 0); slot; slot = next_slot(text, slot->end)) {
    out.append(text, copied, slot->begin - copied).append(dialect.resolve(slot->name));
    copied = slot->end;
  }
  out.append(text, copied);
  if (out.find("{{") != std::string::npos) {
    throw RenderError("malformed placeholder near offset " + std::to_string(out.find("{{")));
  }
  return out;
}

}  // namespace geobench
