#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geobench {

/// Placeholder name -> replacement text.
using Bindings = std::map<std::string, std::string>;

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Store-specific spelling of spatial functions and the WKT literal datatype.
///
/// Templates reference functions through tokens: {{FN_WITHIN}}, {{FN_BUFFER}},
/// ..., the datatype through {{DT_WKT}}, and the optional trailing tolerance
/// argument through {{TOL_ARG}} (", <tol>" when the dialect requires one,
/// empty otherwise). {{UOM_ARG}} expands to ", <unit IRI>" for dialects whose
/// buffer and distance functions take a unit of measure.
struct Dialect {
  std::string name;
  /// Token suffix (WITHIN, BUFFER, ...) -> function IRI or built-in name,
  /// already bracketed when it is an IRI.
  std::map<std::string, std::string, std::less<>> functions;
  std::string wkt_datatype;
  std::string unit_argument;
  bool requires_tolerance = false;
  std::optional<double> tolerance;

  /// Resolves a dialect token without braces ("FN_WITHIN", "DT_WKT", "TOL_ARG").
  /// Throws RenderError for unknown or unmapped tokens.
  std::string resolve(std::string_view token) const;
  bool supports(std::string_view function_suffix) const;
};

/// GeoSPARQL geof:sf* functions and geo:wktLiteral.
Dialect geosparql_dialect();
/// stSPARQL strdf:* functions, including area, extent and union.
Dialect stsparql_dialect();
/// Built-in bif:st_* functions taking a trailing tolerance argument.
Dialect point_tolerance_dialect(std::optional<double> tolerance = std::nullopt);
/// "geosparql", "stsparql" or "point_tolerance". Throws std::invalid_argument.
Dialect dialect_by_name(std::string_view name, std::optional<double> tolerance = std::nullopt);

/// Substitutes {{NAME}} slots from `bindings`, repeating until no binding
/// slot remains (so a binding may itself produce a slot name, e.g.
/// {{FN_{{FUNCTION}}}}), then resolves dialect tokens. Throws RenderError on
/// an unbound placeholder or unknown token. Rendering an already rendered
/// text is the identity.
std::string render_dialect(std::string_view template_text, const Bindings& bindings, const Dialect& dialect);

/// Names of the {{NAME}} slots in `text`.
std::set<std::string> placeholder_names(std::string_view text);

/// True for tokens resolved by a dialect rather than by bindings.
bool is_dialect_token(std::string_view name);

}  // namespace geobench
