#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "geobench/generator/generator.hpp"
#include "geobench/geometry/relate.hpp"
#include "geobench/querygen/catalog.hpp"

namespace geobench {

/// Decimals used for geometry literals inside rendered queries.
inline constexpr int kQueryWktPrecision = 6;

struct SelectionQuerySpec {
  LayerKind layer = LayerKind::PointOfInterest;
  std::uint64_t thema = 1;  // tag key, a power of two
  Rect geom;
  PredicateName function = PredicateName::Intersects;
  std::string template_id = "SYN_SEL";
};

struct JoinQuerySpec {
  LayerKind layer1 = LayerKind::PointOfInterest;
  LayerKind layer2 = LayerKind::State;
  std::uint64_t thema1 = 1;
  std::uint64_t thema2 = 1;
  PredicateName function = PredicateName::Within;
  std::string template_id = "SYN_JOIN";
};

/// "WITHIN" for PredicateName::Within; the form used in bindings.
std::string function_token(PredicateName p);
std::optional<PredicateName> parse_function_token(std::string_view token);

/// Throws std::invalid_argument unless `key` is a power of two.
void validate_thema(std::uint64_t key);

Bindings selection_bindings(const SelectionQuerySpec& spec);
Bindings join_bindings(const JoinQuerySpec& spec);

/// Render through the catalog template named by the spec. Throws
/// RenderError when the dialect lacks the function and std::invalid_argument
/// for a malformed spec.
RenderedQuery instantiate_selection(const QueryCatalog& catalog, const SelectionQuerySpec& spec,
                                    const Dialect& dialect);
RenderedQuery instantiate_join(const QueryCatalog& catalog, const JoinQuerySpec& spec, const Dialect& dialect);

/// Inverse of the bindings above, for header parameters. Throws
/// std::invalid_argument when a parameter is missing or malformed.
SelectionQuerySpec selection_from_params(const std::string& template_id, const std::map<std::string, std::string>& p);
JoinQuerySpec join_from_params(const std::string& template_id, const std::map<std::string, std::string>& p);

/// Layer whose namespace IRI is `ns`.
std::optional<LayerKind> layer_from_namespace(std::string_view ns);

}  // namespace geobench
