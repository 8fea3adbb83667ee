#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string_view>

#include "geobench/generator/generator.hpp"

namespace geobench {

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kWktLiteral = "http://www.opengis.net/ont/geosparql#wktLiteral";
inline constexpr std::string_view kGeoAsWkt = "http://www.opengis.net/ont/geosparql#asWKT";

/// Predicate local names under layer_namespace(). asWKT is a subproperty of
/// geo:asWKT.
inline constexpr std::string_view kHasGeometry = "hasGeometry";
inline constexpr std::string_view kAsWkt = "asWKT";
inline constexpr std::string_view kHasKey = "hasKey";
inline constexpr std::string_view kHasValue = "hasValue";

/// "<iri>/geom"
std::string geometry_iri(LayerKind kind, FeatureId id);

struct EmitOptions {
  int precision = 6;
  /// Emit only these layers; all when unset.
  std::optional<std::set<LayerKind>> layers;
};

/// Writes every feature as a block: rdf:type, hasGeometry, asWKT, then one
/// hasKey/hasValue pair per carried key in ascending order. Returns the
/// number of triples written. Throws std::runtime_error when the sink fails.
std::uint64_t emit_ntriples(std::span<const FeatureLayer> layers, std::ostream& sink,
                            const EmitOptions& options = {});

/// 3 * features + 2 * tag pairs, without emitting.
std::uint64_t count_triples(std::span<const FeatureLayer> layers, const EmitOptions& options = {});

/// Copies whole feature blocks from an emitted file while the running triple
/// count stays within `max_triples`; the copy is a prefix of the input.
/// Returns the number of triples copied.
std::uint64_t slice_ntriples(std::istream& in, std::ostream& out, std::uint64_t max_triples);

}  // namespace geobench
