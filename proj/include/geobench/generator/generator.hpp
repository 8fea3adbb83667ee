#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geobench/geometry/geometry.hpp"
#include "geobench/geometry/spatial_index.hpp"

namespace geobench {

enum class LayerKind { LandOwnership, State, Road, PointOfInterest };

inline constexpr std::array<LayerKind, 4> kAllLayers = {LayerKind::LandOwnership, LayerKind::State,
                                                        LayerKind::Road, LayerKind::PointOfInterest};

/// Short namespace slug used in IRIs and templates: land, state, road, poi.
std::string_view layer_slug(LayerKind kind);
/// rdf:type class local name.
std::string_view layer_class(LayerKind kind);
std::optional<LayerKind> parse_layer(std::string_view slug);

inline constexpr std::string_view kIriBase = "http://geographica.kit/";

/// http://geographica.kit/{slug}/{id}
std::string feature_iri(LayerKind kind, FeatureId id);
/// http://geographica.kit/{slug}/ontology#
std::string layer_namespace(LayerKind kind);

/// Parameters of the synthetic workload. Shape constants are relative to the
/// land-ownership circumradius.
struct GeneratorParams {
  int n = 6;                      // grid dimension
  int k = 0;                      // tags up to key 2^k
  double cell_circumradius = 1.0;
  Coord origin{0.0, 0.0};
  int precision = 6;              // WKT decimals; coordinates are snapped to it
  double poi_slope = 0.25;
  double road_amplitude = 0.3;    // zig-zag half-amplitude, in circumradii
  int state_scale = 3;            // state circumradius / land circumradius

  /// Throws std::invalid_argument when out of range.
  void validate() const;
};

struct Feature {
  FeatureId id = 0;
  LayerKind layer = LayerKind::LandOwnership;
  Geometry geometry = Geometry::point(0, 0);
  /// Bit i set when the feature carries key 2^i.
  std::uint64_t tag_mask = 0;

  bool has_key(std::uint64_t key) const;
  std::vector<std::uint64_t> keys() const;
  std::string iri() const { return feature_iri(layer, id); }
};

struct FeatureLayer {
  LayerKind kind = LayerKind::LandOwnership;
  std::vector<Feature> features;
  /// Frame of the layer: its own bounds for hexagon layers, the
  /// land-ownership extent for roads and points of interest.
  Rect extent;

  std::string_view slug() const { return layer_slug(kind); }
  std::size_t size() const { return features.size(); }
};

/// n^2 flat-top hexagons on an offset n x n grid.
FeatureLayer generate_land_ownership(const GeneratorParams& p);
/// floor(n/3)^2 hexagons at state_scale times the land circumradius, centered
/// over the land-ownership extent.
FeatureLayer generate_states(const GeneratorParams& p);
/// n zig-zag polylines, the first floor(n/2) roughly horizontal, with
/// floor(n/2)+1 segments each.
FeatureLayer generate_roads(const GeneratorParams& p);
/// n^2 points, n per line on n parallel sloping lines.
FeatureLayer generate_pois(const GeneratorParams& p);

/// Key 2^i is attached to feature id iff id mod 2^i == 0, for i = 0..k.
FeatureLayer assign_tags(FeatureLayer layer, int k);

/// Bounds of the land-ownership hexagon grid for these parameters.
Rect land_extent(const GeneratorParams& p);

struct SyntheticDataset {
  GeneratorParams params;
  std::vector<FeatureLayer> layers;  // land, state, road, poi

  const FeatureLayer& layer(LayerKind kind) const;
};

/// All four layers, tagged, in emission order.
SyntheticDataset generate_dataset(const GeneratorParams& p);

}  // namespace geobench
