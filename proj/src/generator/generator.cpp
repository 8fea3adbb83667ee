#include "geobench/generator/generator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "geobench/geometry/wkt.hpp"

namespace geobench {

namespace {

// Flat-top hexagon vertices in units of (R/2, sqrt(3)/2 R), counter-clockwise.
constexpr int kHexDx[6] = {2, 1, -1, -2, -1, 1};
constexpr int kHexDy[6] = {0, 1, 1, 0, -1, -1};

// Snapped coordinates equal what a reader parses back from the emitted WKT.
Coord snap(Coord c, int precision) { return {snap_to_precision(c.x, precision), snap_to_precision(c.y, precision)}; }

// Offset-grid hexagon layout on the land lattice with units (R/2, sqrt(3)/2 R).
// Cell centre of (row, col) is offset + scale * (3 col, 2 row + (col & 1)).
// All layers share the lattice, so coincident vertices are bit-identical.
struct HexGrid {
  double radius;  // land circumradius
  Coord origin;
  long scale;
  int rows;
  int cols;
  long off_x = 0;
  long off_y = 0;

  Coord vertex(long lx, long ly) const {
    return {origin.x + radius / 2.0 * static_cast<double>(off_x + scale * lx),
            origin.y + radius * std::sqrt(3.0) / 2.0 * static_cast<double>(off_y + scale * ly)};
  }

  // Computed exactly like the extreme vertices so it matches their snapped values.
  Rect bounds(int precision) const {
    const long max_cx = 3L * (cols - 1);
    const long max_cy = 2L * (rows - 1) + (cols > 1 ? 1 : 0);
    const Coord lo = snap(vertex(-2, -1), precision);
    const Coord hi = snap(vertex(max_cx + 2, max_cy + 1), precision);
    return Rect(lo.x, lo.y, hi.x, hi.y);
  }

  // Centre of the unsnapped bounds in lattice units.
  std::pair<double, double> lattice_center() const {
    const long max_cx = 3L * (cols - 1);
    const long max_cy = 2L * (rows - 1) + (cols > 1 ? 1 : 0);
    return {off_x + scale * (max_cx / 2.0), off_y + scale * (max_cy / 2.0)};
  }

  Geometry cell(int row, int col, int precision) const {
    const long cx = 3L * col;
    const long cy = 2L * row + (col & 1);
    Ring ring;
    ring.reserve(7);
    for (int v = 0; v < 6; ++v) {
      ring.push_back(snap(vertex(cx + kHexDx[v], cy + kHexDy[v]), precision));
    }
    ring.push_back(ring.front());
    return Geometry::polygon(std::move(ring));
  }
};

HexGrid land_grid(const GeneratorParams& p) { return {p.cell_circumradius, p.origin, 1, p.n, p.n}; }

}  // namespace

std::string_view layer_slug(LayerKind kind) {
  switch (kind) {
    case LayerKind::LandOwnership: return "land";
    case LayerKind::State: return "state";
    case LayerKind::Road: return "road";
    case LayerKind::PointOfInterest: return "poi";
  }
  throw std::invalid_argument("unknown layer kind");
}

std::string_view layer_class(LayerKind kind) {
  switch (kind) {
    case LayerKind::LandOwnership: return "LandOwnership";
    case LayerKind::State: return "State";
    case LayerKind::Road: return "Road";
    case LayerKind::PointOfInterest: return "PointOfInterest";
  }
  throw std::invalid_argument("unknown layer kind");
}

std::optional<LayerKind> parse_layer(std::string_view slug) {
  for (auto kind : kAllLayers) {
    if (layer_slug(kind) == slug) return kind;
  }
  return std::nullopt;
}

std::string feature_iri(LayerKind kind, FeatureId id) {
  std::string out(kIriBase);
  out.append(layer_slug(kind)).push_back('/');
  out.append(std::to_string(id));
  return out;
}

std::string layer_namespace(LayerKind kind) {
  std::string out(kIriBase);
  out.append(layer_slug(kind)).append("/ontology#");
  return out;
}

void GeneratorParams::validate() const {
  if (n < 6) throw std::invalid_argument("grid dimension n must be at least 6");
  if (k < 0 || k > 62) throw std::invalid_argument("tag exponent k must be in [0, 62]");
  if (!(cell_circumradius > 0.0) || !std::isfinite(cell_circumradius)) {
    throw std::invalid_argument("cell circumradius must be positive");
  }
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) throw std::invalid_argument("origin must be finite");
  if (precision < 0 || precision > 15) throw std::invalid_argument("precision must be in [0, 15]");
  if (state_scale < 1) throw std::invalid_argument("state scale must be at least 1");
  if (!(road_amplitude >= 0.0)) throw std::invalid_argument("road amplitude must be non-negative");
  if (!std::isfinite(poi_slope)) throw std::invalid_argument("POI slope must be finite");
  const Rect ext = land_extent(*this);
  const double rise = std::abs(poi_slope) * ext.width() * (n - 1) / n;
  if (rise >= ext.height()) throw std::invalid_argument("POI slope too steep to keep lines inside the extent");
}

bool Feature::has_key(std::uint64_t key) const {
  if (key == 0 || (key & (key - 1)) != 0) return false;
  const int bit = std::countr_zero(key);
  return bit < 64 && ((tag_mask >> bit) & 1u) != 0;
}

std::vector<std::uint64_t> Feature::keys() const {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < 64; ++i) {
    if ((tag_mask >> i) & 1u) out.push_back(std::uint64_t{1} << i);
  }
  return out;
}

Rect land_extent(const GeneratorParams& p) { return land_grid(p).bounds(p.precision); }

FeatureLayer generate_land_ownership(const GeneratorParams& p) {
  p.validate();
  const HexGrid grid = land_grid(p);
  FeatureLayer layer{LayerKind::LandOwnership, {}, grid.bounds(p.precision)};
  layer.features.reserve(static_cast<std::size_t>(p.n) * p.n);
  for (int row = 0; row < p.n; ++row) {
    for (int col = 0; col < p.n; ++col) {
      const auto id = static_cast<FeatureId>(row) * p.n + col;
      layer.features.push_back({id, LayerKind::LandOwnership, grid.cell(row, col, p.precision), 0});
    }
  }
  return layer;
}

FeatureLayer generate_states(const GeneratorParams& p) {
  p.validate();
  const int m = p.n / 3;
  HexGrid grid{p.cell_circumradius, p.origin, p.state_scale, m, m};
  const auto [land_x, land_y] = land_grid(p).lattice_center();
  const auto [raw_x, raw_y] = grid.lattice_center();
  grid.off_x = std::lround(land_x - raw_x);
  grid.off_y = std::lround(land_y - raw_y);
  FeatureLayer layer{LayerKind::State, {}, grid.bounds(p.precision)};
  layer.features.reserve(static_cast<std::size_t>(m) * m);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      const auto id = static_cast<FeatureId>(row) * m + col;
      layer.features.push_back({id, LayerKind::State, grid.cell(row, col, p.precision), 0});
    }
  }
  return layer;
}

FeatureLayer generate_roads(const GeneratorParams& p) {
  p.validate();
  const Rect ext = land_extent(p);
  const int horizontal = p.n / 2;
  const int vertical = p.n - horizontal;
  const int segments = p.n / 2 + 1;
  const double amp = p.road_amplitude * p.cell_circumradius;
  FeatureLayer layer{LayerKind::Road, {}, ext};
  layer.features.reserve(static_cast<std::size_t>(p.n));
  for (int r = 0; r < p.n; ++r) {
    std::vector<Coord> pts;
    pts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
      const double offset = (i % 2 == 0) ? amp : -amp;
      const double t = static_cast<double>(i) / segments;
      Coord c;
      if (r < horizontal) {
        c = {ext.min_x + ext.width() * t, ext.min_y + ext.height() * (r + 0.5) / horizontal + offset};
      } else {
        const int j = r - horizontal;
        c = {ext.min_x + ext.width() * (j + 0.5) / vertical + offset, ext.min_y + ext.height() * t};
      }
      pts.push_back(snap(c, p.precision));
    }
    layer.features.push_back({static_cast<FeatureId>(r), LayerKind::Road, Geometry::line_string(std::move(pts)), 0});
  }
  return layer;
}

FeatureLayer generate_pois(const GeneratorParams& p) {
  p.validate();
  const Rect ext = land_extent(p);
  const double span_x = ext.width() * (p.n - 1) / p.n;
  const double rise = p.poi_slope * span_x;
  // Lines start low enough that the highest point of the steepest stays inside.
  const double free_height = ext.height() - std::abs(rise);
  const double low = ext.min_y + (rise < 0.0 ? -rise : 0.0);
  FeatureLayer layer{LayerKind::PointOfInterest, {}, ext};
  layer.features.reserve(static_cast<std::size_t>(p.n) * p.n);
  for (int line = 0; line < p.n; ++line) {
    const double base_y = low + free_height * (line + 0.5) / p.n;
    for (int i = 0; i < p.n; ++i) {
      const double dx = ext.width() * (i + 0.5) / p.n;
      const Coord c = snap(Coord{ext.min_x + dx, base_y + p.poi_slope * (dx - ext.width() * 0.5 / p.n)}, p.precision);
      const auto id = static_cast<FeatureId>(line) * p.n + i;
      layer.features.push_back({id, LayerKind::PointOfInterest, Geometry::point(c.x, c.y), 0});
    }
  }
  return layer;
}

FeatureLayer assign_tags(FeatureLayer layer, int k) {
  if (k < 0 || k > 62) throw std::invalid_argument("tag exponent k must be in [0, 62]");
  for (auto& f : layer.features) {
    std::uint64_t mask = 0;
    for (int i = 0; i <= k; ++i) {
      if (f.id % (std::uint64_t{1} << i) == 0) mask |= std::uint64_t{1} << i;
    }
    f.tag_mask = mask;
  }
  return layer;
}

const FeatureLayer& SyntheticDataset::layer(LayerKind kind) const {
  for (const auto& l : layers) {
    if (l.kind == kind) return l;
  }
  throw std::out_of_range("dataset has no layer " + std::string(layer_slug(kind)));
}

SyntheticDataset generate_dataset(const GeneratorParams& p) {
  p.validate();
  SyntheticDataset ds{p, {}};
  ds.layers.push_back(assign_tags(generate_land_ownership(p), p.k));
  ds.layers.push_back(assign_tags(generate_states(p), p.k));
  ds.layers.push_back(assign_tags(generate_roads(p), p.k));
  ds.layers.push_back(assign_tags(generate_pois(p), p.k));
  return ds;
}

}  // namespace geobench
