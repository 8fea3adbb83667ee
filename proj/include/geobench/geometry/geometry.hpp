#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace geobench {

/// Absolute tolerance used for coincidence tests throughout the kernel.
inline constexpr double kCoincidenceTolerance = 1e-9;

struct Coord {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Axis-aligned rectangle. Always satisfies min <= max on both axes.
struct Rect {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  Rect() = default;
  Rect(double min_x_, double min_y_, double max_x_, double max_y_);

  static Rect around(Coord c) { return Rect(c.x, c.y, c.x, c.y); }

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  Coord center() const { return {(min_x + max_x) / 2.0, (min_y + max_y) / 2.0}; }

  bool intersects(const Rect& o) const {
    return min_x <= o.max_x && o.min_x <= max_x && min_y <= o.max_y && o.min_y <= max_y;
  }
  /// Closed containment.
  bool contains(const Rect& o) const {
    return min_x <= o.min_x && o.max_x <= max_x && min_y <= o.min_y && o.max_y <= max_y;
  }
  bool contains(Coord c) const {
    return min_x <= c.x && c.x <= max_x && min_y <= c.y && c.y <= max_y;
  }
  /// `o` lies in the open interior of this rectangle.
  bool strictly_contains(const Rect& o) const {
    return min_x < o.min_x && o.max_x < max_x && min_y < o.min_y && o.max_y < max_y;
  }
  void expand(const Rect& o);
  void expand(Coord c);

  friend bool operator==(const Rect&, const Rect&) = default;
};

using Ring = std::vector<Coord>;

/// One polygon: a closed exterior ring plus closed interior rings.
struct PolygonRings {
  Ring exterior;
  std::vector<Ring> interiors;

  friend bool operator==(const PolygonRings&, const PolygonRings&) = default;
};

enum class GeometryKind { Point, LineString, Polygon, MultiLineString, MultiPolygon };

std::string_view to_string(GeometryKind kind);

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple-features value. Construction validates and normalizes:
/// rings closed with >= 4 vertices, exterior rings counter-clockwise,
/// interior rings clockwise, all coordinates finite.
class Geometry {
 public:
  static Geometry point(Coord c);
  static Geometry point(double x, double y) { return point(Coord{x, y}); }
  static Geometry line_string(std::vector<Coord> coords);
  static Geometry polygon(Ring exterior, std::vector<Ring> interiors = {});
  static Geometry polygon(PolygonRings rings);
  static Geometry multi_line_string(std::vector<std::vector<Coord>> lines);
  static Geometry multi_polygon(std::vector<PolygonRings> polygons);
  static Geometry from_rect(const Rect& r);

  GeometryKind kind() const { return kind_; }
  /// Topological dimension: 0 points, 1 lines, 2 areas.
  int dimension() const;
  bool is_areal() const {
    return kind_ == GeometryKind::Polygon || kind_ == GeometryKind::MultiPolygon;
  }

  Coord as_point() const;
  const std::vector<Coord>& as_line_string() const;
  const PolygonRings& as_polygon() const;
  const std::vector<std::vector<Coord>>& as_multi_line_string() const;
  const std::vector<PolygonRings>& as_multi_polygon() const;

  /// Polygons of an areal geometry (one for Polygon, all for MultiPolygon).
  std::vector<PolygonRings> polygons() const;
  /// Every vertex, in storage order.
  std::vector<Coord> vertices() const;

  friend bool operator==(const Geometry& a, const Geometry& b) {
    return a.kind_ == b.kind_ && a.data_ == b.data_;
  }

 private:
  using Data = std::variant<Coord, std::vector<Coord>, PolygonRings,
                            std::vector<std::vector<Coord>>, std::vector<PolygonRings>>;
  Geometry(GeometryKind kind, Data data) : kind_(kind), data_(std::move(data)) {}

  GeometryKind kind_;
  Data data_;
};

/// Signed shoelace area of a closed ring (positive when counter-clockwise).
double signed_ring_area(const Ring& ring);

/// Canonical form for tolerant comparison: each ring starts at its
/// lexicographically smallest vertex, multipolygon members sorted.
Geometry canonicalize(const Geometry& g);

/// Equality after canonicalization, coordinates compared within `tolerance`.
bool equal_within(const Geometry& a, const Geometry& b,
                  double tolerance = kCoincidenceTolerance);

}  // namespace geobench
