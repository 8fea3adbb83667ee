#include "geobench/geometry/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace geobench {

namespace {

void require_finite(Coord c) {
  if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
    throw GeometryError("non-finite coordinate");
  }
}

void require_finite(const std::vector<Coord>& coords) {
  for (const auto& c : coords) require_finite(c);
}

void validate_ring(const Ring& ring, const char* which) {
  if (ring.size() < 4) {
    throw GeometryError(std::string(which) + " ring needs at least 4 vertices");
  }
  if (ring.front() != ring.back()) {
    throw GeometryError(std::string(which) + " ring is not closed");
  }
  require_finite(ring);
}

void orient(Ring& ring, bool counter_clockwise) {
  double a = signed_ring_area(ring);
  if ((a < 0.0 && counter_clockwise) || (a > 0.0 && !counter_clockwise)) {
    std::reverse(ring.begin(), ring.end());
  }
}

PolygonRings normalize_polygon(PolygonRings rings) {
  validate_ring(rings.exterior, "exterior");
  orient(rings.exterior, true);
  for (auto& hole : rings.interiors) {
    validate_ring(hole, "interior");
    orient(hole, false);
  }
  return rings;
}

std::vector<Coord> validate_line(std::vector<Coord> coords) {
  if (coords.size() < 2) throw GeometryError("linestring needs at least 2 vertices");
  require_finite(coords);
  return coords;
}

Ring rotate_ring_to_min(const Ring& ring) {
  // Drop the closing vertex, rotate so the smallest vertex leads, re-close.
  std::vector<Coord> open(ring.begin(), ring.end() - 1);
  auto less = [](const Coord& a, const Coord& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  };
  auto it = std::min_element(open.begin(), open.end(), less);
  std::rotate(open.begin(), it, open.end());
  open.push_back(open.front());
  return open;
}

PolygonRings canonical_polygon(const PolygonRings& p) {
  PolygonRings out;
  out.exterior = rotate_ring_to_min(p.exterior);
  for (const auto& h : p.interiors) out.interiors.push_back(rotate_ring_to_min(h));
  std::sort(out.interiors.begin(), out.interiors.end(), [](const Ring& a, const Ring& b) {
    return a.front().x < b.front().x || (a.front().x == b.front().x && a.front().y < b.front().y);
  });
  return out;
}

bool coords_close(const std::vector<Coord>& a, const std::vector<Coord>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].x - b[i].x) > tol || std::abs(a[i].y - b[i].y) > tol) return false;
  }
  return true;
}

bool polygons_close(const PolygonRings& a, const PolygonRings& b, double tol) {
  if (!coords_close(a.exterior, b.exterior, tol)) return false;
  if (a.interiors.size() != b.interiors.size()) return false;
  for (std::size_t i = 0; i < a.interiors.size(); ++i) {
    if (!coords_close(a.interiors[i], b.interiors[i], tol)) return false;
  }
  return true;
}

}  // namespace

Rect::Rect(double min_x_, double min_y_, double max_x_, double max_y_)
    : min_x(min_x_), min_y(min_y_), max_x(max_x_), max_y(max_y_) {
  if (!(min_x <= max_x) || !(min_y <= max_y)) {
    throw GeometryError("rectangle with min > max");
  }
}

void Rect::expand(const Rect& o) {
  min_x = std::min(min_x, o.min_x);
  min_y = std::min(min_y, o.min_y);
  max_x = std::max(max_x, o.max_x);
  max_y = std::max(max_y, o.max_y);
}

void Rect::expand(Coord c) { expand(Rect::around(c)); }

std::string_view to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Point: return "POINT";
    case GeometryKind::LineString: return "LINESTRING";
    case GeometryKind::Polygon: return "POLYGON";
    case GeometryKind::MultiLineString: return "MULTILINESTRING";
    case GeometryKind::MultiPolygon: return "MULTIPOLYGON";
  }
  return "UNKNOWN";
}

double signed_ring_area(const Ring& ring) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    sum += ring[i].x * ring[i + 1].y - ring[i + 1].x * ring[i].y;
  }
  return sum / 2.0;
}

Geometry Geometry::point(Coord c) {
  require_finite(c);
  return Geometry(GeometryKind::Point, c);
}

Geometry Geometry::line_string(std::vector<Coord> coords) {
  return Geometry(GeometryKind::LineString, validate_line(std::move(coords)));
}

Geometry Geometry::polygon(Ring exterior, std::vector<Ring> interiors) {
  return polygon(PolygonRings{std::move(exterior), std::move(interiors)});
}

Geometry Geometry::polygon(PolygonRings rings) {
  return Geometry(GeometryKind::Polygon, normalize_polygon(std::move(rings)));
}

Geometry Geometry::multi_line_string(std::vector<std::vector<Coord>> lines) {
  if (lines.empty()) throw GeometryError("empty multilinestring");
  for (auto& l : lines) l = validate_line(std::move(l));
  return Geometry(GeometryKind::MultiLineString, std::move(lines));
}

Geometry Geometry::multi_polygon(std::vector<PolygonRings> polygons) {
  if (polygons.empty()) throw GeometryError("empty multipolygon");
  for (auto& p : polygons) p = normalize_polygon(std::move(p));
  return Geometry(GeometryKind::MultiPolygon, std::move(polygons));
}

Geometry Geometry::from_rect(const Rect& r) {
  if (r.width() <= 0.0 || r.height() <= 0.0) {
    throw GeometryError("degenerate rectangle has no polygon form");
  }
  return polygon(Ring{{r.min_x, r.min_y},
                      {r.max_x, r.min_y},
                      {r.max_x, r.max_y},
                      {r.min_x, r.max_y},
                      {r.min_x, r.min_y}});
}

int Geometry::dimension() const {
  switch (kind_) {
    case GeometryKind::Point: return 0;
    case GeometryKind::LineString:
    case GeometryKind::MultiLineString: return 1;
    case GeometryKind::Polygon:
    case GeometryKind::MultiPolygon: return 2;
  }
  return 0;
}

Coord Geometry::as_point() const {
  if (kind_ != GeometryKind::Point) throw GeometryError("not a point");
  return std::get<Coord>(data_);
}

const std::vector<Coord>& Geometry::as_line_string() const {
  if (kind_ != GeometryKind::LineString) throw GeometryError("not a linestring");
  return std::get<std::vector<Coord>>(data_);
}

const PolygonRings& Geometry::as_polygon() const {
  if (kind_ != GeometryKind::Polygon) throw GeometryError("not a polygon");
  return std::get<PolygonRings>(data_);
}

const std::vector<std::vector<Coord>>& Geometry::as_multi_line_string() const {
  if (kind_ != GeometryKind::MultiLineString) throw GeometryError("not a multilinestring");
  return std::get<std::vector<std::vector<Coord>>>(data_);
}

const std::vector<PolygonRings>& Geometry::as_multi_polygon() const {
  if (kind_ != GeometryKind::MultiPolygon) throw GeometryError("not a multipolygon");
  return std::get<std::vector<PolygonRings>>(data_);
}

std::vector<PolygonRings> Geometry::polygons() const {
  if (kind_ == GeometryKind::Polygon) return {as_polygon()};
  if (kind_ == GeometryKind::MultiPolygon) return as_multi_polygon();
  throw GeometryError("geometry is not areal");
}

std::vector<Coord> Geometry::vertices() const {
  std::vector<Coord> out;
  auto append_polygon = [&out](const PolygonRings& p) {
    out.insert(out.end(), p.exterior.begin(), p.exterior.end());
    for (const auto& h : p.interiors) out.insert(out.end(), h.begin(), h.end());
  };
  switch (kind_) {
    case GeometryKind::Point: out.push_back(as_point()); break;
    case GeometryKind::LineString: out = as_line_string(); break;
    case GeometryKind::Polygon: append_polygon(as_polygon()); break;
    case GeometryKind::MultiLineString:
      for (const auto& l : as_multi_line_string()) out.insert(out.end(), l.begin(), l.end());
      break;
    case GeometryKind::MultiPolygon:
      for (const auto& p : as_multi_polygon()) append_polygon(p);
      break;
  }
  return out;
}

Geometry canonicalize(const Geometry& g) {
  switch (g.kind()) {
    case GeometryKind::Point:
    case GeometryKind::LineString:
    case GeometryKind::MultiLineString:
      return g;
    case GeometryKind::Polygon:
      return Geometry::polygon(canonical_polygon(g.as_polygon()));
    case GeometryKind::MultiPolygon: {
      std::vector<PolygonRings> polys;
      for (const auto& p : g.as_multi_polygon()) polys.push_back(canonical_polygon(p));
      std::sort(polys.begin(), polys.end(), [](const PolygonRings& a, const PolygonRings& b) {
        const Coord& ca = a.exterior.front();
        const Coord& cb = b.exterior.front();
        return ca.x < cb.x || (ca.x == cb.x && ca.y < cb.y);
      });
      return Geometry::multi_polygon(std::move(polys));
    }
  }
  return g;
}

bool equal_within(const Geometry& a, const Geometry& b, double tolerance) {
  if (a.kind() != b.kind()) return false;
  Geometry ca = canonicalize(a);
  Geometry cb = canonicalize(b);
  switch (ca.kind()) {
    case GeometryKind::Point:
      return coords_close({ca.as_point()}, {cb.as_point()}, tolerance);
    case GeometryKind::LineString: {
      const auto& la = ca.as_line_string();
      const auto& lb = cb.as_line_string();
      if (coords_close(la, lb, tolerance)) return true;
      std::vector<Coord> reversed(lb.rbegin(), lb.rend());
      return coords_close(la, reversed, tolerance);
    }
    case GeometryKind::MultiLineString: {
      const auto& la = ca.as_multi_line_string();
      const auto& lb = cb.as_multi_line_string();
      if (la.size() != lb.size()) return false;
      for (std::size_t i = 0; i < la.size(); ++i) {
        if (!coords_close(la[i], lb[i], tolerance)) return false;
      }
      return true;
    }
    case GeometryKind::Polygon:
      return polygons_close(ca.as_polygon(), cb.as_polygon(), tolerance);
    case GeometryKind::MultiPolygon: {
      const auto& pa = ca.as_multi_polygon();
      const auto& pb = cb.as_multi_polygon();
      if (pa.size() != pb.size()) return false;
      for (std::size_t i = 0; i < pa.size(); ++i) {
        if (!polygons_close(pa[i], pb[i], tolerance)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace geobench
