#include "geobench/geometry/operations.hpp"

#include <algorithm>
#include <cmath>

#include "boost_adapter.hpp"

namespace geobench {

namespace bg = boost::geometry;
using detail::BMultiPolygon;

namespace {

double cross(Coord o, Coord a, Coord b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

BMultiPolygon as_multi(const Geometry& g) {
  BMultiPolygon mp;
  for (const auto& p : g.polygons()) mp.push_back(detail::to_boost_polygon(p));
  return mp;
}

}  // namespace

Rect mbr(const Geometry& g) {
  auto verts = g.vertices();
  Rect r = Rect::around(verts.front());
  for (const auto& c : verts) r.expand(c);
  return r;
}

Geometry boundary(const Geometry& g) {
  if (!g.is_areal()) throw GeometryError("boundary is only defined here for areal geometries");
  std::vector<std::vector<Coord>> rings;
  for (const auto& p : g.polygons()) {
    rings.push_back(p.exterior);
    for (const auto& h : p.interiors) rings.push_back(h);
  }
  if (rings.size() == 1) return Geometry::line_string(std::move(rings.front()));
  return Geometry::multi_line_string(std::move(rings));
}

Geometry envelope(const Geometry& g) {
  Rect r = mbr(g);
  if (r.width() > 0.0 && r.height() > 0.0) return Geometry::from_rect(r);
  if (r.width() == 0.0 && r.height() == 0.0) return Geometry::point(r.min_x, r.min_y);
  return Geometry::line_string({{r.min_x, r.min_y}, {r.max_x, r.max_y}});
}

Geometry convex_hull(const Geometry& g) {
  // Andrew's monotone chain.
  auto pts = g.vertices();
  std::sort(pts.begin(), pts.end(),
            [](Coord a, Coord b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Geometry::point(pts.front());

  std::vector<Coord> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k);  // closed: last == first
  if (hull.size() < 4) {
    // Collinear input collapses to its extreme segment.
    return Geometry::line_string({pts.front(), pts.back()});
  }
  return Geometry::polygon(std::move(hull));
}

Geometry buffer(const Geometry& g, double radius, BufferOptions options) {
  if (!(radius > 0.0)) throw GeometryError("buffer radius must be positive");
  if (options.segments_per_quadrant < 1) throw GeometryError("buffer needs >= 1 segment per quadrant");
  const int per_circle = 4 * options.segments_per_quadrant;

  bg::strategy::buffer::distance_symmetric<double> dist(radius);
  bg::strategy::buffer::join_round join(per_circle);
  bg::strategy::buffer::end_round end(per_circle);
  bg::strategy::buffer::point_circle circle(per_circle);
  bg::strategy::buffer::side_straight side;

  BMultiPolygon out;
  std::visit([&](const auto& geom) { bg::buffer(geom, out, dist, side, join, end, circle); },
             detail::to_boost(g));
  return detail::from_boost(out);
}

Geometry construct(ConstructKind kind, const Geometry& g, std::optional<double> radius,
                   BufferOptions options) {
  if ((kind == ConstructKind::Buffer) != radius.has_value()) {
    throw GeometryError("radius must be given for buffer and only for buffer");
  }
  switch (kind) {
    case ConstructKind::Boundary: return boundary(g);
    case ConstructKind::Envelope: return envelope(g);
    case ConstructKind::ConvexHull: return convex_hull(g);
    case ConstructKind::Buffer: return buffer(g, *radius, options);
  }
  return g;
}

double area(const Geometry& g) {
  if (!g.is_areal()) throw GeometryError("area of non-areal geometry");
  double total = 0.0;
  for (const auto& p : g.polygons()) {
    total += std::abs(signed_ring_area(p.exterior));
    for (const auto& h : p.interiors) total -= std::abs(signed_ring_area(h));
  }
  return std::max(total, 0.0);
}

double distance(const Geometry& a, const Geometry& b) {
  auto ba = detail::to_boost(a);
  auto bb = detail::to_boost(b);
  return std::visit([](const auto& x, const auto& y) { return bg::distance(x, y); }, ba, bb);
}

Rect aggregate_extent(std::span<const Geometry> geoms) {
  if (geoms.empty()) throw GeometryError("extent of an empty sequence");
  Rect r = mbr(geoms.front());
  for (const auto& g : geoms) r.expand(mbr(g));
  return r;
}

Geometry aggregate_union(std::span<const Geometry> geoms) {
  if (geoms.empty()) throw GeometryError("union of an empty sequence");
  std::vector<BMultiPolygon> parts;
  parts.reserve(geoms.size());
  for (const auto& g : geoms) parts.push_back(as_multi(g));
  // Pairwise reduction keeps operand sizes balanced.
  while (parts.size() > 1) {
    std::vector<BMultiPolygon> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      BMultiPolygon merged;
      bg::union_(parts[i], parts[i + 1], merged);
      next.push_back(std::move(merged));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return detail::from_boost(parts.front());
}

}  // namespace geobench
