#pragma once

// Conversions between geobench::Geometry and Boost.Geometry models. Private to
// the geometry sources so that only a few translation units pay for Boost.

#include <variant>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/linestring.hpp>
#include <boost/geometry/geometries/multi_linestring.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "geobench/geometry/geometry.hpp"

namespace geobench::detail {

namespace bg = boost::geometry;

using BPoint = bg::model::d2::point_xy<double>;
using BLine = bg::model::linestring<BPoint>;
using BMultiLine = bg::model::multi_linestring<BLine>;
using BPolygon = bg::model::polygon<BPoint, /*ClockWise=*/false, /*Closed=*/true>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;
using BBox = bg::model::box<BPoint>;
using BGeometry = std::variant<BPoint, BLine, BMultiLine, BPolygon, BMultiPolygon>;

inline BPoint to_boost(Coord c) { return BPoint(c.x, c.y); }

inline BLine to_boost_line(const std::vector<Coord>& coords) {
  BLine line;
  line.reserve(coords.size());
  for (const auto& c : coords) line.push_back(to_boost(c));
  return line;
}

inline BPolygon to_boost_polygon(const PolygonRings& p) {
  BPolygon poly;
  poly.outer().reserve(p.exterior.size());
  for (const auto& c : p.exterior) poly.outer().push_back(to_boost(c));
  for (const auto& hole : p.interiors) {
    poly.inners().emplace_back();
    for (const auto& c : hole) poly.inners().back().push_back(to_boost(c));
  }
  return poly;
}

inline BGeometry to_boost(const Geometry& g) {
  switch (g.kind()) {
    case GeometryKind::Point: return to_boost(g.as_point());
    case GeometryKind::LineString: return to_boost_line(g.as_line_string());
    case GeometryKind::MultiLineString: {
      BMultiLine ml;
      for (const auto& l : g.as_multi_line_string()) ml.push_back(to_boost_line(l));
      return ml;
    }
    case GeometryKind::Polygon: return to_boost_polygon(g.as_polygon());
    case GeometryKind::MultiPolygon: {
      BMultiPolygon mp;
      for (const auto& p : g.as_multi_polygon()) mp.push_back(to_boost_polygon(p));
      return mp;
    }
  }
  return BPoint();
}

inline Ring from_boost_ring(const BPolygon::ring_type& ring) {
  Ring out;
  out.reserve(ring.size());
  for (const auto& p : ring) out.push_back({p.x(), p.y()});
  return out;
}

inline PolygonRings from_boost(const BPolygon& poly) {
  PolygonRings out;
  out.exterior = from_boost_ring(poly.outer());
  for (const auto& hole : poly.inners()) out.interiors.push_back(from_boost_ring(hole));
  return out;
}

/// Polygon for a single member, MultiPolygon otherwise.
inline Geometry from_boost(const BMultiPolygon& mp) {
  if (mp.empty()) throw GeometryError("operation produced an empty geometry");
  if (mp.size() == 1) return Geometry::polygon(from_boost(mp.front()));
  std::vector<PolygonRings> polys;
  polys.reserve(mp.size());
  for (const auto& p : mp) polys.push_back(from_boost(p));
  return Geometry::multi_polygon(std::move(polys));
}

}  // namespace geobench::detail
