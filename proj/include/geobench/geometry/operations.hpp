#pragma once

#include <optional>
#include <span>

#include "geobench/geometry/geometry.hpp"

namespace geobench {

enum class ConstructKind { Boundary, Envelope, ConvexHull, Buffer };

struct BufferOptions {
  /// Arc segments per quarter circle.
  int segments_per_quadrant = 8;
};

/// Tightest axis-aligned rectangle containing g.
Rect mbr(const Geometry& g);

/// Non-topological constructors. `radius` must be present (and > 0) exactly
/// when kind is Buffer.
Geometry construct(ConstructKind kind, const Geometry& g, std::optional<double> radius = std::nullopt,
                   BufferOptions options = {});

Geometry boundary(const Geometry& g);
/// Polygon of the mbr; a degenerate mbr yields a point or a linestring.
Geometry envelope(const Geometry& g);
/// Convex polygon over all vertices (point or segment for degenerate input).
Geometry convex_hull(const Geometry& g);
Geometry buffer(const Geometry& g, double radius, BufferOptions options = {});

/// Shoelace area of exteriors minus interiors. Throws for non-areal input.
double area(const Geometry& g);

/// Minimum Euclidean distance between the point sets; 0 when they intersect.
double distance(const Geometry& a, const Geometry& b);

/// Bounding rectangle of all inputs. Throws on empty input.
Rect aggregate_extent(std::span<const Geometry> geoms);

/// Dissolved union of areal inputs. Throws on empty or non-areal input.
Geometry aggregate_union(std::span<const Geometry> geoms);

}  // namespace geobench
