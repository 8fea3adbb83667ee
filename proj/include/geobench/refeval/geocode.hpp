#pragma once

#include <string>

#include "geobench/geometry/geometry.hpp"

namespace geobench {

enum class StreetSide { Left, Right };
/// Odd, even, or both parities present on a side.
enum class Parity { Odd, Even, Both };

/// One street segment of an address-range table.
struct StreetSegment {
  Geometry geometry = Geometry::line_string({{0, 0}, {1, 0}});
  std::string fullname;
  long lfromhn = 0, ltohn = 0, rfromhn = 0, rtohn = 0;
  Parity parityl = Parity::Both, parityr = Parity::Both;
  std::string zipl, zipr;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;

  /// Throws std::invalid_argument unless from <= to per side and each
  /// side's parity matches both range endpoints.
  void validate() const;
};

/// Segment over `line` with the interpolation box taken from its first and
/// last vertex, so that range endpoints land on the line's endpoints.
StreetSegment make_street_segment(const Geometry& line, long from, long to, Parity parity);

/// Linear interpolation of a house number along one side:
/// t = (number - from) / (to - from), point = (1 - t) * min + t * max.
/// A single-number range maps to the min corner. Throws
/// std::invalid_argument when the number is out of range or of the wrong
/// parity.
Coord geocode_interpolate(const StreetSegment& seg, StreetSide side, long house_number);

}  // namespace geobench
