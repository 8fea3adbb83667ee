#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "geobench/geometry/geometry.hpp"

namespace geobench {

/// Raised for malformed WKT. `offset()` is the byte offset of the failure.
class WktParseError : public std::runtime_error {
 public:
  WktParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses 2-D POINT, LINESTRING, POLYGON, MULTILINESTRING and MULTIPOLYGON.
/// Tags are case-insensitive; the result is normalized (see Geometry).
Geometry parse_wkt(std::string_view text);

/// Uppercase tag, one space after the tag, `precision` fixed decimals.
std::string to_wkt(const Geometry& g, int precision = 6);
std::string to_wkt(const Rect& r, int precision = 6);

/// Fixed-point rendering used by the writer; never emits "-0.000".
std::string format_fixed(double value, int precision);

/// Rounds `value` to the double that `format_fixed(value, precision)` parses back to.
double snap_to_precision(double value, int precision);

}  // namespace geobench
