#include "geobench/refeval/geocode.hpp"

#include <stdexcept>

namespace geobench {

namespace {

bool parity_ok(Parity p, long n) {
  switch (p) {
    case Parity::Odd: return n % 2 != 0;
    case Parity::Even: return n % 2 == 0;
    case Parity::Both: return true;
  }
  return false;
}

void check_side(long from, long to, Parity p, const char* side) {
  if (from > to) throw std::invalid_argument(std::string(side) + " range runs backwards");
  if (!parity_ok(p, from) || !parity_ok(p, to)) {
    throw std::invalid_argument(std::string(side) + " range endpoints disagree with its parity");
  }
}

}  // namespace

void StreetSegment::validate() const {
  if (geometry.kind() != GeometryKind::LineString) throw std::invalid_argument("street geometry must be a line");
  check_side(lfromhn, ltohn, parityl, "left");
  check_side(rfromhn, rtohn, parityr, "right");
}

StreetSegment make_street_segment(const Geometry& line, long from, long to, Parity parity) {
  if (line.kind() != GeometryKind::LineString) throw std::invalid_argument("street geometry must be a line");
  const auto& pts = line.as_line_string();
  StreetSegment s;
  s.geometry = line;
  s.lfromhn = s.rfromhn = from;
  s.ltohn = s.rtohn = to;
  s.parityl = s.parityr = parity;
  s.minx = pts.front().x;
  s.miny = pts.front().y;
  s.maxx = pts.back().x;
  s.maxy = pts.back().y;
  s.validate();
  return s;
}

Coord geocode_interpolate(const StreetSegment& seg, StreetSide side, long house_number) {
  const bool left = side == StreetSide::Left;
  const long from = left ? seg.lfromhn : seg.rfromhn;
  const long to = left ? seg.ltohn : seg.rtohn;
  const Parity parity = left ? seg.parityl : seg.parityr;
  if (house_number < from || house_number > to) {
    throw std::invalid_argument("house number " + std::to_string(house_number) + " outside " +
                                std::to_string(from) + "-" + std::to_string(to));
  }
  if (!parity_ok(parity, house_number)) {
    throw std::invalid_argument("house number " + std::to_string(house_number) + " has the wrong parity");
  }
  if (house_number == from) return {seg.minx, seg.miny};
  if (house_number == to) return {seg.maxx, seg.maxy};
  const double t = static_cast<double>(house_number - from) / static_cast<double>(to - from);
  return {(1 - t) * seg.minx + t * seg.maxx, (1 - t) * seg.miny + t * seg.maxy};
}

}  // namespace geobench
