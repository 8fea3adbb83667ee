#include "geobench/geometry/wkt.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace geobench {

WktParseError::WktParseError(const std::string& what, std::size_t offset)
    : std::runtime_error("WKT parse error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

class WktReader {
 public:
  explicit WktReader(std::string_view text) : text_(text) {}

  Geometry parse() {
    skip_space();
    std::size_t tag_at = pos_;
    std::string tag = word();
    Geometry g = [&] {
      if (tag == "POINT") return parse_point();
      if (tag == "LINESTRING") return wrap(tag_at, [&] { return Geometry::line_string(coord_list()); });
      if (tag == "POLYGON") return wrap(tag_at, [&] { return Geometry::polygon(rings()); });
      if (tag == "MULTILINESTRING") return wrap(tag_at, [&] { return parse_multi_line(); });
      if (tag == "MULTIPOLYGON") return wrap(tag_at, [&] { return parse_multi_polygon(); });
      if (tag.empty()) fail("expected geometry tag");
      fail_at("unsupported geometry kind '" + tag + "'", tag_at);
    }();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw WktParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw WktParseError(what, at);
  }

  template <typename F>
  Geometry wrap(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const GeometryError& e) {
      fail_at(e.what(), at);
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_]))));
      ++pos_;
    }
    return out;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool try_number(double& out) {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin < end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr == begin) return false;
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

  Coord coord() {
    std::size_t start = pos_;
    double x = 0.0;
    double y = 0.0;
    if (!try_number(x)) fail("expected number");
    if (!try_number(y)) fail_at("coordinate arity: expected 2 ordinates", start);
    double extra = 0.0;
    std::size_t before_extra = pos_;
    if (try_number(extra)) fail_at("coordinate arity: only 2-D coordinates supported", before_extra);
    if (!std::isfinite(x) || !std::isfinite(y)) fail_at("non-finite coordinate", start);
    return {x, y};
  }

  std::vector<Coord> coord_list() {
    expect('(');
    std::vector<Coord> coords{coord()};
    while (peek(',')) {
      ++pos_;
      coords.push_back(coord());
    }
    expect(')');
    return coords;
  }

  PolygonRings rings() {
    expect('(');
    PolygonRings p;
    std::size_t ring_at = pos_;
    p.exterior = coord_list();
    check_closed(p.exterior, ring_at);
    while (peek(',')) {
      ++pos_;
      ring_at = pos_;
      p.interiors.push_back(coord_list());
      check_closed(p.interiors.back(), ring_at);
    }
    expect(')');
    return p;
  }

  void check_closed(const Ring& ring, std::size_t at) {
    if (ring.size() < 4) fail_at("ring needs at least 4 vertices", at);
    if (ring.front() != ring.back()) fail_at("open ring", at);
  }

  Geometry parse_point() {
    expect('(');
    Coord c = coord();
    expect(')');
    return Geometry::point(c);
  }

  Geometry parse_multi_line() {
    expect('(');
    std::vector<std::vector<Coord>> lines{coord_list()};
    while (peek(',')) {
      ++pos_;
      lines.push_back(coord_list());
    }
    expect(')');
    return Geometry::multi_line_string(std::move(lines));
  }

  Geometry parse_multi_polygon() {
    expect('(');
    std::vector<PolygonRings> polys{rings()};
    while (peek(',')) {
      ++pos_;
      polys.push_back(rings());
    }
    expect(')');
    return Geometry::multi_polygon(std::move(polys));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_coords(std::string& out, const std::vector<Coord>& coords, int precision) {
  out += '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += format_fixed(coords[i].x, precision);
    out += ' ';
    out += format_fixed(coords[i].y, precision);
  }
  out += ')';
}

void write_polygon(std::string& out, const PolygonRings& p, int precision) {
  out += '(';
  write_coords(out, p.exterior, precision);
  for (const auto& h : p.interiors) {
    out += ", ";
    write_coords(out, h, precision);
  }
  out += ')';
}

}  // namespace

Geometry parse_wkt(std::string_view text) { return WktReader(text).parse(); }

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
  if (ec != std::errc()) throw std::runtime_error("coordinate too large to format");
  std::string s(buf, ptr);
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

double snap_to_precision(double value, int precision) {
  std::string s = format_fixed(value, precision);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::string to_wkt(const Geometry& g, int precision) {
  std::string out(to_string(g.kind()));
  out += ' ';
  switch (g.kind()) {
    case GeometryKind::Point: {
      Coord c = g.as_point();
      write_coords(out, {c}, precision);
      break;
    }
    case GeometryKind::LineString:
      write_coords(out, g.as_line_string(), precision);
      break;
    case GeometryKind::Polygon:
      write_polygon(out, g.as_polygon(), precision);
      break;
    case GeometryKind::MultiLineString: {
      out += '(';
      const auto& lines = g.as_multi_line_string();
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += ", ";
        write_coords(out, lines[i], precision);
      }
      out += ')';
      break;
    }
    case GeometryKind::MultiPolygon: {
      out += '(';
      const auto& polys = g.as_multi_polygon();
      for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += ", ";
        write_polygon(out, polys[i], precision);
      }
      out += ')';
      break;
    }
  }
  return out;
}

std::string to_wkt(const Rect& r, int precision) {
  return to_wkt(Geometry::from_rect(r), precision);
}

}  // namespace geobench
