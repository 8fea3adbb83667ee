#include "geobench/geometry/relate.hpp"

#include <stdexcept>

#include "boost_adapter.hpp"

namespace geobench {

std::string_view to_string(PredicateName p) {
  switch (p) {
    case PredicateName::Equals: return "equals";
    case PredicateName::Disjoint: return "disjoint";
    case PredicateName::Intersects: return "intersects";
    case PredicateName::Touches: return "touches";
    case PredicateName::Crosses: return "crosses";
    case PredicateName::Within: return "within";
    case PredicateName::Contains: return "contains";
    case PredicateName::Overlaps: return "overlaps";
  }
  return "unknown";
}

std::optional<PredicateName> parse_predicate(std::string_view name) {
  for (PredicateName p : kAllPredicates) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

De9im::De9im(std::string_view cells) {
  if (cells.size() != 9) throw std::invalid_argument("DE-9IM matrix needs 9 cells");
  for (std::size_t i = 0; i < 9; ++i) {
    char c = cells[i];
    if (c != 'F' && c != '0' && c != '1' && c != '2') {
      throw std::invalid_argument("invalid DE-9IM cell '" + std::string(1, c) + "'");
    }
    cells_[i] = c;
  }
}

bool De9im::matches(std::string_view mask) const {
  if (mask.size() != 9) throw std::invalid_argument("DE-9IM mask needs 9 cells");
  for (std::size_t i = 0; i < 9; ++i) {
    char want = mask[i];
    char have = cells_[i];
    switch (want) {
      case '*': break;
      case 'T':
        if (have == 'F') return false;
        break;
      case 'F':
      case '0':
      case '1':
      case '2':
        if (have != want) return false;
        break;
      default: throw std::invalid_argument("invalid DE-9IM mask character");
    }
  }
  return true;
}

De9im De9im::transposed() const {
  std::string t(9, 'F');
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t[static_cast<std::size_t>(c * 3 + r)] = at(r, c);
  }
  return De9im(t);
}

De9im relate(const Geometry& a, const Geometry& b) {
  auto ba = detail::to_boost(a);
  auto bb = detail::to_boost(b);
  return std::visit(
      [](const auto& x, const auto& y) {
        return De9im(boost::geometry::relation(x, y).str());
      },
      ba, bb);
}

bool predicate_holds(PredicateName pred, const De9im& m, int dim_a, int dim_b) {
  switch (pred) {
    case PredicateName::Equals: return m.matches("T*F**FFF*");
    case PredicateName::Disjoint: return m.matches("FF*FF****");
    case PredicateName::Intersects: return !m.matches("FF*FF****");
    case PredicateName::Touches:
      return m.matches("FT*******") || m.matches("F**T*****") || m.matches("F***T****");
    case PredicateName::Within: return m.matches("T*F**F***");
    case PredicateName::Contains: return m.matches("T*****FF*");
    case PredicateName::Crosses:
      if (dim_a < dim_b) return m.matches("T*T******");
      if (dim_a > dim_b) return m.matches("T*****T**");
      if (dim_a == 1) return m.matches("0********");
      return false;
    case PredicateName::Overlaps:
      if (dim_a != dim_b) return false;
      if (dim_a == 1) return m.matches("1*T***T**");
      return m.matches("T*T***T**");
  }
  return false;
}

bool topological_relate(PredicateName pred, const Geometry& a, const Geometry& b) {
  return predicate_holds(pred, relate(a, b), a.dimension(), b.dimension());
}

}  // namespace geobench
