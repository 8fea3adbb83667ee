#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "geobench/geometry/geometry.hpp"

namespace geobench {

enum class PredicateName { Equals, Disjoint, Intersects, Touches, Crosses, Within, Contains, Overlaps };

inline constexpr std::array<PredicateName, 8> kAllPredicates = {
    PredicateName::Equals,  PredicateName::Disjoint, PredicateName::Intersects,
    PredicateName::Touches, PredicateName::Crosses,  PredicateName::Within,
    PredicateName::Contains, PredicateName::Overlaps};

/// Lowercase name ("within", ...).
std::string_view to_string(PredicateName p);
std::optional<PredicateName> parse_predicate(std::string_view name);

/// Dimensionally extended nine-intersection matrix, row-major over
/// (Interior, Boundary, Exterior) of a by the same of b. Entries are
/// 'F', '0', '1' or '2'.
class De9im {
 public:
  De9im() { cells_.fill('F'); }
  explicit De9im(std::string_view cells);

  char at(int row, int col) const { return cells_[static_cast<std::size_t>(row * 3 + col)]; }
  std::string str() const { return std::string(cells_.begin(), cells_.end()); }

  /// Pattern match against a 9-character mask over {T, F, *, 0, 1, 2}.
  bool matches(std::string_view mask) const;

  De9im transposed() const;

 private:
  std::array<char, 9> cells_;
};

/// Intersection matrix of (a, b).
De9im relate(const Geometry& a, const Geometry& b);

/// Simple-features predicate derived from the matrix and the dimensions of a and b.
bool predicate_holds(PredicateName pred, const De9im& m, int dim_a, int dim_b);

/// pred(a, b), evaluated through relate().
bool topological_relate(PredicateName pred, const Geometry& a, const Geometry& b);

}  // namespace geobench
