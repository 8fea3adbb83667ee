#pragma once

#include <cstddef>

#include "geobench/generator/generator.hpp"
#include "geobench/geometry/relate.hpp"
#include "geobench/geometry/spatial_index.hpp"

namespace geobench {

struct CalibrationOptions {
  /// Candidate rectangle widths, as evenly spaced fractions of the extent width.
  int widths = 128;
  /// Rectangles are snapped to this many decimals, as rendered in queries.
  int precision = 6;
};

struct Calibration {
  Rect rect;
  std::size_t count = 0;  // features satisfying pred(feature, rect)
  std::size_t total = 0;
  double target = 0.0;    // requested fraction
  double achieved = 0.0;  // count / total
};

/// Index over the mbrs of a layer, keyed by feature id.
SpatialIndex index_layer(const FeatureLayer& layer);

/// Exact number of features f with pred(f, rect), by index filter and
/// relate refinement.
std::size_t spatial_count(const FeatureLayer& layer, const SpatialIndex& index, PredicateName pred,
                          const Rect& rect);

/// Rectangle centered on the layer extent whose spatial selectivity for
/// `pred` is the closest attainable to `fraction`, never selecting nothing.
///
/// Candidates form a fixed family for the layer and predicate, so the chosen
/// count is non-decreasing in `fraction` (non-increasing for disjoint).
/// Intersects, within and disjoint use, per candidate width, the exact
/// height at which each feature starts to satisfy the predicate; other
/// predicates scan aspect-matched scales. fraction == 1 returns the extent.
/// Throws std::invalid_argument for an empty layer or fraction outside (0, 1].
Calibration target_rectangle(const FeatureLayer& layer, PredicateName pred, double fraction,
                             const SpatialIndex& index, const CalibrationOptions& options = {});

}  // namespace geobench
