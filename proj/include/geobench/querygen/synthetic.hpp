#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geobench/generator/generator.hpp"
#include "geobench/querygen/calibrate.hpp"
#include "geobench/querygen/spec.hpp"

namespace geobench {

struct SyntheticPlanOptions {
  std::vector<double> fractions{0.0001, 0.10, 0.25, 0.50, 0.75};
  std::vector<PredicateName> functions{PredicateName::Intersects, PredicateName::Touches, PredicateName::Within};
  /// Tag keys used for THEMA; empty means {1, 2^k} of the dataset.
  std::vector<std::uint64_t> themas;
  CalibrationOptions calibration;
};

using QuerySpec = std::variant<SelectionQuerySpec, JoinQuerySpec>;

struct PlannedQuery {
  std::string query_id;  // e.g. sel-land-intersects-t1-f0.25
  RenderedQuery query;
  QuerySpec spec;
  std::optional<Calibration> calibration;  // selections only
};

/// Layer a selection with `function` runs over, if the function has one:
/// intersects on land ownership, within on points of interest.
std::optional<LayerKind> selection_layer(PredicateName function);
/// Layer pair a join with `function` runs over: land/state for intersects,
/// state/state for touches, poi/state for within.
std::optional<std::pair<LayerKind, LayerKind>> join_layers(PredicateName function);

/// Every selection (function x fraction x thema) followed by every join
/// (function x thema1 x thema2), rendered in `dialect`. Rectangles are
/// calibrated once per (layer, function, fraction). Query ids are unique.
std::vector<PlannedQuery> plan_synthetic(const SyntheticDataset& dataset, const QueryCatalog& catalog,
                                         const Dialect& dialect, const SyntheticPlanOptions& options = {});

/// Shortest decimal text that round-trips, used inside query ids.
std::string format_fraction(double f);

}  // namespace geobench
