#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "geobench/querygen/spec.hpp"
#include "geobench/querygen/synthetic.hpp"
#include "geobench/refeval/dataset.hpp"

namespace geobench {

using IdPair = std::pair<FeatureId, FeatureId>;

/// Ids tagged spec.thema whose geometry satisfies spec.function against the
/// polygon of spec.geom, ascending. Tag carriers are intersected with the
/// index window before the exact predicate runs. Throws
/// UnknownNamespaceError when the layer is absent.
std::vector<FeatureId> eval_selection(const Dataset& ds, const SelectionQuerySpec& spec);

/// Pairs (id1, id2) with function(geom1, geom2), each side filtered by its
/// key, sorted lexicographically. The side with fewer carriers is indexed.
std::vector<IdPair> eval_join(const Dataset& ds, const JoinQuerySpec& spec);

/// Result size of either query kind without materializing it.
std::size_t expected_cardinality(const Dataset& ds, const SelectionQuerySpec& spec);
std::size_t expected_cardinality(const Dataset& ds, const JoinQuerySpec& spec);
std::size_t expected_cardinality(const Dataset& ds, const QuerySpec& spec);

/// Feature of `kind` at the smallest exact distance from `q`; ties go to the
/// smaller id. Throws std::invalid_argument for an empty layer.
FeatureId nearest_neighbor(const Dataset& ds, Coord q, LayerKind kind);

}  // namespace geobench
