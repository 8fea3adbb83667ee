#include "geobench/refeval/eval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/relate.hpp"

namespace geobench {

namespace {

// Disjoint is the only predicate that holds without the mbrs meeting.
bool needs_contact(PredicateName p) { return p != PredicateName::Disjoint; }

template <typename Sink>
void for_each_selected(const Dataset& ds, const SelectionQuerySpec& spec, Sink&& sink) {
  validate_thema(spec.thema);
  const auto carriers = ds.carriers(spec.layer, spec.thema);
  const Geometry window = Geometry::from_rect(spec.geom);
  auto test = [&](FeatureId id) {
    if (topological_relate(spec.function, ds.feature(spec.layer, id).geometry, window)) sink(id);
  };
  if (!needs_contact(spec.function)) {
    for (FeatureId id : carriers) test(id);
    return;
  }
  const std::vector<FeatureId> hits = ds.index(spec.layer).query(spec.geom);
  std::vector<FeatureId> both;
  std::set_intersection(carriers.begin(), carriers.end(), hits.begin(), hits.end(), std::back_inserter(both));
  for (FeatureId id : both) test(id);
}

template <typename Sink>
void for_each_pair(const Dataset& ds, const JoinQuerySpec& spec, Sink&& sink) {
  validate_thema(spec.thema1);
  validate_thema(spec.thema2);
  const auto left = ds.carriers(spec.layer1, spec.thema1);
  const auto right = ds.carriers(spec.layer2, spec.thema2);
  if (left.empty() || right.empty()) return;
  auto test = [&](FeatureId a, FeatureId b) {
    if (topological_relate(spec.function, ds.feature(spec.layer1, a).geometry,
                           ds.feature(spec.layer2, b).geometry)) {
      sink(a, b);
    }
  };
  if (!needs_contact(spec.function)) {
    for (FeatureId a : left) {
      for (FeatureId b : right) test(a, b);
    }
    return;
  }
  // Index the smaller side's carriers; probe with the other side's mbrs.
  const bool build_left = left.size() < right.size();
  const auto build = build_left ? left : right;
  const auto probe = build_left ? right : left;
  const LayerKind build_kind = build_left ? spec.layer1 : spec.layer2;
  const LayerKind probe_kind = build_left ? spec.layer2 : spec.layer1;
  std::vector<IndexEntry> entries;
  entries.reserve(build.size());
  for (FeatureId id : build) entries.push_back({id, mbr(ds.feature(build_kind, id).geometry)});
  const SpatialIndex index = SpatialIndex::build(entries);
  for (FeatureId p : probe) {
    for (FeatureId b : index.query(mbr(ds.feature(probe_kind, p).geometry))) {
      if (build_left) {
        test(b, p);
      } else {
        test(p, b);
      }
    }
  }
}

}  // namespace

std::vector<FeatureId> eval_selection(const Dataset& ds, const SelectionQuerySpec& spec) {
  std::vector<FeatureId> out;
  for_each_selected(ds, spec, [&](FeatureId id) { out.push_back(id); });
  return out;  // both input paths are already ascending
}

std::vector<IdPair> eval_join(const Dataset& ds, const JoinQuerySpec& spec) {
  std::vector<IdPair> out;
  for_each_pair(ds, spec, [&](FeatureId a, FeatureId b) { out.emplace_back(a, b); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t expected_cardinality(const Dataset& ds, const SelectionQuerySpec& spec) {
  std::size_t n = 0;
  for_each_selected(ds, spec, [&](FeatureId) { ++n; });
  return n;
}

std::size_t expected_cardinality(const Dataset& ds, const JoinQuerySpec& spec) {
  std::size_t n = 0;
  for_each_pair(ds, spec, [&](FeatureId, FeatureId) { ++n; });
  return n;
}

std::size_t expected_cardinality(const Dataset& ds, const QuerySpec& spec) {
  return std::visit([&](const auto& s) { return expected_cardinality(ds, s); }, spec);
}

FeatureId nearest_neighbor(const Dataset& ds, Coord q, LayerKind kind) {
  const auto& index = ds.index(kind);
  if (index.empty()) throw std::invalid_argument("nearest neighbour on an empty layer");
  const Geometry point = Geometry::point(q);
  double best = std::numeric_limits<double>::infinity();
  FeatureId best_id = 0;
  // Mbr distance bounds the exact distance from below, so widen the
  // candidate list until its farthest mbr is strictly beyond the best hit.
  for (std::size_t k = 8;; k *= 2) {
    const auto candidates = index.nearest(q, k);
    for (const auto& [id, box_distance] : candidates) {
      if (box_distance > best) break;
      const double d = distance(ds.feature(kind, id).geometry, point);
      if (d < best || (d == best && id < best_id)) {
        best = d;
        best_id = id;
      }
    }
    if (candidates.size() < k || candidates.back().second > best) break;
  }
  return best_id;
}

}  // namespace geobench
