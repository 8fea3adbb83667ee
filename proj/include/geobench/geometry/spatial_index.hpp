#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "geobench/geometry/geometry.hpp"

namespace geobench {

using FeatureId = std::uint64_t;

struct IndexEntry {
  FeatureId id;
  Rect mbr;
};

/// R-tree over feature bounding rectangles. Immutable once built; copies
/// share the tree and queries may run concurrently.
class SpatialIndex {
 public:
  static constexpr std::size_t kDefaultFanout = 16;

  SpatialIndex();

  /// Bulk-loads the tree. Throws std::invalid_argument on duplicate ids.
  static SpatialIndex build(std::span<const IndexEntry> entries,
                            std::size_t max_fanout = kDefaultFanout);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::size_t max_fanout() const;

  /// Ids whose mbr intersects `window` (closed), ascending.
  std::vector<FeatureId> query(const Rect& window) const;

  /// Up to `k` entries ordered by mbr distance to `p` (ties by id).
  std::vector<std::pair<FeatureId, double>> nearest(Coord p, std::size_t k) const;

 private:
  struct Impl;
  explicit SpatialIndex(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Convenience: index the mbrs of (id, geometry) pairs.
SpatialIndex build_index(std::span<const std::pair<FeatureId, Geometry>> geoms,
                         std::size_t max_fanout = SpatialIndex::kDefaultFanout);

inline std::vector<FeatureId> index_query(const SpatialIndex& index, const Rect& window) {
  return index.query(window);
}

}  // namespace geobench
