#include "geobench/geometry/spatial_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include <boost/function_output_iterator.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "boost_adapter.hpp"
#include "geobench/geometry/operations.hpp"

namespace geobench {

namespace bgi = boost::geometry::index;
using detail::BBox;
using detail::BPoint;

namespace {

using Value = std::pair<BBox, FeatureId>;
using Tree = bgi::rtree<Value, bgi::dynamic_rstar>;

BBox to_box(const Rect& r) { return BBox(BPoint(r.min_x, r.min_y), BPoint(r.max_x, r.max_y)); }

}  // namespace

struct SpatialIndex::Impl {
  Impl(std::vector<Value> values, std::size_t fanout)
      : fanout(fanout), tree(values, bgi::dynamic_rstar(fanout)) {}

  std::size_t fanout;
  Tree tree;
};

SpatialIndex::SpatialIndex() : SpatialIndex(std::make_shared<const Impl>(std::vector<Value>{}, kDefaultFanout)) {}

SpatialIndex::SpatialIndex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SpatialIndex SpatialIndex::build(std::span<const IndexEntry> entries, std::size_t max_fanout) {
  if (max_fanout < 4) throw std::invalid_argument("R-tree fanout must be at least 4");
  std::unordered_set<FeatureId> seen;
  seen.reserve(entries.size());
  std::vector<Value> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    if (!seen.insert(e.id).second) {
      throw std::invalid_argument("duplicate feature id " + std::to_string(e.id));
    }
    values.emplace_back(to_box(e.mbr), e.id);
  }
  return SpatialIndex(std::make_shared<const Impl>(std::move(values), max_fanout));
}

std::size_t SpatialIndex::size() const { return impl_->tree.size(); }

std::size_t SpatialIndex::max_fanout() const { return impl_->fanout; }

std::vector<FeatureId> SpatialIndex::query(const Rect& window) const {
  std::vector<FeatureId> out;
  impl_->tree.query(bgi::intersects(to_box(window)),
                    boost::make_function_output_iterator([&out](const Value& v) { out.push_back(v.second); }));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<FeatureId, double>> SpatialIndex::nearest(Coord p, std::size_t k) const {
  std::vector<std::pair<FeatureId, double>> out;
  if (k == 0) return out;
  BPoint q(p.x, p.y);
  impl_->tree.query(bgi::nearest(q, static_cast<unsigned>(k)),
                    boost::make_function_output_iterator([&](const Value& v) {
                      out.emplace_back(v.second, boost::geometry::distance(q, v.first));
                    }));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second < b.second || (a.second == b.second && a.first < b.first);
  });
  return out;
}

SpatialIndex build_index(std::span<const std::pair<FeatureId, Geometry>> geoms, std::size_t max_fanout) {
  std::vector<IndexEntry> entries;
  entries.reserve(geoms.size());
  for (const auto& [id, g] : geoms) entries.push_back({id, mbr(g)});
  return SpatialIndex::build(entries, max_fanout);
}

}  // namespace geobench
