#include "geobench/querygen/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/wkt.hpp"

namespace geobench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScaleSteps = 200;
constexpr double kOvershoot = 1.05;  // widest candidate relative to the extent

double interval_distance(double v, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0.0;
}

// Distance in y from cy to the part of segment pq inside the closed slab a <= x <= b.
double clipped_segment_distance(Coord p, Coord q, double a, double b, double cy) {
  double t0 = 0.0, t1 = 1.0;
  const double dx = q.x - p.x;
  if (dx == 0.0) {
    if (p.x < a || p.x > b) return kInf;
  } else {
    double ta = (a - p.x) / dx, tb = (b - p.x) / dx;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return kInf;
  }
  const double y0 = p.y + t0 * (q.y - p.y);
  const double y1 = p.y + t1 * (q.y - p.y);
  return interval_distance(cy, y0, y1);
}

double path_distance(const std::vector<Coord>& pts, double a, double b, double cy) {
  double best = kInf;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    best = std::min(best, clipped_segment_distance(pts[i], pts[i + 1], a, b, cy));
  }
  return best;
}

bool ring_contains(const Ring& ring, Coord c) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Coord& p = ring[i];
    const Coord& q = ring[j];
    if ((p.y > c.y) != (q.y > c.y) && c.x < (q.x - p.x) * (c.y - p.y) / (q.y - p.y) + p.x) inside = !inside;
  }
  return inside;
}

// Half-height at which a centered rectangle over slab [a, b] starts to
// intersect the geometry; infinity when it never does.
double intersects_threshold(const Geometry& g, double a, double b, double cy) {
  switch (g.kind()) {
    case GeometryKind::Point: {
      const Coord c = g.as_point();
      return (c.x >= a && c.x <= b) ? std::abs(c.y - cy) : kInf;
    }
    case GeometryKind::LineString:
      return path_distance(g.as_line_string(), a, b, cy);
    case GeometryKind::MultiLineString: {
      double best = kInf;
      for (const auto& l : g.as_multi_line_string()) best = std::min(best, path_distance(l, a, b, cy));
      return best;
    }
    case GeometryKind::Polygon:
    case GeometryKind::MultiPolygon: {
      double best = kInf;
      for (const auto& poly : g.polygons()) {
        bool inside = ring_contains(poly.exterior, {a, cy});
        for (const auto& hole : poly.interiors) inside = inside && !ring_contains(hole, {a, cy});
        if (inside) return 0.0;
        best = std::min(best, path_distance(poly.exterior, a, b, cy));
        for (const auto& hole : poly.interiors) best = std::min(best, path_distance(hole, a, b, cy));
      }
      return best;
    }
  }
  return kInf;
}

// Half-height from which the geometry lies within a centered rectangle over
// slab [a, b]. Points need the open slab; other kinds the closed one.
double within_threshold(const Geometry& g, const Rect& m, double a, double b, double cy) {
  if (g.kind() == GeometryKind::Point) {
    const Coord c = g.as_point();
    return (c.x > a && c.x < b) ? std::abs(c.y - cy) : kInf;
  }
  if (m.min_x < a || m.max_x > b) return kInf;
  return std::max(std::abs(m.min_y - cy), std::abs(m.max_y - cy));
}

struct Choice {
  std::size_t count = 0;
  int width_idx = 0;
  double half = 0.0;
  Rect rect;
  bool valid = false;
};

// Nearest count to the target, ties to the smaller count, then the narrower
// and lower rectangle; count 0 only when nothing else exists.
bool better(const Choice& c, const Choice& best, double target) {
  if (!best.valid) return true;
  if ((c.count == 0) != (best.count == 0)) return best.count == 0;
  const double dc = std::abs(static_cast<double>(c.count) - target);
  const double db = std::abs(static_cast<double>(best.count) - target);
  if (dc != db) return dc < db;
  if (c.count != best.count) return c.count < best.count;
  if (c.width_idx != best.width_idx) return c.width_idx < best.width_idx;
  return c.half < best.half;
}

double snap(double v, int precision) { return snap_to_precision(v, precision); }

Choice threshold_family(const FeatureLayer& layer, PredicateName pred, double target,
                        const CalibrationOptions& opt) {
  const Rect& ext = layer.extent;
  const double quantum = std::pow(10.0, -opt.precision);
  const double min_gap = 4.0 * quantum;
  const double cx = snap(ext.center().x, opt.precision);
  const double cy = snap(ext.center().y, opt.precision);
  const bool complement = pred == PredicateName::Disjoint;
  const std::size_t n = layer.features.size();

  std::vector<Rect> mbrs;
  mbrs.reserve(n);
  for (const auto& f : layer.features) mbrs.push_back(mbr(f.geometry));

  Choice best;
  std::vector<double> thresholds;
  thresholds.reserve(n);
  for (int j = 1; j <= opt.widths; ++j) {
    const double w = ext.width() * kOvershoot * j / opt.widths;
    const double a = snap(cx - w / 2, opt.precision);
    const double b = snap(cx + w / 2, opt.precision);
    if (!(b > a)) continue;
    thresholds.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& g = layer.features[i].geometry;
      if (mbrs[i].max_x < a || mbrs[i].min_x > b) continue;
      const double t = pred == PredicateName::Within ? within_threshold(g, mbrs[i], a, b, cy)
                                                     : intersects_threshold(g, a, b, cy);
      if (std::isfinite(t)) thresholds.push_back(t);
    }
    std::sort(thresholds.begin(), thresholds.end());
    for (std::size_t k = 0; k < thresholds.size();) {
      std::size_t end = k;
      while (end < thresholds.size() && thresholds[end] == thresholds[k]) ++end;
      const double v = thresholds[k];
      double half;
      if (end < thresholds.size()) {
        if (thresholds[end] - v < min_gap) {
          k = end;
          continue;
        }
        half = (v + thresholds[end]) / 2;
      } else {
        half = v + std::max(ext.height() * 0.01, 10 * quantum);
      }
      k = end;
      if (half < 2 * quantum) continue;
      Choice c;
      c.count = complement ? n - end : end;
      c.width_idx = j;
      c.half = half;
      c.valid = true;
      if (better(c, best, target)) {
        c.rect = Rect(a, snap(cy - half, opt.precision), b, snap(cy + half, opt.precision));
        best = c;
      }
    }
  }
  return best;
}

Choice scale_family(const FeatureLayer& layer, const SpatialIndex& index, PredicateName pred, double target,
                    const CalibrationOptions& opt) {
  const Rect& ext = layer.extent;
  const Coord c = ext.center();
  Choice best;
  for (int s = 1; s <= kScaleSteps; ++s) {
    const double k = kOvershoot * s / kScaleSteps;
    const double hw = ext.width() * k / 2, hh = ext.height() * k / 2;
    const double x0 = snap(c.x - hw, opt.precision), x1 = snap(c.x + hw, opt.precision);
    const double y0 = snap(c.y - hh, opt.precision), y1 = snap(c.y + hh, opt.precision);
    if (!(x1 > x0 && y1 > y0)) continue;
    Choice cand;
    cand.rect = Rect(x0, y0, x1, y1);
    cand.count = spatial_count(layer, index, pred, cand.rect);
    cand.width_idx = s;
    cand.half = hh;
    cand.valid = true;
    if (better(cand, best, target)) best = cand;
  }
  return best;
}

}  // namespace

SpatialIndex index_layer(const FeatureLayer& layer) {
  std::vector<IndexEntry> entries;
  entries.reserve(layer.features.size());
  for (const auto& f : layer.features) entries.push_back({f.id, mbr(f.geometry)});
  return SpatialIndex::build(entries);
}

std::size_t spatial_count(const FeatureLayer& layer, const SpatialIndex& index, PredicateName pred,
                          const Rect& rect) {
  if (pred == PredicateName::Disjoint) {
    return layer.features.size() - spatial_count(layer, index, PredicateName::Intersects, rect);
  }
  // Ids are positions for generated layers; fall back to a lookup otherwise.
  std::vector<std::size_t> position;
  const bool dense = std::all_of(layer.features.begin(), layer.features.end(),
                                 [&, i = std::size_t{0}](const Feature& f) mutable { return f.id == i++; });
  if (!dense) {
    FeatureId max_id = 0;
    for (const auto& f : layer.features) max_id = std::max(max_id, f.id);
    position.assign(max_id + 1, 0);
    for (std::size_t i = 0; i < layer.features.size(); ++i) position[layer.features[i].id] = i;
  }
  const Geometry window = Geometry::from_rect(rect);
  std::size_t count = 0;
  for (FeatureId id : index.query(rect)) {
    const Feature& f = layer.features[dense ? id : position[id]];
    const Rect m = mbr(f.geometry);
    if (rect.strictly_contains(m)) {
      // Strictly interior features: only intersects and within can hold.
      count += pred == PredicateName::Intersects || pred == PredicateName::Within;
    } else {
      count += topological_relate(pred, f.geometry, window);
    }
  }
  return count;
}

Calibration target_rectangle(const FeatureLayer& layer, PredicateName pred, double fraction,
                             const SpatialIndex& index, const CalibrationOptions& options) {
  if (layer.features.empty()) throw std::invalid_argument("cannot calibrate on an empty layer");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("fraction must be in (0, 1]");
  if (options.widths < 1) throw std::invalid_argument("calibration needs at least one width");
  Calibration out;
  out.total = layer.features.size();
  out.target = fraction;
  const double target = fraction * static_cast<double>(out.total);
  if (fraction == 1.0) {
    out.rect = layer.extent;
  } else {
    const bool exact_family = pred == PredicateName::Intersects || pred == PredicateName::Within ||
                              pred == PredicateName::Disjoint;
    const Choice c = exact_family ? threshold_family(layer, pred, target, options)
                                  : scale_family(layer, index, pred, target, options);
    out.rect = c.valid ? c.rect : layer.extent;
  }
  out.count = spatial_count(layer, index, pred, out.rect);
  out.achieved = static_cast<double>(out.count) / static_cast<double>(out.total);
  return out;
}

}  // namespace geobench
