#include "geobench/querygen/synthetic.hpp"

#include <array>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace geobench {

std::optional<LayerKind> selection_layer(PredicateName function) {
  switch (function) {
    case PredicateName::Intersects: return LayerKind::LandOwnership;
    case PredicateName::Within: return LayerKind::PointOfInterest;
    default: return std::nullopt;
  }
}

std::optional<std::pair<LayerKind, LayerKind>> join_layers(PredicateName function) {
  switch (function) {
    case PredicateName::Intersects: return std::pair{LayerKind::LandOwnership, LayerKind::State};
    case PredicateName::Touches: return std::pair{LayerKind::State, LayerKind::State};
    case PredicateName::Within: return std::pair{LayerKind::PointOfInterest, LayerKind::State};
    default: return std::nullopt;
  }
}

std::string format_fraction(double f) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), f, std::chars_format::fixed);
  return std::string(buf.data(), res.ptr);
}

std::vector<PlannedQuery> plan_synthetic(const SyntheticDataset& dataset, const QueryCatalog& catalog,
                                         const Dialect& dialect, const SyntheticPlanOptions& options) {
  std::vector<std::uint64_t> themas = options.themas;
  if (themas.empty()) {
    themas.push_back(1);
    if (dataset.params.k > 0) themas.push_back(std::uint64_t{1} << dataset.params.k);
  }
  for (auto t : themas) validate_thema(t);
  for (double f : options.fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("fraction " + format_fraction(f) + " outside (0, 1]");
  }

  std::vector<PlannedQuery> plan;
  std::set<std::string> ids;
  auto push = [&](PlannedQuery q) {
    if (!ids.insert(q.query_id).second) throw std::invalid_argument("duplicate synthetic query " + q.query_id);
    plan.push_back(std::move(q));
  };

  std::map<LayerKind, SpatialIndex> indexes;
  for (auto fn : options.functions) {
    const auto layer_kind = selection_layer(fn);
    if (!layer_kind) continue;
    const FeatureLayer& layer = dataset.layer(*layer_kind);
    auto [it, fresh] = indexes.try_emplace(*layer_kind);
    if (fresh) it->second = index_layer(layer);
    for (double f : options.fractions) {
      const Calibration cal = target_rectangle(layer, fn, f, it->second, options.calibration);
      for (auto thema : themas) {
        SelectionQuerySpec spec;
        spec.layer = *layer_kind;
        spec.thema = thema;
        spec.geom = cal.rect;
        spec.function = fn;
        PlannedQuery q;
        q.query_id = "sel-" + std::string(layer_slug(spec.layer)) + "-" + std::string(to_string(fn)) + "-t" +
                     std::to_string(thema) + "-f" + format_fraction(f);
        q.query = instantiate_selection(catalog, spec, dialect);
        q.spec = spec;
        q.calibration = cal;
        push(std::move(q));
      }
    }
  }
  for (auto fn : options.functions) {
    const auto layers = join_layers(fn);
    if (!layers) continue;
    for (auto t1 : themas) {
      for (auto t2 : themas) {
        JoinQuerySpec spec;
        spec.layer1 = layers->first;
        spec.layer2 = layers->second;
        spec.thema1 = t1;
        spec.thema2 = t2;
        spec.function = fn;
        PlannedQuery q;
        q.query_id = "join-" + std::string(layer_slug(spec.layer1)) + "-" + std::string(layer_slug(spec.layer2)) +
                     "-" + std::string(to_string(fn)) + "-t" + std::to_string(t1) + "-t" + std::to_string(t2);
        q.query = instantiate_join(catalog, spec, dialect);
        q.spec = spec;
        push(std::move(q));
      }
    }
  }
  return plan;
}

}  // namespace geobench
