#include "geobench/refeval/dataset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "geobench/generator/ntriples.hpp"
#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/wkt.hpp"

namespace geobench {

Dataset::Dataset(std::vector<FeatureLayer> layers) {
  for (auto& layer : layers) {
    const LayerKind kind = layer.kind;
    if (layers_.count(kind)) throw std::invalid_argument("layer " + std::string(layer_slug(kind)) + " given twice");
    Entry e;
    std::vector<IndexEntry> entries;
    entries.reserve(layer.features.size());
    for (std::size_t i = 0; i < layer.features.size(); ++i) {
      const Feature& f = layer.features[i];
      if (f.layer != kind) throw std::invalid_argument("feature filed under the wrong layer");
      if (!e.position.emplace(f.id, i).second) {
        throw std::invalid_argument("duplicate feature id " + std::to_string(f.id) + " in " +
                                    std::string(layer_slug(kind)));
      }
      entries.push_back({f.id, mbr(f.geometry)});
      for (std::uint64_t mask = f.tag_mask; mask != 0; mask &= mask - 1) {
        e.tags[std::uint64_t{1} << std::countr_zero(mask)].push_back(f.id);
      }
    }
    for (auto& [key, ids] : e.tags) std::sort(ids.begin(), ids.end());
    e.index = SpatialIndex::build(entries);
    e.layer = std::move(layer);
    layers_.emplace(kind, std::move(e));
  }
}

std::vector<LayerKind> Dataset::kinds() const {
  std::vector<LayerKind> out;
  for (const auto& [k, e] : layers_) out.push_back(k);
  return out;
}

const Dataset::Entry& Dataset::entry(LayerKind kind) const {
  auto it = layers_.find(kind);
  if (it == layers_.end()) throw UnknownNamespaceError("dataset has no layer " + layer_namespace(kind));
  return it->second;
}

const FeatureLayer& Dataset::layer(LayerKind kind) const { return entry(kind).layer; }
const SpatialIndex& Dataset::index(LayerKind kind) const { return entry(kind).index; }

const Feature& Dataset::feature(LayerKind kind, FeatureId id) const {
  const Entry& e = entry(kind);
  auto it = e.position.find(id);
  if (it == e.position.end()) throw std::out_of_range("no feature " + std::to_string(id));
  return e.layer.features[it->second];
}

std::span<const FeatureId> Dataset::carriers(LayerKind kind, std::uint64_t key) const {
  const Entry& e = entry(kind);
  auto it = e.tags.find(key);
  if (it == e.tags.end()) return {};
  return it->second;
}

namespace {

struct Term {
  std::string_view iri;      // set for <...>
  std::string_view literal;  // lexical form for "..."
  bool is_iri = false;
};

// Parses "<iri>" or "\"lexical\"" with an optional ^^<type>; returns the
// rest of the line after the term.
std::optional<std::string_view> read_term(std::string_view s, Term& t) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  if (s.front() == '<') {
    const auto end = s.find('>');
    if (end == std::string_view::npos) return std::nullopt;
    t.iri = s.substr(1, end - 1);
    t.is_iri = true;
    return s.substr(end + 1);
  }
  if (s.front() == '"') {
    // The generator never escapes: WKT and decimal keys contain no quotes.
    const auto end = s.find('"', 1);
    if (end == std::string_view::npos) return std::nullopt;
    t.literal = s.substr(1, end - 1);
    t.is_iri = false;
    s = s.substr(end + 1);
    if (s.starts_with("^^<")) {
      const auto close = s.find('>');
      if (close == std::string_view::npos) return std::nullopt;
      s = s.substr(close + 1);
    }
    return s;
  }
  return std::nullopt;
}

// "<base><slug>/<id>" with an optional "/geom" suffix.
std::optional<std::pair<LayerKind, FeatureId>> parse_feature_iri(std::string_view iri, bool geometry) {
  if (!iri.starts_with(kIriBase)) return std::nullopt;
  iri.remove_prefix(kIriBase.size());
  if (geometry) {
    if (!iri.ends_with("/geom")) return std::nullopt;
    iri.remove_suffix(5);
  }
  const auto slash = iri.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto kind = parse_layer(iri.substr(0, slash));
  if (!kind) return std::nullopt;
  FeatureId id = 0;
  const auto digits = iri.substr(slash + 1);
  const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) return std::nullopt;
  return std::pair{*kind, id};
}

struct Pending {
  std::optional<Geometry> geometry;
  std::uint64_t tag_mask = 0;
  bool typed = false;
  std::uint64_t order = 0;  // position of the first triple, for the prefix-cut rule
};

}  // namespace

Dataset load_ntriples(std::istream& in) {
  std::map<std::pair<LayerKind, FeatureId>, Pending> pending;
  std::string line;
  std::uint64_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw NTriplesError("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s(line);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    if (s.empty() || s.front() == '#') continue;
    Term subj, pred, obj;
    auto rest = read_term(s, subj);
    if (rest) rest = read_term(*rest, pred);
    if (rest) rest = read_term(*rest, obj);
    std::string_view tail = rest ? *rest : std::string_view{};
    while (!tail.empty() && tail.front() == ' ') tail.remove_prefix(1);
    if (!rest || !subj.is_iri || !pred.is_iri || tail != ".") {
      // A final line without its newline is a byte-level cut; drop it.
      if (in.eof()) break;
      fail("malformed triple");
    }

    const auto hash = pred.iri.rfind('#');
    const std::string_view local = hash == std::string_view::npos ? pred.iri : pred.iri.substr(hash + 1);
    if (pred.iri == kRdfType) {
      const auto key = parse_feature_iri(subj.iri, false);
      if (!key) continue;
      auto& p = pending[*key];
      if (!p.typed && !p.geometry && p.tag_mask == 0) p.order = line_no;
      p.typed = true;
    } else if (local == kAsWkt && !obj.is_iri) {
      const auto key = parse_feature_iri(subj.iri, true);
      if (!key) continue;
      try {
        pending[*key].geometry = parse_wkt(obj.literal);
      } catch (const std::exception& e) {
        fail(std::string("bad WKT: ") + e.what());
      }
    } else if (local == kHasKey && !obj.is_iri) {
      const auto key = parse_feature_iri(subj.iri, false);
      if (!key) continue;
      std::uint64_t v = 0;
      const auto res = std::from_chars(obj.literal.data(), obj.literal.data() + obj.literal.size(), v);
      if (res.ec != std::errc{} || v == 0 || (v & (v - 1)) != 0) fail("tag key is not a power of two");
      pending[*key].tag_mask |= v;
    }
  }
  if (in.bad()) throw NTriplesError("read error");

  // Only the last-started block may lack its geometry.
  std::uint64_t last_order = 0;
  for (const auto& [key, p] : pending) last_order = std::max(last_order, p.order);
  std::map<LayerKind, FeatureLayer> layers;
  for (auto& [key, p] : pending) {
    if (!p.geometry) {
      if (p.order == last_order) continue;
      throw NTriplesError(feature_iri(key.first, key.second) + " has no geometry");
    }
    auto& layer = layers[key.first];
    layer.kind = key.first;
    layer.features.push_back(Feature{key.second, key.first, std::move(*p.geometry), p.tag_mask});
  }
  std::vector<FeatureLayer> out;
  std::optional<Rect> land;
  for (auto& [kind, layer] : layers) {
    Rect ext = mbr(layer.features.front().geometry);
    for (const auto& f : layer.features) ext.expand(mbr(f.geometry));
    layer.extent = ext;
    if (kind == LayerKind::LandOwnership) land = ext;
  }
  for (auto& [kind, layer] : layers) {
    // Same framing as the generator: roads and points live in the land frame.
    if (land && (kind == LayerKind::Road || kind == LayerKind::PointOfInterest)) layer.extent = *land;
    out.push_back(std::move(layer));
  }
  return Dataset(std::move(out));
}

Dataset load_ntriples_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NTriplesError("cannot open " + path.string());
  return load_ntriples(in);
}

}  // namespace geobench
