#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "geobench/generator/generator.hpp"
#include "geobench/geometry/spatial_index.hpp"

namespace geobench {

/// Thrown when a query names a layer the dataset does not hold.
class UnknownNamespaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable in-memory layers with an R-tree and a tag inverted index per
/// layer. Safe to share between threads once built.
class Dataset {
 public:
  Dataset() = default;
  /// Throws std::invalid_argument on a repeated layer or feature id.
  explicit Dataset(std::vector<FeatureLayer> layers);
  static Dataset from(const SyntheticDataset& synthetic) { return Dataset(synthetic.layers); }

  bool has(LayerKind kind) const { return layers_.count(kind) != 0; }
  std::vector<LayerKind> kinds() const;
  /// Throw UnknownNamespaceError for absent layers.
  const FeatureLayer& layer(LayerKind kind) const;
  const SpatialIndex& index(LayerKind kind) const;
  const Feature& feature(LayerKind kind, FeatureId id) const;
  /// Ids carrying `key`, ascending; empty for keys nobody carries.
  std::span<const FeatureId> carriers(LayerKind kind, std::uint64_t key) const;

 private:
  struct Entry {
    FeatureLayer layer;
    SpatialIndex index;
    std::map<std::uint64_t, std::vector<FeatureId>> tags;
    std::unordered_map<FeatureId, std::size_t> position;
  };
  const Entry& entry(LayerKind kind) const;
  std::map<LayerKind, Entry> layers_;
};

class NTriplesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the generator's N-Triples schema; other triples are ignored.
/// Truncated input is accepted: an unterminated final line is dropped, and
/// so is the last-started feature block when its geometry was cut off.
/// Throws NTriplesError on malformed lines or any other feature without a
/// geometry.
Dataset load_ntriples(std::istream& in);
Dataset load_ntriples_file(const std::filesystem::path& path);

}  // namespace geobench
