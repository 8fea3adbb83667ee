#include "geobench/generator/ntriples.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "geobench/geometry/wkt.hpp"

namespace geobench {

namespace {

bool selected(const EmitOptions& o, LayerKind kind) { return !o.layers || o.layers->count(kind) != 0; }

void check(std::ostream& sink) {
  if (!sink) throw std::runtime_error("N-Triples sink write failed");
}

}  // namespace

std::string geometry_iri(LayerKind kind, FeatureId id) { return feature_iri(kind, id) + "/geom"; }

std::uint64_t count_triples(std::span<const FeatureLayer> layers, const EmitOptions& options) {
  std::uint64_t total = 0;
  for (const auto& layer : layers) {
    if (!selected(options, layer.kind)) continue;
    for (const auto& f : layer.features) total += 3 + 2 * static_cast<std::uint64_t>(std::popcount(f.tag_mask));
  }
  return total;
}

std::uint64_t emit_ntriples(std::span<const FeatureLayer> layers, std::ostream& sink, const EmitOptions& options) {
  std::uint64_t triples = 0;
  std::string buf;
  for (const auto& layer : layers) {
    if (!selected(options, layer.kind)) continue;
    const std::string ns = layer_namespace(layer.kind);
    const std::string type_obj = "<" + ns + std::string(layer_class(layer.kind)) + "> .\n";
    const std::string has_geom = " <" + ns + std::string(kHasGeometry) + "> ";
    const std::string as_wkt = " <" + ns + std::string(kAsWkt) + "> \"";
    const std::string has_key = " <" + ns + std::string(kHasKey) + "> \"";
    const std::string has_value = " <" + ns + std::string(kHasValue) + "> \"";
    const std::string wkt_suffix = "\"^^<" + std::string(kWktLiteral) + "> .\n";
    for (const auto& f : layer.features) {
      const std::string subject = "<" + f.iri() + ">";
      const std::string geom = "<" + f.iri() + "/geom>";
      buf.clear();
      buf.append(subject).append(" <").append(kRdfType).append("> ").append(type_obj);
      buf.append(subject).append(has_geom).append(geom).append(" .\n");
      buf.append(geom).append(as_wkt).append(to_wkt(f.geometry, options.precision)).append(wkt_suffix);
      triples += 3;
      for (std::uint64_t key : f.keys()) {
        const std::string k = std::to_string(key);
        buf.append(subject).append(has_key).append(k).append("\" .\n");
        buf.append(subject).append(has_value).append(k).append("\" .\n");
        triples += 2;
      }
      sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      check(sink);
    }
  }
  sink.flush();
  check(sink);
  return triples;
}

std::uint64_t slice_ntriples(std::istream& in, std::ostream& out, std::uint64_t max_triples) {
  const std::string type_marker = " <" + std::string(kRdfType) + "> ";
  std::uint64_t copied = 0;
  std::vector<std::string> block;
  auto flush_block = [&]() -> bool {
    if (copied + block.size() > max_triples) return false;
    for (const auto& line : block) out << line << '\n';
    check(out);
    copied += block.size();
    block.clear();
    return true;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find(type_marker) != std::string::npos && !block.empty()) {
      if (!flush_block()) return copied;
    }
    block.push_back(std::move(line));
  }
  if (!block.empty()) flush_block();
  out.flush();
  return copied;
}

}  // namespace geobench
