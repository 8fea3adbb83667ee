#include <gtest/gtest.h>

#include <httplib.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "geobench/generator/generator.hpp"
#include "geobench/generator/ntriples.hpp"
#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/relate.hpp"
#include "geobench/geometry/wkt.hpp"
#include "geobench/querygen/catalog.hpp"
#include "geobench/querygen/spec.hpp"
#include "geobench/refeval/dataset.hpp"
#include "geobench/refeval/eval.hpp"
#include "geobench/refeval/geocode.hpp"
#include "geobench/refeval/oracle.hpp"
#include "geobench/refeval/results.hpp"
#include "geobench/refeval/verify.hpp"

namespace geobench {
namespace {

SyntheticDataset synth(int n, int k) {
  GeneratorParams p;
  p.n = n;
  p.k = k;
  return generate_dataset(p);
}

const QueryCatalog& stock() {
  static const QueryCatalog c = load_catalog(stock_catalog_dir());
  return c;
}

// Index-free oracles: every carrier, every pair.
std::vector<FeatureId> brute_selection(const FeatureLayer& layer, const SelectionQuerySpec& s) {
  const Geometry window = Geometry::from_rect(s.geom);
  std::vector<FeatureId> out;
  for (const auto& f : layer.features) {
    if (f.has_key(s.thema) && topological_relate(s.function, f.geometry, window)) out.push_back(f.id);
  }
  return out;
}

std::vector<IdPair> brute_join(const FeatureLayer& a, const FeatureLayer& b, const JoinQuerySpec& s) {
  std::vector<IdPair> out;
  for (const auto& f : a.features) {
    if (!f.has_key(s.thema1)) continue;
    for (const auto& g : b.features) {
      if (g.has_key(s.thema2) && topological_relate(s.function, f.geometry, g.geometry)) out.emplace_back(f.id, g.id);
    }
  }
  return out;
}

Rect random_rect(std::mt19937_64& rng, const Rect& frame) {
  std::uniform_real_distribution<double> ux(frame.min_x - 1, frame.max_x + 1), uy(frame.min_y - 1, frame.max_y + 1);
  // Half of the corners sit on the hexagon lattice to provoke touching cases.
  auto lattice = [&](double v, double step) { return std::round(v / step) * step; };
  double x0 = ux(rng), x1 = ux(rng), y0 = uy(rng), y1 = uy(rng);
  if (rng() % 2) {
    x0 = lattice(x0, 0.5);
    x1 = lattice(x1, 0.5);
  }
  if (x0 > x1) std::swap(x0, x1);
  if (y0 > y1) std::swap(y0, y1);
  if (x1 - x0 < 0.1) x1 = x0 + 0.1;
  if (y1 - y0 < 0.1) y1 = y0 + 0.1;
  return Rect(snap_to_precision(x0, 6), snap_to_precision(y0, 6), snap_to_precision(x1, 6),
              snap_to_precision(y1, 6));
}

// ---- dataset ----

TEST(Dataset, TagIndexAndLookups) {
  const Dataset ds = Dataset::from(synth(6, 2));
  EXPECT_EQ(ds.kinds().size(), 4u);
  const auto fours = ds.carriers(LayerKind::LandOwnership, 4);
  EXPECT_EQ(std::vector<FeatureId>(fours.begin(), fours.end()), (std::vector<FeatureId>{0, 4, 8, 12, 16, 20, 24, 28, 32}));
  EXPECT_TRUE(ds.carriers(LayerKind::LandOwnership, 8).empty());
  EXPECT_EQ(ds.feature(LayerKind::State, 3).id, 3u);
  EXPECT_EQ(ds.index(LayerKind::PointOfInterest).size(), 36u);
}

TEST(Dataset, RejectsDuplicatesAndMissingLayers) {
  auto s = synth(6, 0);
  auto layers = s.layers;
  layers.push_back(s.layers[0]);
  EXPECT_THROW(Dataset{layers}, std::invalid_argument);
  auto dup = s.layers[1];
  dup.features.push_back(dup.features.front());
  EXPECT_THROW(Dataset{std::vector<FeatureLayer>{dup}}, std::invalid_argument);
  const Dataset only_states{std::vector<FeatureLayer>{s.layers[1]}};
  EXPECT_THROW(only_states.layer(LayerKind::Road), UnknownNamespaceError);
  SelectionQuerySpec spec{LayerKind::PointOfInterest, 1, Rect(0, 0, 1, 1), PredicateName::Within};
  EXPECT_THROW(eval_selection(only_states, spec), UnknownNamespaceError);
}

TEST(Dataset, NTriplesRoundTripReproducesLayers) {
  const auto s = synth(9, 3);
  std::stringstream nt;
  emit_ntriples(s.layers, nt);
  const Dataset ds = load_ntriples(nt);
  for (const auto& layer : s.layers) {
    const auto& back = ds.layer(layer.kind);
    ASSERT_EQ(back.features.size(), layer.features.size());
    for (std::size_t i = 0; i < layer.features.size(); ++i) {
      EXPECT_EQ(back.features[i].id, layer.features[i].id);
      EXPECT_EQ(back.features[i].tag_mask, layer.features[i].tag_mask);
      EXPECT_EQ(back.features[i].geometry, layer.features[i].geometry);
    }
    EXPECT_EQ(back.extent, layer.extent) << layer_slug(layer.kind);
  }
}

TEST(Dataset, TruncatedInputKeepsCompleteBlocks) {
  const auto s = synth(6, 1);
  std::stringstream nt;
  emit_ntriples(s.layers, nt);
  const std::string text = nt.str();
  // Cut inside the asWKT line of the seventh land feature.
  std::size_t cut = 0;
  for (int blocks = 0; blocks < 7; ++blocks) cut = text.find("/geom> <", cut + 1);
  std::istringstream head(text.substr(0, cut + 20));
  const Dataset ds = load_ntriples(head);
  EXPECT_EQ(ds.layer(LayerKind::LandOwnership).features.size(), 6u);
  EXPECT_FALSE(ds.has(LayerKind::State));

  std::stringstream sliced;
  std::istringstream all(text);
  slice_ntriples(all, sliced, 100);
  // Blocks hold 3 triples plus 2 per key: 7 for even ids, 5 for odd ones.
  std::size_t fit = 0;
  for (std::uint64_t used = 0; used + (fit % 2 == 0 ? 7 : 5) <= 100; ++fit) used += fit % 2 == 0 ? 7 : 5;
  EXPECT_EQ(load_ntriples(sliced).layer(LayerKind::LandOwnership).features.size(), fit);
}

TEST(Dataset, MalformedLinesAreErrors) {
  std::istringstream bad("<http://geographica.kit/land/0> <p> garbage .\nmore\n");
  EXPECT_THROW(load_ntriples(bad), NTriplesError);
  // A feature block missing its geometry that is not the last one.
  std::istringstream orphan(
      "<http://geographica.kit/land/0> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <x> .\n"
      "<http://geographica.kit/land/1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <x> .\n"
      "<http://geographica.kit/land/1/geom> <http://geographica.kit/land/ontology#asWKT> \"POINT (1 2)\" .\n");
  EXPECT_THROW(load_ntriples(orphan), NTriplesError);
}

// ---- selections and joins ----

TEST(EvalSelection, FullExtentLaws) {
  const auto s = synth(6, 3);
  const Dataset ds = Dataset::from(s);
  const auto& pois = s.layer(LayerKind::PointOfInterest);
  auto all = eval_selection(ds, {LayerKind::PointOfInterest, 1, pois.extent, PredicateName::Within});
  ASSERT_EQ(all.size(), 36u);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);

  const auto& land = s.layer(LayerKind::LandOwnership);
  const auto even = eval_selection(ds, {LayerKind::LandOwnership, 2, land.extent, PredicateName::Intersects});
  ASSERT_EQ(even.size(), 18u);
  for (auto id : even) EXPECT_EQ(id % 2, 0u);
  EXPECT_EQ(expected_cardinality(ds, SelectionQuerySpec{LayerKind::LandOwnership, 4, land.extent,
                                                        PredicateName::Intersects}),
            9u);
}

TEST(EvalSelection, KeyLawOnEveryLayer) {
  const auto s = synth(12, 5);
  const Dataset ds = Dataset::from(s);
  for (const auto& layer : s.layers) {
    for (int i = 0; i <= 5; ++i) {
      const std::uint64_t key = std::uint64_t{1} << i;
      const auto ids = eval_selection(ds, {layer.kind, key, layer.extent, PredicateName::Intersects});
      const std::size_t n = layer.features.size();
      EXPECT_EQ(ids.size(), (n + key - 1) / key);
      for (auto id : ids) EXPECT_EQ(id % key, 0u);
    }
  }
}

TEST(EvalSelection, HalfExtentMatchesExhaustiveLoop) {
  const auto s = synth(12, 0);
  const Dataset ds = Dataset::from(s);
  const auto& land = s.layer(LayerKind::LandOwnership);
  const Rect half(land.extent.min_x, land.extent.min_y, land.extent.center().x, land.extent.max_y);
  const SelectionQuerySpec spec{LayerKind::LandOwnership, 1, half, PredicateName::Intersects};
  const auto got = eval_selection(ds, spec);
  EXPECT_EQ(got, brute_selection(land, spec));
  EXPECT_GT(got.size(), 0u);
  EXPECT_LT(got.size(), 144u);
}

TEST(EvalSelection, RandomSpecsMatchExhaustiveEvaluation) {
  std::mt19937_64 rng(11);
  for (int n : {6, 9, 12}) {
    const auto s = synth(n, 2);
    const Dataset ds = Dataset::from(s);
    for (const auto& layer : s.layers) {
      for (int trial = 0; trial < 6; ++trial) {
        const Rect r = random_rect(rng, layer.extent);
        for (auto pred : kAllPredicates) {
          const SelectionQuerySpec spec{layer.kind, std::uint64_t{1} << (rng() % 3), r, pred};
          ASSERT_EQ(eval_selection(ds, spec), brute_selection(layer, spec))
              << n << " " << layer_slug(layer.kind) << " " << to_string(pred);
        }
      }
    }
  }
}

TEST(EvalJoin, PoiWithinStateMatchesExhaustiveEvaluation) {
  const auto s = synth(6, 0);
  const Dataset ds = Dataset::from(s);
  const JoinQuerySpec spec{LayerKind::PointOfInterest, LayerKind::State, 1, 1, PredicateName::Within};
  const auto got = eval_join(ds, spec);
  EXPECT_EQ(got, brute_join(s.layer(LayerKind::PointOfInterest), s.layer(LayerKind::State), spec));
  EXPECT_EQ(expected_cardinality(ds, spec), got.size());
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
}

TEST(EvalJoin, TouchesIsSymmetric) {
  const auto s = synth(9, 0);
  const Dataset ds = Dataset::from(s);
  const auto pairs = eval_join(ds, {LayerKind::State, LayerKind::State, 1, 1, PredicateName::Touches});
  ASSERT_FALSE(pairs.empty());
  for (const auto& [a, b] : pairs) {
    EXPECT_NE(a, b);
    EXPECT_TRUE(std::binary_search(pairs.begin(), pairs.end(), IdPair{b, a}));
  }
}

TEST(EvalJoin, AbsentKeyGivesNothing) {
  const Dataset ds = Dataset::from(synth(6, 1));
  EXPECT_TRUE(eval_join(ds, {LayerKind::PointOfInterest, LayerKind::State, 1, 4, PredicateName::Within}).empty());
  EXPECT_TRUE(eval_join(ds, {LayerKind::PointOfInterest, LayerKind::State, 1, 4, PredicateName::Disjoint}).empty());
}

TEST(EvalJoin, AllLayerPairsAndPredicatesMatchExhaustiveEvaluation) {
  for (int n : {6, 9}) {
    const auto s = synth(n, 1);
    const Dataset ds = Dataset::from(s);
    for (const auto& a : s.layers) {
      for (const auto& b : s.layers) {
        for (auto pred : kAllPredicates) {
          const JoinQuerySpec spec{a.kind, b.kind, 1, 2, pred};
          ASSERT_EQ(eval_join(ds, spec), brute_join(a, b, spec))
              << layer_slug(a.kind) << "/" << layer_slug(b.kind) << " " << to_string(pred);
        }
      }
    }
  }
}

// ---- nearest neighbour ----

Dataset points(const std::vector<Coord>& pts) {
  FeatureLayer layer{LayerKind::PointOfInterest, {}, Rect(0, 0, 1, 1)};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    layer.features.push_back(Feature{i, LayerKind::PointOfInterest, Geometry::point(pts[i]), 1});
  }
  return Dataset(std::vector<FeatureLayer>{layer});
}

TEST(NearestNeighbor, Examples) {
  const Dataset ds = points({{0, 0}, {3, 0}, {10, 0}});
  EXPECT_EQ(nearest_neighbor(ds, {4, 0}, LayerKind::PointOfInterest), 1u);
  EXPECT_EQ(nearest_neighbor(ds, {10, 0}, LayerKind::PointOfInterest), 2u);
  // Equidistant from ids 0 and 1.
  EXPECT_EQ(nearest_neighbor(ds, {1.5, 0}, LayerKind::PointOfInterest), 0u);
  EXPECT_THROW(nearest_neighbor(points({}), {0, 0}, LayerKind::PointOfInterest), std::invalid_argument);
}

TEST(NearestNeighbor, MatchesExhaustiveScan) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 100);
  std::vector<Coord> pts(1000);
  for (auto& p : pts) p = {std::round(u(rng)), std::round(u(rng))};  // rounding forces ties
  const Dataset ds = points(pts);
  for (int q = 0; q < 300; ++q) {
    const Coord c{u(rng), u(rng)};
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double di = std::hypot(pts[i].x - c.x, pts[i].y - c.y);
      const double db = std::hypot(pts[best].x - c.x, pts[best].y - c.y);
      if (di < db) best = i;
    }
    EXPECT_EQ(nearest_neighbor(ds, c, LayerKind::PointOfInterest), best);
  }
}

TEST(NearestNeighbor, WorksOnPolygons) {
  const auto s = synth(6, 0);
  const Dataset ds = Dataset::from(s);
  const auto& hex = s.layer(LayerKind::LandOwnership).features[14].geometry;
  const Rect m = mbr(hex);
  EXPECT_EQ(nearest_neighbor(ds, m.center(), LayerKind::LandOwnership), 14u);
}

// ---- geocoding ----

TEST(Geocode, MidpointAndEndpoints) {
  const auto seg = make_street_segment(Geometry::line_string({{0, 0}, {10, 0}}), 100, 200, Parity::Both);
  const Coord mid = geocode_interpolate(seg, StreetSide::Left, 150);
  EXPECT_NEAR(mid.x, 5.0, 1e-9);
  EXPECT_NEAR(mid.y, 0.0, 1e-9);
  EXPECT_EQ(geocode_interpolate(seg, StreetSide::Right, 100), (Coord{0, 0}));
  EXPECT_EQ(geocode_interpolate(seg, StreetSide::Right, 200), (Coord{10, 0}));
}

TEST(Geocode, EvenRangeAroundThousand) {
  const auto seg = make_street_segment(Geometry::line_string({{2, 4}, {6, 12}}), 998, 1002, Parity::Even);
  const Coord c = geocode_interpolate(seg, StreetSide::Left, 1000);
  EXPECT_NEAR(c.x, 4.0, 1e-12);
  EXPECT_NEAR(c.y, 8.0, 1e-12);
  EXPECT_THROW(geocode_interpolate(seg, StreetSide::Left, 999), std::invalid_argument);
  EXPECT_THROW(geocode_interpolate(seg, StreetSide::Left, 1004), std::invalid_argument);
  EXPECT_THROW(make_street_segment(Geometry::line_string({{0, 0}, {1, 0}}), 997, 1002, Parity::Even),
               std::invalid_argument);
  EXPECT_THROW(make_street_segment(Geometry::line_string({{0, 0}, {1, 0}}), 10, 2, Parity::Both),
               std::invalid_argument);
}

TEST(Geocode, AffineInHouseNumber) {
  const auto seg = make_street_segment(Geometry::line_string({{1, 1}, {3, 2}, {7, 9}}), 1, 99, Parity::Odd);
  const Coord a = geocode_interpolate(seg, StreetSide::Left, 11);
  const Coord b = geocode_interpolate(seg, StreetSide::Left, 31);
  const Coord c = geocode_interpolate(seg, StreetSide::Left, 51);
  EXPECT_NEAR(b.x - a.x, c.x - b.x, 1e-12);
  EXPECT_NEAR(b.y - a.y, c.y - b.y, 1e-12);
}

// ---- results and verification ----

TEST(Results, JsonRoundTrip) {
  ResultTable t{{"s", "n"}, {{"http://x/1", "7"}, {"http://x/2", ""}}, std::nullopt};
  EXPECT_EQ(parse_sparql_json(to_sparql_json(t)), t);
  ResultTable ask{{}, {}, true};
  EXPECT_EQ(parse_sparql_json(to_sparql_json(ask)), ask);
  EXPECT_THROW(parse_sparql_json("not json"), ResultsFormatError);
  EXPECT_THROW(parse_sparql_json("{\"head\":{\"vars\":[\"s\"]},\"results\":3}"), ResultsFormatError);
  EXPECT_THROW(parse_sparql_json("[]"), ResultsFormatError);
}

TEST(Results, ProjectedVariables) {
  EXPECT_EQ(result_variables("# SELECT ?no\nSELECT ?s1 ?s2\nWHERE { ?s1 ?p ?o }"),
            (std::vector<std::string>{"s1", "s2"}));
  const auto g1 = render_query(stock().at("G1"), stock().scenario("geocoding").pool.row(0), geosparql_dialect());
  EXPECT_EQ(result_variables(g1.text), (std::vector<std::string>{"seg", "wkt", "x", "y"}));
  EXPECT_EQ(result_variables(stock().at("SYN_SEL").body), (std::vector<std::string>{"s"}));
}

TEST(Verify, Verdicts) {
  const ResultTable oracle{{"s"}, {{"http://x/1"}, {"http://x/2"}}, std::nullopt};
  EXPECT_EQ(verify("q", oracle, oracle, AnswerMode::Ids).verdict, Verdict::Match);
  const ResultTable short_answer{{"s"}, {{"<http://x/1>"}}, std::nullopt};
  const auto r = verify("q", oracle, short_answer, AnswerMode::Ids);
  EXPECT_EQ(r.verdict, Verdict::Mismatch);
  EXPECT_EQ(r.missing, std::vector<std::string>{"http://x/2"});
  EXPECT_TRUE(r.spurious.empty());
  EXPECT_EQ(verify("q", std::nullopt, oracle, AnswerMode::Ids).verdict, Verdict::Unverifiable);
  EXPECT_EQ(verify("q", oracle, oracle, AnswerMode::None).verdict, Verdict::Unverifiable);
  const ResultTable dup{{"s"}, {{"http://x/1"}, {"http://x/1"}}, std::nullopt};
  EXPECT_EQ(verify("q", oracle, dup, AnswerMode::Ids).verdict, Verdict::Mismatch);
}

TEST(Verify, SymmetricInContent) {
  const ResultTable a{{"s1", "s2"}, {{"a", "b"}, {"c", "d"}}, std::nullopt};
  const ResultTable b{{"s2", "s1"}, {{"d", "c"}, {"b", "a"}}, std::nullopt};
  const ResultTable c{{"s1", "s2"}, {{"a", "b"}}, std::nullopt};
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
    EXPECT_EQ(verify("q", x, y, AnswerMode::Ids).verdict, verify("q", y, x, AnswerMode::Ids).verdict);
  }
  EXPECT_EQ(verify("q", a, b, AnswerMode::Ids).verdict, Verdict::Match);
}

TEST(Verify, ConstructAnswersCompareGeometries) {
  const ResultTable oracle{{"s", "g"}, {{"http://x/1", "POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0))"}}, std::nullopt};
  const ResultTable rotated{{"s", "g"}, {{"http://x/1", "POLYGON ((1 1, 0 1, 0 0, 1 0, 1 1))"}}, std::nullopt};
  const ResultTable off{{"s", "g"}, {{"http://x/1", "POLYGON ((1 1, 0 1, 0 0, 1.001 0, 1 1))"}}, std::nullopt};
  EXPECT_EQ(verify("q", oracle, rotated, AnswerMode::Construct).verdict, Verdict::Match);
  EXPECT_EQ(verify("q", oracle, off, AnswerMode::Construct).verdict, Verdict::Mismatch);
  EXPECT_EQ(verify("q", oracle, rotated, AnswerMode::Ids).verdict, Verdict::Mismatch);
}

// ---- oracle endpoint ----

TEST(OracleEndpoint, AnswersTaggedQueries) {
  const auto s = synth(6, 1);
  auto ds = std::make_shared<const Dataset>(Dataset::from(s));
  auto catalog = std::make_shared<const QueryCatalog>(stock());
  OracleServer server(ds, catalog);
  ASSERT_GT(server.port(), 0);
  httplib::Client client("127.0.0.1", server.port());

  const SelectionQuerySpec spec{LayerKind::PointOfInterest, 2, s.layer(LayerKind::PointOfInterest).extent,
                                PredicateName::Within};
  const std::string query = instantiate_selection(stock(), spec, geosparql_dialect()).text;
  auto first = client.Post("/sparql", query, "application/sparql-query");
  ASSERT_TRUE(first);
  EXPECT_EQ(first->status, 200);
  EXPECT_EQ(first->get_header_value("Content-Type"), "application/sparql-results+json");
  const auto table = parse_sparql_json(first->body);
  EXPECT_EQ(table.vars, std::vector<std::string>{"s"});
  EXPECT_EQ(table.rows.size(), 18u);
  EXPECT_EQ(table.rows.front().front(), "http://geographica.kit/poi/0");

  auto second = client.Post("/sparql", query, "application/sparql-query");
  ASSERT_TRUE(second);
  EXPECT_EQ(second->body, first->body);

  auto form = client.Post("/sparql", httplib::Params{{"query", query}});
  ASSERT_TRUE(form);
  EXPECT_EQ(form->body, first->body);

  auto unknown = client.Post("/sparql", "SELECT * WHERE { ?s ?p ?o }", "application/sparql-query");
  ASSERT_TRUE(unknown);
  EXPECT_EQ(unknown->status, 400);
  auto no_oracle = client.Post("/sparql", render_query(stock().at("Q1"), {}, geosparql_dialect()).text,
                               "application/sparql-query");
  ASSERT_TRUE(no_oracle);
  EXPECT_EQ(no_oracle->status, 400);
}

TEST(OracleEndpoint, BusyPortIsAnError) {
  auto ds = std::make_shared<const Dataset>(Dataset::from(synth(6, 0)));
  auto catalog = std::make_shared<const QueryCatalog>(stock());
  OracleServer first(ds, catalog);
  EXPECT_THROW(OracleServer(ds, catalog, "127.0.0.1", first.port()), std::runtime_error);
}

TEST(OracleEndpoint, JoinAnswerEqualsEvaluation) {
  const auto s = synth(6, 1);
  const Dataset ds = Dataset::from(s);
  const JoinQuerySpec spec{LayerKind::PointOfInterest, LayerKind::State, 1, 2, PredicateName::Within};
  const auto table = oracle_answer(ds, stock(), instantiate_join(stock(), spec, stsparql_dialect()).text);
  ASSERT_TRUE(table);
  EXPECT_EQ(table->vars, (std::vector<std::string>{"s1", "s2"}));
  EXPECT_EQ(table->rows.size(), eval_join(ds, spec).size());
}

}  // namespace
}  // namespace geobench
