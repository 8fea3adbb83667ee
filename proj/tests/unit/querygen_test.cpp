#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geobench/generator/generator.hpp"
#include "geobench/geometry/operations.hpp"
#include "geobench/geometry/relate.hpp"
#include "geobench/querygen/calibrate.hpp"
#include "geobench/querygen/catalog.hpp"
#include "geobench/querygen/dialect.hpp"
#include "geobench/querygen/header.hpp"
#include "geobench/querygen/scenario.hpp"
#include "geobench/querygen/spec.hpp"
#include "geobench/querygen/synthetic.hpp"

namespace geobench {
namespace {

const QueryCatalog& stock() {
  static const QueryCatalog catalog = load_catalog(stock_catalog_dir());
  return catalog;
}

SyntheticDataset dataset(int n, int k = 0) {
  GeneratorParams p;
  p.n = n;
  p.k = k;
  return generate_dataset(p);
}

// Index-free count, the oracle for spatial_count.
std::size_t brute_count(const FeatureLayer& layer, PredicateName pred, const Rect& r) {
  const Geometry window = Geometry::from_rect(r);
  std::size_t c = 0;
  for (const auto& f : layer.features) c += topological_relate(pred, f.geometry, window);
  return c;
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("gq-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& rel, const std::string& text) const {
    std::filesystem::create_directories((path_ / rel).parent_path());
    std::ofstream(path_ / rel) << text;
  }

 private:
  std::filesystem::path path_;
};

// ---- rendering ----

TEST(RenderDialect, FunctionTokensResolvePerDialect) {
  EXPECT_EQ(render_dialect("{{FN_WITHIN}}", {}, geosparql_dialect()),
            "<http://www.opengis.net/def/function/geosparql/sfWithin>");
  EXPECT_EQ(render_dialect("{{FN_WITHIN}}", {}, stsparql_dialect()), "<http://strdf.di.uoa.gr/ontology#within>");
  EXPECT_EQ(render_dialect("{{FN_WITHIN}}(?a, ?b{{TOL_ARG}})", {}, point_tolerance_dialect(0.5)),
            "bif:st_within(?a, ?b, 0.500000000)");
}

TEST(RenderDialect, ToleranceDialectNeedsTolerance) {
  EXPECT_THROW(render_dialect("{{FN_WITHIN}}(?a, ?b{{TOL_ARG}})", {}, point_tolerance_dialect(std::nullopt)),
               RenderError);
  EXPECT_EQ(render_dialect("f(?a{{TOL_ARG}})", {}, geosparql_dialect()), "f(?a)");
}

TEST(RenderDialect, UnboundAndUnknownTokensFail) {
  EXPECT_THROW(render_dialect("\"{{GEOM}}\"", {}, geosparql_dialect()), RenderError);
  EXPECT_THROW(render_dialect("{{FN_AREA}}", {}, geosparql_dialect()), RenderError);
  EXPECT_THROW(render_dialect("{{FN_TOUCHES}}", {}, point_tolerance_dialect(1.0)), RenderError);
  EXPECT_THROW(dialect_by_name("sparql11"), std::invalid_argument);
}

TEST(RenderDialect, NestedFunctionSlot) {
  const Bindings b{{"FUNCTION", "INTERSECTS"}};
  EXPECT_EQ(render_dialect("{{FN_{{FUNCTION}}}}", b, stsparql_dialect()),
            "<http://strdf.di.uoa.gr/ontology#intersects>");
}

TEST(RenderDialect, SelfReferentialBindingIsRejected) {
  const Bindings b{{"A", "{{A}}"}};
  EXPECT_THROW(render_dialect("{{A}}", b, geosparql_dialect()), RenderError);
}

TEST(RenderDialect, IdempotentAndDeterministic) {
  const auto& t = stock().at("SYN_SEL");
  const Bindings b = selection_bindings({LayerKind::PointOfInterest, 4, Rect(0, 0, 2, 3), PredicateName::Within});
  for (const auto& d : {geosparql_dialect(), stsparql_dialect(), point_tolerance_dialect(0.01)}) {
    const std::string once = render_dialect(t.body, b, d);
    EXPECT_EQ(render_dialect(once, b, d), once);
    EXPECT_EQ(render_dialect(t.body, b, d), once);
    EXPECT_EQ(once.find("{{"), std::string::npos);
  }
}

// The token diff between dialects only ever touches function and datatype IRIs.
TEST(RenderDialect, DialectSwapChangesOnlyIris) {
  const SelectionQuerySpec sel{LayerKind::LandOwnership, 2, Rect(1, 1, 4, 5), PredicateName::Intersects};
  const JoinQuerySpec join{LayerKind::PointOfInterest, LayerKind::State, 1, 2, PredicateName::Within};
  const auto g = geosparql_dialect();
  const auto s = stsparql_dialect();
  std::set<std::string> iris;
  for (const auto& d : {g, s}) {
    for (const auto& [k, v] : d.functions) iris.insert(v);
    iris.insert(d.wkt_datatype);
  }
  for (const auto& [a, b] : {std::pair{instantiate_selection(stock(), sel, g).text,
                                       instantiate_selection(stock(), sel, s).text},
                             std::pair{instantiate_join(stock(), join, g).text, instantiate_join(stock(), join, s).text}}) {
    EXPECT_NE(a, b);
    // Strip every known IRI; what remains must agree exactly.
    auto strip = [&](std::string text) {
      for (const auto& iri : iris) {
        for (auto pos = text.find(iri); pos != std::string::npos; pos = text.find(iri)) text.replace(pos, iri.size(), "@");
      }
      return tokens(text);
    };
    EXPECT_EQ(strip(a), strip(b));
  }
}

// ---- headers ----

TEST(Header, RoundTripsArbitraryValues) {
  QueryHeader h{"SYN_SEL",
                {{"GEOM", "POLYGON ((0 0, 1 0, 1 1, 0 0))"}, {"NS", "http://x/y#"}, {"Z", "a&b=c;d%e\n"}, {"E", ""}}};
  const std::string line = format_header(h);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line.rfind("# gq:template=SYN_SEL;params=", 0), 0u);
  const auto back = parse_header("PREFIX a: <b>\n" + line + "\nSELECT * {}");
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, h);
}

TEST(Header, CanonicalFormSortsKeys) {
  EXPECT_EQ(canonical_params({{"b", "2"}, {"a", "x y"}}), "a=x%20y&b=2");
  EXPECT_EQ(percent_encode("Az09-._~/"), "Az09-._~%2F");
  EXPECT_THROW(percent_decode("%4"), std::invalid_argument);
  EXPECT_THROW(percent_decode("%zz"), std::invalid_argument);
  EXPECT_FALSE(parse_header("SELECT * {}"));
}

TEST(Header, DistinctSpecsGiveDistinctHeaders) {
  std::set<std::string> headers;
  for (std::uint64_t thema : {1, 2, 4}) {
    for (auto fn : {PredicateName::Within, PredicateName::Intersects}) {
      for (double w : {1.0, 2.0}) {
        SelectionQuerySpec spec{LayerKind::PointOfInterest, thema, Rect(0, 0, w, 1), fn};
        headers.insert(format_header(instantiate_selection(stock(), spec, geosparql_dialect()).header));
      }
    }
  }
  EXPECT_EQ(headers.size(), 12u);
}

TEST(Spec, HeaderParamsRecoverTheSpec) {
  const SelectionQuerySpec sel{LayerKind::LandOwnership, 8, Rect(0.5, 1.25, 3.000001, 4), PredicateName::Intersects};
  const auto q = instantiate_selection(stock(), sel, stsparql_dialect());
  const auto h = parse_header(q.text);
  ASSERT_TRUE(h);
  const auto back = selection_from_params(h->template_id, h->params);
  EXPECT_EQ(back.layer, sel.layer);
  EXPECT_EQ(back.thema, sel.thema);
  EXPECT_EQ(back.function, sel.function);
  EXPECT_EQ(back.geom, sel.geom);

  const JoinQuerySpec join{LayerKind::State, LayerKind::State, 1, 512, PredicateName::Touches};
  const auto jh = parse_header(instantiate_join(stock(), join, geosparql_dialect()).text);
  ASSERT_TRUE(jh);
  const auto jb = join_from_params(jh->template_id, jh->params);
  EXPECT_EQ(jb.layer1, LayerKind::State);
  EXPECT_EQ(jb.layer2, LayerKind::State);
  EXPECT_EQ(jb.thema2, 512u);
  EXPECT_EQ(jb.function, PredicateName::Touches);
}

TEST(Spec, RejectsBadThemaAndUnmappedFunction) {
  SelectionQuerySpec spec{LayerKind::PointOfInterest, 3, Rect(0, 0, 1, 1), PredicateName::Within};
  EXPECT_THROW(instantiate_selection(stock(), spec, geosparql_dialect()), std::invalid_argument);
  spec.thema = 1;
  spec.function = PredicateName::Touches;
  EXPECT_THROW(instantiate_selection(stock(), spec, point_tolerance_dialect(0.1)), RenderError);
  EXPECT_THROW(selection_from_params("SYN_SEL", {{"NS", "http://nowhere#"}}), std::invalid_argument);
}

TEST(Spec, WorkedJoinExampleRendersAsExpected) {
  const JoinQuerySpec spec{LayerKind::PointOfInterest, LayerKind::State, 1, 2, PredicateName::Within};
  const std::string text = instantiate_join(stock(), spec, geosparql_dialect()).text;
  EXPECT_NE(text.find("?s1 <http://geographica.kit/poi/ontology#hasKey> \"1\""), std::string::npos);
  EXPECT_NE(text.find("?s2 <http://geographica.kit/state/ontology#hasKey> \"2\""), std::string::npos);
  EXPECT_NE(text.find("<http://www.opengis.net/def/function/geosparql/sfWithin>(?wkt1, ?wkt2)"), std::string::npos);
}

// ---- catalog ----

TEST(Catalog, StockContents) {
  const auto& c = stock();
  EXPECT_EQ(c.workload(Workload::Micro).size(), 29u);
  EXPECT_EQ(c.workload(Workload::Scalability).size(), 3u);
  EXPECT_EQ(c.workload(Workload::Synthetic).size(), 2u);
  EXPECT_EQ(c.scenarios().size(), 5u);
  std::size_t macro = 0;
  for (const auto& [id, s] : c.scenarios()) {
    macro += s.query_ids.size();
    EXPECT_GT(s.pool.size(), 0u) << id;
  }
  EXPECT_EQ(macro, 16u);
  EXPECT_EQ(c.workload(Workload::Macro).size(), 16u);
  EXPECT_EQ(c.scenario("geocoding").query_ids, (std::vector<std::string>{"G1", "G2"}));
  const auto micro = c.workload(Workload::Micro);
  EXPECT_EQ(micro.front()->id, "Q1");
  EXPECT_EQ(micro[9]->id, "Q10");
  EXPECT_EQ(micro.back()->id, "Q29");
}

// Every stock template renders in at least one dialect with its defaults
// plus a value for each slot left open.
TEST(Catalog, EveryStockTemplateRenders) {
  const auto& c = stock();
  const Bindings fill{{"GEOM", "POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0))"},
                      {"FUNCTION", "INTERSECTS"},
                      {"NS", layer_namespace(LayerKind::PointOfInterest)},
                      {"NS1", layer_namespace(LayerKind::PointOfInterest)},
                      {"NS2", layer_namespace(LayerKind::State)},
                      {"THEMA", "1"},
                      {"THEMA1", "1"},
                      {"THEMA2", "1"}};
  for (const auto* t : c.all()) {
    Bindings b = fill;
    if (t->workload == Workload::Macro) {
      for (const auto& [k, v] : c.scenario(t->scenario).pool.row(0)) b[k] = v;
    }
    int rendered = 0;
    std::string last_error;
    for (const auto& d : {geosparql_dialect(), stsparql_dialect()}) {
      try {
        const auto q = render_query(*t, b, d);
        EXPECT_EQ(q.text.find("{{"), std::string::npos) << t->id;
        ASSERT_TRUE(parse_header(q.text)) << t->id;
        EXPECT_EQ(parse_header(q.text)->template_id, t->id);
        ++rendered;
      } catch (const RenderError& e) {
        last_error = e.what();
      }
    }
    EXPECT_GE(rendered, 1) << t->id << ": " << last_error;
  }
}

TEST(Catalog, HeaderRecordsEveryDeclaredPlaceholder) {
  const auto& t = stock().at("Q14");
  const auto q = render_query(t, {{"POINT_WKT", "POINT (1 2)"}, {"RADIUS", "3"}}, geosparql_dialect());
  std::set<std::string> keys;
  for (const auto& [k, v] : q.header.params) keys.insert(k);
  EXPECT_EQ(keys, std::set<std::string>(t.placeholders.begin(), t.placeholders.end()));
  EXPECT_EQ(q.header.params.at("GRAPH_PLACES"), "<http://geographica.kit/graph/places>");
}

TEST(Catalog, EmptyOrMissingDirectoryGivesEmptyCatalog) {
  TempDir dir;
  EXPECT_TRUE(load_catalog(dir.path()).empty());
  EXPECT_TRUE(load_catalog(dir.path() / "absent").empty());
}

TEST(Catalog, DuplicateIdsAreRejected) {
  TempDir dir;
  const std::string body = "#@ id=X1; workload=micro; mode=ids\nSELECT * {}\n";
  dir.write("a.rq", body);
  dir.write("sub/b.rq", body);
  EXPECT_THROW(load_catalog(dir.path()), CatalogError);
}

TEST(Catalog, UndeclaredPlaceholderIsRejected) {
  EXPECT_THROW(parse_template("#@ id=X; workload=micro; mode=ids\n#@ placeholders=A\nSELECT {{A}} {{B}}\n"),
               CatalogError);
  EXPECT_THROW(parse_template("#@ id=X; workload=micro; mode=ids\n#@ default.B=1\nSELECT 1\n"), CatalogError);
  EXPECT_THROW(parse_template("#@ id=X; workload=macro; mode=ids\nSELECT 1\n"), CatalogError);
  EXPECT_THROW(parse_template("SELECT 1\n"), CatalogError);
  const auto t = parse_template("#@ id=X; workload=micro; mode=count\n#@ placeholders=A\nSELECT {{A}} {{FN_WITHIN}}\n");
  EXPECT_EQ(t.mode, AnswerMode::Count);
  EXPECT_EQ(t.placeholders, std::vector<std::string>{"A"});
}

TEST(Catalog, PoolParsing) {
  const auto pool = parse_pool("# comment\nA\tB\n1\t2\n\n3\t4\n");
  ASSERT_EQ(pool.size(), 2u);
  EXPECT_EQ(pool.row(1), (Bindings{{"A", "3"}, {"B", "4"}}));
  EXPECT_THROW(parse_pool("A\tB\n1\n"), CatalogError);
  EXPECT_THROW(parse_pool("# only comments\n"), CatalogError);
}

TEST(Catalog, NaturalOrder) {
  EXPECT_TRUE(natural_less("Q2", "Q10"));
  EXPECT_FALSE(natural_less("Q10", "Q2"));
  EXPECT_TRUE(natural_less("RM1", "RM6"));
  EXPECT_TRUE(natural_less("A", "B"));
}

// ---- scenario sampling ----

TEST(Sampling, DeterministicPerSeedAndIteration) {
  const auto& s = stock().scenario("reverse_geocoding");
  for (std::uint64_t i = 0; i < 50; ++i) EXPECT_EQ(sample_scenario_params(s, 7, i), sample_scenario_params(s, 7, i));
}

TEST(Sampling, DifferentSeedsDiverge) {
  bool differ = false;
  for (std::uint64_t i = 0; i < 100 && !differ; ++i) differ = sample_row_index(10, 1, i) != sample_row_index(10, 2, i);
  EXPECT_TRUE(differ);
}

TEST(Sampling, UniformOverPool) {
  constexpr std::size_t m = 7, draws = 10000;
  std::vector<std::size_t> freq(m);
  for (std::uint64_t i = 0; i < draws; ++i) ++freq[sample_row_index(m, 42, i)];
  const double expected = static_cast<double>(draws) / m;
  for (auto f : freq) EXPECT_NEAR(static_cast<double>(f), expected, 0.10 * expected);
}

TEST(Sampling, EmptyPoolFails) {
  Scenario s;
  s.id = "empty";
  EXPECT_THROW(sample_scenario_params(s, 1, 0), CatalogError);
}

// ---- calibration ----

TEST(Calibration, SpatialCountMatchesExhaustiveCount) {
  const auto ds = dataset(12);
  for (auto kind : kAllLayers) {
    const auto& layer = ds.layer(kind);
    const auto index = index_layer(layer);
    const Rect& e = layer.extent;
    const std::vector<Rect> windows{e, Rect(e.min_x, e.min_y, e.center().x, e.center().y),
                                    Rect(e.min_x + 1.3, e.min_y + 0.7, e.max_x - 2.1, e.max_y - 1.9),
                                    Rect(e.min_x - 5, e.min_y - 5, e.max_x + 5, e.max_y + 5)};
    for (const auto& w : windows) {
      for (auto pred : kAllPredicates) {
        EXPECT_EQ(spatial_count(layer, index, pred, w), brute_count(layer, pred, w))
            << layer_slug(kind) << " " << to_string(pred);
      }
    }
  }
}

TEST(Calibration, FullFractionIsTheExtent) {
  const auto ds = dataset(8);
  for (auto [kind, pred] : {std::pair{LayerKind::PointOfInterest, PredicateName::Within},
                            std::pair{LayerKind::LandOwnership, PredicateName::Intersects}}) {
    const auto& layer = ds.layer(kind);
    const auto cal = target_rectangle(layer, pred, 1.0, index_layer(layer));
    EXPECT_EQ(cal.rect, layer.extent);
    EXPECT_EQ(cal.achieved, 1.0);
  }
}

TEST(Calibration, RejectsBadInput) {
  const auto ds = dataset(6);
  const auto& layer = ds.layer(LayerKind::PointOfInterest);
  const auto index = index_layer(layer);
  EXPECT_THROW(target_rectangle(layer, PredicateName::Within, 0.0, index), std::invalid_argument);
  EXPECT_THROW(target_rectangle(layer, PredicateName::Within, 1.5, index), std::invalid_argument);
  FeatureLayer empty{LayerKind::PointOfInterest, {}, Rect(0, 0, 1, 1)};
  EXPECT_THROW(target_rectangle(empty, PredicateName::Within, 0.5, SpatialIndex()), std::invalid_argument);
}

struct CalibrationCase {
  LayerKind layer;
  PredicateName pred;
};

class CalibrationAccuracy : public ::testing::TestWithParam<CalibrationCase> {};

TEST_P(CalibrationAccuracy, CloseToTargetMonotoneAndCentered) {
  static const auto ds = dataset(64);
  const auto& layer = ds.layer(GetParam().layer);
  const auto index = index_layer(layer);
  const double n = static_cast<double>(layer.features.size());
  std::size_t previous = 0;
  for (double f : {0.0001, 0.05, 0.10, 0.25, 0.50, 0.60, 0.75}) {
    const auto cal = target_rectangle(layer, GetParam().pred, f, index);
    EXPECT_EQ(cal.count, brute_count(layer, GetParam().pred, cal.rect));
    EXPECT_LE(std::abs(static_cast<double>(cal.count) - f * n), std::max(1.0, 0.005 * n)) << f;
    EXPECT_GE(cal.count, 1u);
    EXPECT_GE(cal.count, previous) << f;
    previous = cal.count;
    EXPECT_NEAR(cal.rect.center().x, layer.extent.center().x, 1e-6);
    EXPECT_NEAR(cal.rect.center().y, layer.extent.center().y, 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(N64, CalibrationAccuracy,
                         ::testing::Values(CalibrationCase{LayerKind::PointOfInterest, PredicateName::Within},
                                           CalibrationCase{LayerKind::PointOfInterest, PredicateName::Intersects},
                                           CalibrationCase{LayerKind::LandOwnership, PredicateName::Intersects},
                                           CalibrationCase{LayerKind::LandOwnership, PredicateName::Within}));

TEST(Calibration, DisjointIsTheComplementOfIntersects) {
  const auto ds = dataset(16);
  const auto& layer = ds.layer(LayerKind::LandOwnership);
  const auto index = index_layer(layer);
  for (double f : {0.1, 0.5, 0.9}) {
    const auto cal = target_rectangle(layer, PredicateName::Disjoint, f, index);
    EXPECT_EQ(cal.count, brute_count(layer, PredicateName::Disjoint, cal.rect));
    EXPECT_EQ(cal.count + spatial_count(layer, index, PredicateName::Intersects, cal.rect), layer.features.size());
    EXPECT_LE(std::abs(cal.achieved - f), 0.05);
  }
}

TEST(Calibration, OtherPredicatesUseExactCounts) {
  const auto ds = dataset(12);
  const auto& layer = ds.layer(LayerKind::LandOwnership);
  const auto index = index_layer(layer);
  for (auto pred : {PredicateName::Overlaps, PredicateName::Touches}) {
    const auto cal = target_rectangle(layer, pred, 0.25, index);
    EXPECT_EQ(cal.count, brute_count(layer, pred, cal.rect));
    EXPECT_GE(cal.count, 1u);
  }
}

TEST(Calibration, SmallestFractionStillSelectsAPointAtFullScale) {
  const auto ds = dataset(512);
  const auto& layer = ds.layer(LayerKind::PointOfInterest);
  const auto cal = target_rectangle(layer, PredicateName::Within, 0.0001, index_layer(layer));
  EXPECT_GE(cal.count, 1u);
  EXPECT_LE(std::abs(static_cast<double>(cal.count) - 0.0001 * 262144.0), 0.005 * 262144.0);
}

// ---- synthetic plan ----

TEST(SyntheticPlan, ShapeAndIdentity) {
  const auto ds = dataset(8, 3);
  const auto plan = plan_synthetic(ds, stock(), geosparql_dialect());
  std::size_t selections = 0, joins = 0;
  std::set<std::string> ids, headers;
  for (const auto& q : plan) {
    ids.insert(q.query_id);
    headers.insert(format_header(q.query.header));
    EXPECT_TRUE(std::regex_match(q.query_id, std::regex("[a-z0-9.-]+"))) << q.query_id;
    const auto h = parse_header(q.query.text);
    ASSERT_TRUE(h);
    if (const auto* sel = std::get_if<SelectionQuerySpec>(&q.spec)) {
      ++selections;
      ASSERT_TRUE(q.calibration);
      EXPECT_EQ(selection_from_params(h->template_id, h->params).geom, sel->geom);
    } else {
      ++joins;
      EXPECT_FALSE(q.calibration);
    }
  }
  EXPECT_EQ(selections, 2u * 5u * 2u);
  EXPECT_EQ(joins, 3u * 4u);
  EXPECT_EQ(ids.size(), plan.size());
  EXPECT_EQ(headers.size(), plan.size());
  EXPECT_EQ(plan.front().query_id, "sel-land-intersects-t1-f0.0001");
  EXPECT_EQ(plan.back().query_id, "join-poi-state-within-t8-t8");
}

TEST(SyntheticPlan, FunctionFilterAndValidation) {
  const auto ds = dataset(6, 2);
  SyntheticPlanOptions opt;
  opt.functions = {PredicateName::Touches};
  const auto plan = plan_synthetic(ds, stock(), stsparql_dialect(), opt);
  EXPECT_EQ(plan.size(), 4u);
  opt.themas = {3};
  EXPECT_THROW(plan_synthetic(ds, stock(), stsparql_dialect(), opt), std::invalid_argument);
  opt.themas = {};
  opt.fractions = {0.0};
  opt.functions = {PredicateName::Within};
  EXPECT_THROW(plan_synthetic(ds, stock(), stsparql_dialect(), opt), std::invalid_argument);
}

TEST(SyntheticPlan, FractionFormatting) {
  EXPECT_EQ(format_fraction(0.0001), "0.0001");
  EXPECT_EQ(format_fraction(0.25), "0.25");
  EXPECT_EQ(format_fraction(1.0), "1");
}

}  // namespace
}  // namespace geobench
