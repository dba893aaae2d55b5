#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace arbor;
using nlohmann::json;
using arbor::testing::ordered_voltage;
using arbor::testing::simple_cycles;

namespace {

std::vector<std::string> weight_names(const VoltageGraph& g, const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(g.names().name(g.edge(id).weight));
  return out;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("reference document parses to the reference graph") {
    const json doc = json::parse(R"({
      "vertices": ["1", "2", "3"],
      "group": {"type": "cyclic", "order": 3},
      "edges": [
        {"source": 0, "target": 0, "weight": "a", "voltage": 1},
        {"source": 0, "target": 1, "weight": "b", "voltage": 0},
        {"source": 1, "target": 2, "weight": "c", "voltage": 2},
        {"source": 2, "target": 0, "weight": "d", "voltage": 2},
        {"source": 2, "target": 1, "weight": "e", "voltage": 0}]})");
    const VoltageGraph g = parse_graph(doc);
    CHECK(serialize_graph(g) == serialize_graph(z3_triangle()));
    CHECK(weight_names(g, g.out_edges(0)) == std::vector<std::string>{"a", "b"});
    CHECK(weight_names(g, g.out_edges(2)) == std::vector<std::string>{"d", "e"});
    CHECK(weight_names(g, g.in_edges(0)) == std::vector<std::string>{"a", "d"});
  }

  TEST_CASE("validation") {
    CHECK(parse_graph(R"({"vertices": 1, "edges": []})").vertex_count() == 1);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [{"source": 0, "target": 2, "weight": "a"}]})"),
                    DanglingVertexIndex);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [{"source": 0, "target": "x", "weight": "a"}]})"),
                    DanglingVertexIndex);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [{"source": 0, "target": 1, "weight": "a"},
                                                              {"source": 1, "target": 0, "weight": "a"}]})"),
                    DuplicateWeightName);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "sheets": 2,
                                    "edges": [{"source": 0, "target": 1, "weight": "a", "voltage": 1}]})"),
                    VoltageKindMismatch);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "sheets": 2,
                                    "edges": [{"source": 0, "target": 1, "weight": "a", "voltage": [1, 1]}]})"),
                    VoltageKindMismatch);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "group": {"type": "table", "mul": [[0, 1], [1, 0]]},
                                    "edges": [{"source": 0, "target": 1, "weight": "a", "voltage": 2}]})"),
                    VoltageKindMismatch);
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 1, "edges": [{"source": 0, "target": 0}]})"), SchemaError);
    CHECK_THROWS_AS(parse_graph("not json"), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 1, "group": {"type": "dihedral"}, "edges": []})"), SchemaError);
  }

  TEST_CASE("serialization round-trips") {
    Rng rng(31);
    for (const auto& fam : family_names()) {
      for (int i = 0; i < 10; ++i) {
        const VoltageGraph g = random_voltage_graph(rng, 1 + i % 4, i % 7, family_context(fam));
        const json doc = serialize_graph(g);
        const VoltageGraph back = parse_graph(doc);
        REQUIRE(serialize_graph(back) == doc);
        REQUIRE(parse_graph(doc.dump()).edge_count() == g.edge_count());
        std::size_t out_total = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) out_total += g.out_edges(v).size();
        REQUIRE(out_total == g.edge_count());
      }
    }
    const json s3 = serialize_graph(random_voltage_graph(rng, 2, 3, FiniteGroup::symmetric(3)));
    CHECK(serialize_graph(parse_graph(s3)) == s3);
  }
}

TEST_SUITE("cover") {
  TEST_CASE("derived cover of the Z/3 triangle") {
    const CoverGraph c = build_cover(z3_triangle());
    CHECK(c.vertex_count() == 9);
    CHECK(c.edge_count() == 15);
    std::set<std::pair<std::string, std::string>> a_lifts;
    for (const auto& e : c.edges())
      if (e.base_edge == 0) a_lifts.emplace(c.vertex_label(e.source), c.vertex_label(e.target));
    CHECK(a_lifts == std::set<std::pair<std::string, std::string>>{{"1^1", "1^2"}, {"1^2", "1^3"}, {"1^3", "1^1"}});
    const VoltageGraph flat = as_plain_graph(c);
    CHECK(flat.vertex_count() == 9);
    CHECK(flat.label(4) == "2^2");
    CHECK(deck_group(c).size() == 3);
    CHECK(is_regular_cover(c));
  }

  TEST_CASE("permutation cover is not regular") {
    const CoverGraph c = build_cover(permuted_triangle());
    CHECK_FALSE(is_regular_cover(c));
    for (const auto& t : deck_group(c)) CHECK(t[c.vertex_index(0, 0)] != c.vertex_index(0, 1));
  }

  TEST_CASE("trivial covers") {
    const VoltageGraph base = underlying_graph(z3_triangle());
    const CoverGraph one = build_cover(base);
    CHECK(is_regular_cover(one));
    CHECK(serialize_graph(as_plain_graph(one)) == serialize_graph(base));

    // A rigid base (distinct weights) under identity voltages: every sheet permutation is a deck map.
    VoltageGraph copies(SheetCount{3});
    for (std::size_t v = 0; v < 3; ++v) copies.add_vertex(base.label(v));
    for (const Edge& e : base.edges()) copies.add_edge(e.source, e.target, base.names().name(e.weight));
    const CoverGraph c = build_cover(copies);
    CHECK(deck_group(c).size() == 6);
    const VoltageGraph flat = as_plain_graph(c);
    CHECK_FALSE(is_strongly_connected(flat));
  }

  TEST_CASE("single loop lifts to a cycle") {
    const VoltageGraph flat = as_plain_graph(build_cover(cyclic_loop(3)));
    CHECK(flat.vertex_count() == 3);
    CHECK(flat.edge_count() == 3);
    for (const Edge& e : flat.edges()) {
      CHECK(e.target == (e.source + 1) % 3);
      CHECK(flat.names().name(e.weight) == "a");
    }
  }

  TEST_CASE("deck search budget") {
    const VoltageGraph g(SheetCount{5});
    VoltageGraph h = g;
    h.add_vertex("1");
    h.add_vertex("2");
    CHECK_THROWS_AS(deck_group(build_cover(h), 100), SearchSpaceTooLarge);
  }

  TEST_CASE("cover invariants on random graphs") {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
      const std::size_t k = 1 + i % 4;
      const VoltageGraph g = random_voltage_graph(rng, 1 + i % 5, i % 9, VoltageContext{SheetCount{k}});
      const CoverGraph c = build_cover(g);
      REQUIRE(c.vertex_count() == g.vertex_count() * k);
      REQUIRE(c.edge_count() == g.edge_count() * k);
      const VoltageGraph flat = as_plain_graph(c);
      for (std::size_t v = 0; v < flat.vertex_count(); ++v) {
        const std::size_t b = c.base_vertex(v);
        REQUIRE(flat.out_edges(v).size() == g.out_edges(b).size());
        REQUIRE(flat.in_edges(v).size() == g.in_edges(b).size());
      }
      for (const Edge& e : flat.edges()) {
        const LiftedEdge& l = c.edges()[e.id];
        REQUIRE(e.weight == g.edge(l.base_edge).weight);
        REQUIRE(c.base_vertex(e.source) == g.edge(l.base_edge).source);
        REQUIRE(c.base_vertex(e.target) == g.edge(l.base_edge).target);
      }
    }
  }

  TEST_CASE("derived covers are regular") {
    Rng rng(33);
    for (const char* fam : {"z2", "z3", "s3", "z2xz2"}) {
      for (int i = 0; i < 15; ++i) {
        const VoltageGraph g = random_voltage_graph(rng, 1 + i % 3, i % 6, family_context(fam));
        REQUIRE(is_regular_cover(build_cover(g)));
      }
    }
  }

  TEST_CASE("gauge transform") {
    const VoltageGraph g = z3_triangle();
    CHECK(serialize_graph(gauge_transform(g, 0, 0)) == serialize_graph(g));
    const VoltageGraph h = gauge_transform(g, 0, 1);
    CHECK(std::get<FiniteGroup::Element>(h.edge(0).voltage) == 1);
    CHECK(std::get<FiniteGroup::Element>(h.edge(1).voltage) == 1);
    CHECK(std::get<FiniteGroup::Element>(h.edge(3).voltage) == 1);
    CHECK(std::get<FiniteGroup::Element>(h.edge(2).voltage) == 2);
    CHECK_THROWS_AS(gauge_transform(permuted_triangle(), 0, 1), VoltageKindMismatch);
  }

  TEST_CASE("gauge transform preserves cycle voltages") {
    Rng rng(34);
    for (const char* fam : {"z2", "z3", "z4", "z2xz2", "z5"}) {
      for (int i = 0; i < 20; ++i) {
        const VoltageGraph g = random_voltage_graph(rng, 2 + i % 3, 3 + i % 5, family_context(fam));
        const std::size_t v = i % g.vertex_count();
        const auto h = static_cast<FiniteGroup::Element>(i % g.group()->order());
        const VoltageGraph t = gauge_transform(g, v, h);
        std::vector<std::vector<std::size_t>> cycles;
        simple_cycles(g, cycles);
        for (const auto& c : cycles) REQUIRE(ordered_voltage(g, c) == ordered_voltage(t, c));
      }
    }
  }

  TEST_CASE("cover document carries a projection") {
    const json doc = serialize_cover(build_cover(z3_triangle()));
    CHECK(doc["projection"]["vertices"].size() == 9);
    CHECK(doc["projection"]["edges"].size() == 15);
    const VoltageGraph back = parse_graph(doc);
    CHECK(back.vertex_count() == 9);
    CHECK(back.has_shared_weights());
    CHECK(laplacian(back) == laplacian(as_plain_graph(build_cover(z3_triangle()))));
  }
}
