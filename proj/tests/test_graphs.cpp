#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "crn/graphs.hpp"
#include "crn/parser.hpp"
#include "fixtures.hpp"

using namespace crn;

namespace {

struct Built {
  ReactionNetwork net;
  RationalMatrix stoich;
  SRGraph sr;
  DirectedSRGraph dsr;
  RGraph rg;
};

Built build(const std::string& text) {
  Built b;
  b.net = parse_network(text);
  b.stoich = stoichiometric_matrix(b.net);
  b.sr = build_sr_graph(b.net, b.stoich);
  b.dsr = build_directed_sr_graph(b.net, b.stoich);
  b.rg = build_r_graph(b.net, b.stoich);
  return b;
}

int sp(const Built& b, const std::string& name) {
  return *b.net.species_index(name);
}
int rv(const Built& b, int j) { return b.sr.reaction_vertex(j); }

}  // namespace

TEST_CASE("SR-graph of the one-site network") {
  const Built b = build(fixtures::kOneSite);
  CHECK(b.sr.vertex_count() == 10);
  // every reaction touches three species, so 12 nonzero entries
  CHECK(b.sr.edge_count() == 12);
  CHECK(b.sr.edge_label(sp(b, "S0"), rv(b, 0)) == 1);
  CHECK(b.sr.edge_label(sp(b, "S0E"), rv(b, 0)) == -1);
  // local pattern around an intermediate: reactant edges +, product edges -,
  // the intermediate sits on a - edge to its producer and a + edge to its
  // consumer
  CHECK(b.sr.edge_label(sp(b, "E"), rv(b, 0)) == 1);
  CHECK(b.sr.edge_label(sp(b, "E"), rv(b, 1)) == -1);
  CHECK(b.sr.edge_label(sp(b, "S0E"), rv(b, 1)) == 1);
  CHECK_FALSE(b.sr.edge_label(sp(b, "S0"), rv(b, 1)).has_value());
}

TEST_CASE("SR-graph of a single conversion") {
  const Built b = build("A -> B");
  CHECK(b.sr.edge_label(sp(b, "A"), rv(b, 0)) == 1);
  CHECK(b.sr.edge_label(sp(b, "B"), rv(b, 0)) == -1);
}

TEST_CASE("directed SR-graph edge cases") {
  SUBCASE("irreversible: product does not feed back") {
    const Built b = build("A -> B");
    CHECK(b.dsr.has_edge(sp(b, "A"), rv(b, 0)));
    CHECK(b.dsr.has_edge(rv(b, 0), sp(b, "A")));
    CHECK(b.dsr.has_edge(rv(b, 0), sp(b, "B")));
    CHECK_FALSE(b.dsr.has_edge(sp(b, "B"), rv(b, 0)));
  }
  SUBCASE("reversible: all four edges") {
    const Built b = build("A <-> B");
    CHECK(b.dsr.has_edge(sp(b, "A"), rv(b, 0)));
    CHECK(b.dsr.has_edge(sp(b, "B"), rv(b, 0)));
    CHECK(b.dsr.has_edge(rv(b, 0), sp(b, "A")));
    CHECK(b.dsr.has_edge(rv(b, 0), sp(b, "B")));
  }
  SUBCASE("one-site release step") {
    const Built b = build(fixtures::kOneSite);
    CHECK(b.dsr.has_edge(sp(b, "S0E"), rv(b, 1)));
    CHECK_FALSE(b.dsr.has_edge(sp(b, "S1"), rv(b, 1)));
    CHECK_FALSE(b.dsr.has_edge(sp(b, "E"), rv(b, 1)));
    CHECK(b.dsr.has_edge(rv(b, 1), sp(b, "E")));
  }
}

TEST_CASE("one-way edges come only from irreversible products") {
  for (const char* text :
       {fixtures::kOneSite, fixtures::kRkip, "A <-> B\nB -> C\nC -> A"}) {
    const Built b = build(text);
    for (int v = 0; v < b.dsr.vertex_count(); ++v) {
      for (const auto& [w, label] : b.dsr.out[static_cast<std::size_t>(v)]) {
        (void)label;
        if (b.dsr.has_edge(w, v)) continue;
        // one-way: must be reaction -> species with an irreversible reaction
        // and the species in its product
        REQUIRE_FALSE(b.dsr.is_species(v));
        const int j = v - b.dsr.n_species;
        const Reaction& r = b.net.reactions[static_cast<std::size_t>(j)];
        CHECK_FALSE(r.reversible);
        CHECK(r.product.contains(w));
      }
    }
  }
}

TEST_CASE("R-graph of the one-site network is an all-positive 4-cycle") {
  const Built b = build(fixtures::kOneSite);
  REQUIRE(b.rg.edges.size() == 4);
  for (const auto& e : b.rg.edges) {
    CHECK(e.labels.plus);
    CHECK_FALSE(e.labels.minus);
  }
  CHECK(b.rg.edge_labels(0, 1).has_value());
  CHECK(b.rg.edge_labels(1, 2).has_value());
  CHECK(b.rg.edge_labels(2, 3).has_value());
  CHECK(b.rg.edge_labels(0, 3).has_value());
  CHECK_FALSE(b.rg.edge_labels(0, 2).has_value());
  CHECK_FALSE(b.rg.edge_labels(1, 3).has_value());
}

TEST_CASE("R-graph of the reduced one-site network is one positive edge") {
  const Built b = build(fixtures::kOneSiteReduced);
  REQUIRE(b.rg.edges.size() == 1);
  CHECK(b.rg.edges[0].labels.plus);
  CHECK_FALSE(b.rg.edges[0].labels.minus);
}

TEST_CASE("equal-outer-complex shape carries a doubly labeled edge") {
  const Built b = build(fixtures::kEqualOuterOdd);
  REQUIRE(b.rg.edges.size() == 1);
  CHECK(b.rg.edges[0].labels.plus);
  CHECK(b.rg.edges[0].labels.minus);
  CHECK(b.rg.edges[0].labels.text() == "+,-");
}

TEST_CASE("connectivity of small graphs") {
  CHECK(graph_connected(build(fixtures::kOneSiteReduced).rg));
  CHECK(graph_connected(build("A -> B").rg));
  const Built split = build("A <-> C\nB <-> D");
  CHECK_FALSE(graph_connected(split.rg));
  CHECK(component_count(split.rg) == 2);
  CHECK_FALSE(graph_connected(split.sr));
}

TEST_CASE("R-strong connectivity") {
  CHECK(r_strongly_connected(build(fixtures::kOneSite).dsr));
  CHECK(r_strongly_connected(build("A -> B").dsr));
  CHECK_FALSE(r_strongly_connected(build("A -> B\nC -> D").dsr));
}

TEST_CASE("positive loop property verdicts") {
  SUBCASE("one-site holds") {
    CHECK(positive_loop_property(build(fixtures::kOneSite).rg).holds);
  }
  SUBCASE("a doubly labeled edge fails with a two-vertex witness") {
    const PlpResult r =
        positive_loop_property(build(fixtures::kEqualOuterOdd).rg);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->vertices == std::vector<int>{0, 1, 0});
    CHECK(r.witness->parity == LoopParity::OddRLoop);
  }
  SUBCASE("a (+,+,-) triangle fails with a three-vertex witness") {
    const Built b = build("Z + V -> X\nX -> Y\nY + Z -> U");
    REQUIRE(b.rg.edges.size() == 3);
    const PlpResult r = positive_loop_property(b.rg);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->vertices.size() == 4);  // closed triangle
    CHECK(r.witness->vertices.front() == r.witness->vertices.back());
    int product = 1;
    for (std::size_t k = 0; k + 1 < r.witness->vertices.size(); ++k) {
      const auto labels = b.rg.edge_labels(r.witness->vertices[k],
                                           r.witness->vertices[k + 1]);
      REQUIRE(labels.has_value());
      REQUIRE(labels->singleton());
      product *= labels->the_label();
    }
    CHECK(product == -1);
  }
}

TEST_CASE("sign patterns") {
  CHECK(sign_pattern(build(fixtures::kOneSiteReduced).rg) ==
        SignPattern{1, 1});
  CHECK(sign_pattern(build(fixtures::kOneSite).rg) == SignPattern{1, 1, 1, 1});
  // duplicated reversible reaction: shared species on equal sides give a
  // negative label, so the second sign flips
  CHECK(sign_pattern(build("A <-> B\nA <-> B").rg) == SignPattern{1, -1});
  // isolated reaction vertices default to +1
  CHECK(sign_pattern(build("A -> B\nC -> D").rg) == SignPattern{1, 1});
  CHECK_THROWS_AS(sign_pattern(build(fixtures::kEqualOuterOdd).rg),
                  std::invalid_argument);
}

TEST_CASE("loop classification") {
  const Built b = build(fixtures::kOneSite);
  // S0 - R1 - S0E - R2 - S1 - R3 - S1F - R4 - S0
  const std::vector<int> eight = {sp(b, "S0"),  rv(b, 0), sp(b, "S0E"),
                                  rv(b, 1),     sp(b, "S1"), rv(b, 2),
                                  sp(b, "S1F"), rv(b, 3), sp(b, "S0")};
  CHECK(classify_loop(b.sr, eight) == LoopParity::ELoop);

  const Built odd = build(fixtures::kEqualOuterOdd);
  const std::vector<int> four = {sp(odd, "A"), rv(odd, 0), sp(odd, "B"),
                                 rv(odd, 1), sp(odd, "A")};
  CHECK(classify_loop(odd.sr, four) == LoopParity::OLoop);

  CHECK_THROWS_AS(classify_loop(b.sr, {0, 6, 0}), std::invalid_argument);
  CHECK_THROWS_AS(
      classify_loop(b.sr, {sp(b, "S0"), rv(b, 0), sp(b, "S1"), rv(b, 1),
                           sp(b, "S0")}),
      std::invalid_argument);  // uses a missing edge
}

TEST_CASE("simple loop enumeration") {
  // the reduced one-site SR-graph is the 4-cycle S0 - R1 - S1 - R2 - S0
  const auto reduced_loops =
      enumerate_simple_loops(build(fixtures::kOneSiteReduced).sr);
  REQUIRE(reduced_loops.size() == 1);
  CHECK(reduced_loops[0].vertices.size() == 5);
  CHECK(reduced_loops[0].parity == LoopParity::ELoop);

  // one-site: four 8-cycles (either of E/S0E crossed with either of F/S1F)
  // plus the two enzyme 4-cycles, all e-loops
  const auto one_site_loops =
      enumerate_simple_loops(build(fixtures::kOneSite).sr);
  REQUIRE(one_site_loops.size() == 6);
  int eights = 0, fours = 0;
  for (const auto& loop : one_site_loops) {
    CHECK(loop.parity == LoopParity::ELoop);
    if (loop.vertices.size() == 9) ++eights;
    if (loop.vertices.size() == 5) ++fours;
  }
  CHECK(eights == 4);
  CHECK(fours == 2);

  const auto odd_loops =
      enumerate_simple_loops(build(fixtures::kEqualOuterOdd).sr);
  REQUIRE(odd_loops.size() == 1);
  CHECK(odd_loops[0].vertices.size() == 5);
  CHECK(odd_loops[0].parity == LoopParity::OLoop);

  SRGraph too_big;
  too_big.n_species = 30;
  too_big.adj.resize(30);
  CHECK_THROWS_AS(enumerate_simple_loops(too_big), std::invalid_argument);
}

TEST_CASE("directed realizability of loops") {
  // exactly three one-site loops are directed cycles, and their species
  // sets are the three minimal conservation supports
  const Built b = build(fixtures::kOneSite);
  std::vector<std::set<int>> directed_supports;
  for (const auto& loop : enumerate_simple_loops(b.sr)) {
    if (!loop_is_directed(b.dsr, loop.vertices)) continue;
    std::set<int> species;
    for (int v : loop.vertices)
      if (b.sr.is_species(v)) species.insert(v);
    directed_supports.push_back(std::move(species));
    // reversing the sequence must not change the answer
    std::vector<int> reversed(loop.vertices.rbegin(), loop.vertices.rend());
    CHECK(loop_is_directed(b.dsr, reversed));
  }
  REQUIRE(directed_supports.size() == 3);
  const std::set<int> substrate = {sp(b, "S0"), sp(b, "S0E"), sp(b, "S1"),
                                   sp(b, "S1F")};
  const std::set<int> kinase = {sp(b, "E"), sp(b, "S0E")};
  const std::set<int> phosphatase = {sp(b, "F"), sp(b, "S1F")};
  CHECK(std::count(directed_supports.begin(), directed_supports.end(),
                   substrate) == 1);
  CHECK(std::count(directed_supports.begin(), directed_supports.end(),
                   kinase) == 1);
  CHECK(std::count(directed_supports.begin(), directed_supports.end(),
                   phosphatase) == 1);
}

TEST_CASE("DOT export is deterministic and structured") {
  const Built b = build(fixtures::kOneSiteReduced);
  const std::string dot = export_dot(b.rg);
  CHECK(dot == export_dot(b.rg));
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("label=\"+\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);

  const std::string odd = export_dot(build(fixtures::kEqualOuterOdd).rg);
  CHECK(odd.find("label=\"+,-\"") != std::string::npos);

  const std::string sr = export_dot(b.sr);
  CHECK(sr.find("shape=ellipse") != std::string::npos);
  CHECK(sr.find("label=\"S0\"") != std::string::npos);

  const std::string dsr = export_dot(build("A -> B").dsr);
  CHECK(dsr.find("->") != std::string::npos);
}
