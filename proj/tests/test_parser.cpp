#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/parser.hpp"
#include "crn/random_network.hpp"
#include "fixtures.hpp"

using namespace crn;

TEST_CASE("parsing the one-site network") {
  const ReactionNetwork net = parse_network(fixtures::kOneSite);
  CHECK(net.species_count() == 6);
  CHECK(net.reaction_count() == 4);
  CHECK(net.species ==
        std::vector<std::string>{"S0", "E", "S0E", "S1", "F", "S1F"});
  CHECK(net.reactions[0].reversible);
  CHECK_FALSE(net.reactions[1].reversible);
  CHECK(net.reactions[1].reactant.is_unit_species(2));
}

TEST_CASE("labels and coefficients") {
  const ReactionNetwork net = parse_network("R1: 2A -> B");
  CHECK(net.reactions[0].label == "R1");
  CHECK(net.reactions[0].reactant.coefficient(0) == 2);

  const ReactionNetwork spaced = parse_network("turnover: 3/2 A + B -> C");
  CHECK(spaced.reactions[0].label == "turnover");
  CHECK(spaced.reactions[0].reactant.coefficient(0) == Rational(3, 2));
  CHECK(spaced.reactions[0].reactant.coefficient(1) == 1);
}

TEST_CASE("repeated species sum their coefficients") {
  const ReactionNetwork net = parse_network("S + S -> D");
  CHECK(net.reactions[0].reactant.coefficient(0) == 2);
}

TEST_CASE("the empty complex is expressible") {
  const ReactionNetwork net = parse_network("0 -> A\nA -> 0");
  CHECK(net.reactions[0].reactant.empty());
  CHECK(net.reactions[1].product.empty());
  const std::string text = serialize_network(net);
  CHECK(networks_equal(parse_network(text), net));
}

TEST_CASE("comments, blank lines, and CRLF endings") {
  const ReactionNetwork net = parse_network(
      "# substrate cycle\r\n\r\nA -> B  # forward\r\nB -> A\r\n");
  CHECK(net.reaction_count() == 2);
  CHECK(net.species == std::vector<std::string>{"A", "B"});
}

TEST_CASE("parse errors carry exact spans") {
  SUBCASE("dangling plus") {
    try {
      parse_network("A + <-> B");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.line == 1);
      CHECK(e.span.column == 3);
    }
  }
  SUBCASE("missing arrow") {
    try {
      parse_network("A B -> C");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.line == 1);
      CHECK(e.span.column == 3);
    }
  }
  SUBCASE("zero coefficient") {
    try {
      parse_network("0 A -> B");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.line == 1);
      CHECK(e.span.column == 1);
    }
  }
  SUBCASE("zero denominator") {
    try {
      parse_network("1/0 A -> B");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.column == 3);
    }
  }
  SUBCASE("stray character") {
    CHECK_THROWS_AS(parse_network("A & B -> C"), ParseError);
  }
  SUBCASE("reactant equal to product, reported on its line") {
    try {
      parse_network("A -> B\nC + D -> C + D");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.span.line == 2);
    }
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_network(""), ParseError);
  }
}

TEST_CASE("serialization matches the textual format") {
  const ReactionNetwork reduced = parse_network(fixtures::kOneSiteReduced);
  CHECK(serialize_network(reduced) == "S0 -> S1\nS1 -> S0");

  const ReactionNetwork frac = parse_network("3/2 A -> B");
  CHECK(serialize_network(frac) == "3/2 A -> B");

  const ReactionNetwork labeled = parse_network("R1: A <-> 2 B");
  CHECK(serialize_network(labeled) == "R1: A <-> 2 B");
}

TEST_CASE("round-trips are canonical-equal") {
  for (const char* text : {fixtures::kOneSite, fixtures::kRkip,
                           fixtures::kEqualOuterSplit, "3/2 A -> B\nB -> 0"}) {
    const ReactionNetwork net = parse_network(text);
    CHECK(networks_equal(parse_network(serialize_network(net)), net));
  }
}

TEST_CASE("round-trips on generated networks") {
  for (int s = 0; s < 50; ++s) {
    RandomNetworkParams p;
    p.seed = 7000 + static_cast<std::uint64_t>(s);
    p.intermediates = s % 3;
    const ReactionNetwork net = random_network(p);
    CHECK(networks_equal(parse_network(serialize_network(net)), net));
  }
}
