#ifndef CRN_TESTS_FIXTURES_HPP
#define CRN_TESTS_FIXTURES_HPP

#include <string>

#include "crn/model.hpp"
#include "crn/parser.hpp"

namespace fixtures {

// One-site substrate modification: kinase E binds S0, phosphatase F binds S1.
inline const char* kOneSite =
    "S0 + E <-> S0E\n"
    "S0E -> S1 + E\n"
    "S1 + F <-> S1F\n"
    "S1F -> S0 + F\n";

inline const char* kOneSiteReduced =
    "S0 -> S1\n"
    "S1 -> S0\n";

// RKIP pathway with three intermediates (MpE, RKEp, KpP).
inline const char* kRkip =
    "R + K <-> RK\n"
    "RK + Ep <-> RKEp\n"
    "RKEp -> R + Kp + E\n"
    "Mp + E <-> MpE\n"
    "MpE -> Mp + Ep\n"
    "Kp + P <-> KpP\n"
    "KpP -> K + P\n";

inline const char* kRkipReduced =
    "R + K <-> RK\n"
    "RK + Ep -> R + Kp + E\n"
    "E -> Ep\n"
    "Kp -> K\n";

// The two counterexample shapes whose pseudo-intermediate has equal outer
// complexes (y = y'); removing Y there breaks the graphical invariants.
inline const char* kEqualOuterOdd =
    "A + B <-> Y\n"
    "A <-> B\n";

inline const char* kEqualOuterSplit =
    "A + B <-> Y\n"
    "A <-> C\n"
    "B <-> D\n";

inline crn::ReactionNetwork one_site() {
  return crn::parse_network(kOneSite);
}

inline crn::ReactionNetwork rkip() { return crn::parse_network(kRkip); }

// Sequential processive n-site modification chain:
//   S0 + E <-> S0E <-> ... <-> S(n-1)E -> Sn + E
//   Sn + F <-> SnF <-> ... <-> S1F -> S0 + F
inline crn::ReactionNetwork processive(int n) {
  std::string text = "S0 + E <-> S0E\n";
  for (int i = 0; i + 1 < n; ++i)
    text += "S" + std::to_string(i) + "E <-> S" + std::to_string(i + 1) + "E\n";
  text += "S" + std::to_string(n - 1) + "E -> S" + std::to_string(n) + " + E\n";
  text += "S" + std::to_string(n) + " + F <-> S" + std::to_string(n) + "F\n";
  for (int i = n; i > 1; --i)
    text += "S" + std::to_string(i) + "F <-> S" + std::to_string(i - 1) + "F\n";
  text += "S1F -> S0 + F\n";
  return crn::parse_network(text);
}

// Phosphorelay over M substrates with per-substrate site counts sites[m]:
// intra-substrate chains, phosphotransfer through the complexes X^m, an
// initial activation and a terminal reset.
inline crn::ReactionNetwork phosphorelay(int substrates, int sites) {
  const auto s = [](int m, int i) {
    return "S" + std::to_string(m) + "_" + std::to_string(i);
  };
  std::string text;
  for (int m = 1; m <= substrates; ++m)
    for (int i = 1; i < sites; ++i)
      text += s(m, i) + " <-> " + s(m, i + 1) + "\n";
  for (int m = 1; m < substrates; ++m) {
    const std::string x = "X" + std::to_string(m);
    text += s(m, sites) + " + " + s(m + 1, 0) + " <-> " + x + "\n";
    text += x + " -> " + s(m, 0) + " + " + s(m + 1, 1) + "\n";
  }
  text += s(1, 0) + " -> " + s(1, 1) + "\n";
  text += s(substrates, sites) + " -> " + s(substrates, 0) + "\n";
  return crn::parse_network(text);
}

// Removal in the wider sense that also accepts y = y': delete every
// reaction touching Y and prune. Deliberately not part of the library;
// it exists to reproduce the known non-invariance counterexamples.
inline crn::ReactionNetwork remove_equal_outer_pseudointermediate(
    const crn::ReactionNetwork& net, const std::string& y_name) {
  const auto y = net.species_index(y_name);
  if (!y) throw std::invalid_argument("no such species: " + y_name);
  crn::ReactionNetwork raw;
  raw.species = net.species;
  for (const crn::Reaction& r : net.reactions)
    if (!r.reactant.contains(*y) && !r.product.contains(*y))
      raw.reactions.push_back(r);
  return crn::validate_network(raw);
}

}  // namespace fixtures

#endif
