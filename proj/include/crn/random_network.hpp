#ifndef CRN_RANDOM_NETWORK_HPP
#define CRN_RANDOM_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "crn/model.hpp"

namespace crn {

/// Knobs for the randomized network generator. The base network always
/// satisfies the two structural hypotheses by construction (reactant and
/// product supports disjoint, species used at most twice); conservation
/// and consistency are checked after the fact and the sample regenerated
/// when a caller requires them.
struct RandomNetworkParams {
  int max_species = 8;
  int max_reactions = 5;
  int intermediates = 0;  // reactions to inflate into two-step motifs
  std::uint64_t seed = 0;

  bool require_conservative = false;
  bool require_consistent = false;
  // Restrict to shapes (complex cycles/chains, balanced flows) that carry
  // positive conservation laws and balanced kernel vectors by design.
  bool structured_only = false;
  // Permit inflating a previously inflated half, creating chains of
  // intermediates; when false, each inflation targets a distinct base
  // reaction so all intermediates are detectable simultaneously.
  bool allow_chains = true;
  // Give every base complex support >= 2. Bare single-species complexes
  // can be intermediates themselves, and closed cycles of them admit
  // removal orders with genuinely different minimal networks; a unit-free
  // base anchors every intermediate chain between fixed complexes, which
  // makes the minimal network unique.
  bool unit_free_complexes = false;
};

/// Deterministic for a fixed parameter set. Throws std::runtime_error
/// when no sample satisfying the requirements emerges within a bounded
/// number of attempts.
ReactionNetwork random_network(const RandomNetworkParams& params);

/// Replaces reaction j (y - y') by the pair (y + e) - Y, Y - (y' + e)
/// through a fresh intermediate species, optionally threading a fresh
/// catalyst e with the given coefficient. When reaction j is reversible
/// both halves are reversible; otherwise irreversible_pattern picks which
/// half stays irreversible (0: second only, 1: both, 2: first only), so
/// removing Y always contracts back to the original reversibility.
ReactionNetwork inflate_reaction(
    const ReactionNetwork& net, int j, const std::string& intermediate_name,
    const std::optional<std::pair<std::string, Rational>>& catalyst,
    int irreversible_pattern);

}  // namespace crn

#endif
