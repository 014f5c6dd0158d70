#ifndef CRN_REDUCTION_HPP
#define CRN_REDUCTION_HPP

#include <functional>
#include <string>
#include <vector>

#include "crn/model.hpp"

namespace crn {

/// A species Y that is its own complex, produced by exactly one reaction
/// and consumed by exactly one other, whose outer complexes agree on their
/// shared ("catalyst") part e. All complexes are indexed against the
/// network the candidate was found in.
struct IntermediateCandidate {
  int species = -1;        // Y
  int producing = -1;      // reaction with Y as product side
  int consuming = -1;      // reaction with Y as reactant side
  Complex y;               // reactant of producing
  Complex y_prime;         // product of consuming
  Complex shared;          // e: common part of y and y_prime (may be empty)
  Complex y_hat;           // y - e
  Complex y_hat_prime;     // y_prime - e
};

struct ReductionStep {
  std::string removed_species;
  std::vector<std::string> cancelled_catalysts;
  int producing = -1;         // index in the pre-step network
  int consuming = -1;         // index in the pre-step network
  int contracted_index = -1;  // index of the contracted reaction afterwards
  Reaction contracted;        // indexed against the post-step network
  std::string contracted_text;
  // old reaction index -> new index, for the surviving reactions
  // (producing maps to the contracted reaction; consuming is dropped)
  std::vector<int> index_map;  // -1 for the consumed slot
};

struct ReductionTrace {
  ReactionNetwork initial;
  ReactionNetwork final_network;
  std::vector<ReductionStep> steps;
};

/// All intermediates of the network, ordered by species index. A species
/// qualifies only when: its complex is exactly 1*Y and Y occurs in no
/// other complex; exactly one reaction carries Y on each side; the outer
/// complexes differ, agree on their shared support, and keep nonempty
/// supports after the shared part is removed.
std::vector<IntermediateCandidate> find_intermediates(
    const ReactionNetwork& net);

/// Replaces the two reactions through the intermediate by their
/// contraction (reversible only when both originals were), placed at the
/// producing reaction's index, and prunes species that no longer occur.
/// Throws std::invalid_argument when the candidate does not match `net`.
std::pair<ReactionNetwork, ReductionStep> remove_intermediate(
    const ReactionNetwork& net, const IntermediateCandidate& cand);

/// Removes intermediates until none remain, lowest species index first.
/// The result is the unique minimal network; the trace replays to it.
std::pair<ReactionNetwork, ReductionTrace> reduce_fully(
    const ReactionNetwork& net);

/// Policy hook: `pick` selects which candidate to remove next (index into
/// the candidate list). Used to exercise removal-order independence.
std::pair<ReactionNetwork, ReductionTrace> reduce_fully(
    const ReactionNetwork& net,
    const std::function<std::size_t(const std::vector<IntermediateCandidate>&)>&
        pick);

}  // namespace crn

#endif
