#include "crn/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "crn/parser.hpp"

namespace crn {

namespace {

Complex subtract(const Complex& a, const Complex& b) {
  Complex out = a;
  for (const auto& [i, coeff] : b.terms()) out.add(i, -coeff);
  return out;
}

}  // namespace

std::vector<IntermediateCandidate> find_intermediates(
    const ReactionNetwork& net) {
  std::vector<IntermediateCandidate> candidates;
  const int n = net.species_count();
  const int m = net.reaction_count();

  for (int y_idx = 0; y_idx < n; ++y_idx) {
    // Every occurrence of Y must be the standalone unit complex 1*Y.
    bool standalone_only = true;
    std::vector<int> producing, consuming;
    for (int j = 0; j < m && standalone_only; ++j) {
      const Reaction& r = net.reactions[static_cast<std::size_t>(j)];
      if (r.reactant.contains(y_idx)) {
        if (!r.reactant.is_unit_species(y_idx)) standalone_only = false;
        consuming.push_back(j);
      }
      if (r.product.contains(y_idx)) {
        if (!r.product.is_unit_species(y_idx)) standalone_only = false;
        producing.push_back(j);
      }
    }
    if (!standalone_only || producing.size() != 1 || consuming.size() != 1)
      continue;
    const int p = producing.front();
    const int c = consuming.front();
    if (p == c) continue;

    IntermediateCandidate cand;
    cand.species = y_idx;
    cand.producing = p;
    cand.consuming = c;
    cand.y = net.reactions[static_cast<std::size_t>(p)].reactant;
    cand.y_prime = net.reactions[static_cast<std::size_t>(c)].product;
    if (cand.y == cand.y_prime) continue;

    // Shared species must carry identical coefficients on both sides.
    bool shared_ok = true;
    for (const auto& [i, coeff] : cand.y.terms()) {
      if (!cand.y_prime.contains(i)) continue;
      if (cand.y_prime.coefficient(i) != coeff) {
        shared_ok = false;
        break;
      }
      cand.shared.set(i, coeff);
    }
    if (!shared_ok) continue;

    cand.y_hat = subtract(cand.y, cand.shared);
    cand.y_hat_prime = subtract(cand.y_prime, cand.shared);
    if (cand.y_hat.empty() || cand.y_hat_prime.empty()) continue;
    candidates.push_back(std::move(cand));
  }
  return candidates;
}

std::pair<ReactionNetwork, ReductionStep> remove_intermediate(
    const ReactionNetwork& net, const IntermediateCandidate& cand) {
  const int m = net.reaction_count();
  const auto stale = [&](const char* why) {
    throw std::invalid_argument(std::string("stale candidate: ") + why);
  };
  if (cand.species < 0 || cand.species >= net.species_count())
    stale("species index out of range");
  if (cand.producing < 0 || cand.producing >= m || cand.consuming < 0 ||
      cand.consuming >= m || cand.producing == cand.consuming)
    stale("reaction indices out of range");
  const Reaction& prod_rx =
      net.reactions[static_cast<std::size_t>(cand.producing)];
  const Reaction& cons_rx =
      net.reactions[static_cast<std::size_t>(cand.consuming)];
  if (!prod_rx.product.is_unit_species(cand.species) ||
      !cons_rx.reactant.is_unit_species(cand.species))
    stale("intermediate is not where the candidate says");
  if (prod_rx.reactant != cand.y || cons_rx.product != cand.y_prime)
    stale("outer complexes changed");

  Reaction contracted;
  contracted.reactant = cand.y_hat;
  contracted.product = cand.y_hat_prime;
  contracted.reversible = prod_rx.reversible && cons_rx.reversible;

  ReactionNetwork raw;
  raw.species = net.species;
  ReductionStep step;
  step.removed_species = net.species[static_cast<std::size_t>(cand.species)];
  for (int i : cand.shared.support())
    step.cancelled_catalysts.push_back(
        net.species[static_cast<std::size_t>(i)]);
  step.producing = cand.producing;
  step.consuming = cand.consuming;
  step.index_map.assign(static_cast<std::size_t>(m), -1);
  for (int j = 0; j < m; ++j) {
    if (j == cand.consuming) continue;
    const int new_index = j - (j > cand.consuming ? 1 : 0);
    step.index_map[static_cast<std::size_t>(j)] = new_index;
    raw.reactions.push_back(j == cand.producing
                                ? contracted
                                : net.reactions[static_cast<std::size_t>(j)]);
  }
  step.contracted_index =
      step.index_map[static_cast<std::size_t>(cand.producing)];

  // Pruning drops the intermediate and (under the two-reaction cap) every
  // cancelled catalyst, reindexing the surviving species.
  ReactionNetwork reduced = validate_network(raw);
  step.contracted =
      reduced.reactions[static_cast<std::size_t>(step.contracted_index)];
  step.contracted_text = serialize_reaction(reduced, step.contracted);
  return {std::move(reduced), std::move(step)};
}

std::pair<ReactionNetwork, ReductionTrace> reduce_fully(
    const ReactionNetwork& net,
    const std::function<std::size_t(const std::vector<IntermediateCandidate>&)>&
        pick) {
  ReductionTrace trace;
  trace.initial = net;
  ReactionNetwork current = net;
  for (;;) {
    const std::vector<IntermediateCandidate> candidates =
        find_intermediates(current);
    if (candidates.empty()) break;
    const std::size_t choice = pick(candidates);
    if (choice >= candidates.size())
      throw std::invalid_argument("candidate picker returned a bad index");
    auto [next, step] = remove_intermediate(current, candidates[choice]);
    trace.steps.push_back(std::move(step));
    current = std::move(next);
  }
  trace.final_network = current;
  return {std::move(current), std::move(trace)};
}

std::pair<ReactionNetwork, ReductionTrace> reduce_fully(
    const ReactionNetwork& net) {
  return reduce_fully(
      net, [](const std::vector<IntermediateCandidate>&) -> std::size_t {
        return 0;  // candidates arrive ordered by species index
      });
}

}  // namespace crn
