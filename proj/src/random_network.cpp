#include "crn/random_network.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "crn/linalg.hpp"

namespace crn {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int between(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p;
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng_);
  }

 private:
  std::mt19937_64 eng_;
};

Rational pick_coefficient(Rng& rng) {
  const int roll = rng.between(0, 19);
  if (roll < 14) return Rational(1);
  if (roll < 17) return Rational(2);
  if (roll < 18) return Rational(3);
  return Rational(1, 2);
}

std::vector<std::string> make_species_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

// Partition species 0..n-1 into complexes with pairwise disjoint supports.
std::vector<Complex> disjoint_complexes(Rng& rng, int n, int max_complexes,
                                        int min_size) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<Complex> complexes;
  std::size_t at = 0;
  while (at < order.size()) {
    int size = std::min<int>(rng.between(min_size, 3),
                             static_cast<int>(order.size() - at));
    if (size < min_size) {
      // too few species left for a full complex; fold them into the last
      if (complexes.empty()) break;
      while (at < order.size())
        complexes.back().set(order[at++], pick_coefficient(rng));
      break;
    }
    Complex c;
    for (int t = 0; t < size; ++t) c.set(order[at++], pick_coefficient(rng));
    complexes.push_back(std::move(c));
  }
  while (static_cast<int>(complexes.size()) > std::max(2, max_complexes)) {
    Complex merged = complexes[complexes.size() - 2];
    for (const auto& [i, coeff] : complexes.back().terms())
      merged.set(i, coeff);
    complexes.pop_back();
    complexes.back() = std::move(merged);
  }
  return complexes;
}

// Complexes chained into closed cycles: every complex is produced once and
// consumed once, so the all-ones vector lies in the kernel and per-complex
// weights give a positive conservation law.
void add_cycles(Rng& rng, std::vector<Complex> complexes,
                ReactionNetwork& net) {
  rng.shuffle(complexes);
  std::size_t at = 0;
  while (complexes.size() - at >= 2) {
    std::size_t len = static_cast<std::size_t>(
        rng.between(2, static_cast<int>(std::min<std::size_t>(
                           5, complexes.size() - at))));
    if (complexes.size() - at - len == 1) ++len;  // no complex left alone
    for (std::size_t t = 0; t < len; ++t) {
      Reaction r;
      r.reactant = complexes[at + t];
      r.product = complexes[at + (t + 1) % len];
      r.reversible = rng.chance(0.4);
      net.reactions.push_back(std::move(r));
    }
    at += len;
  }
}

// Complexes chained into open, fully reversible paths; trivial kernels are
// then vacuously consistent and the conservation law persists.
void add_paths(Rng& rng, std::vector<Complex> complexes,
               ReactionNetwork& net) {
  rng.shuffle(complexes);
  std::size_t at = 0;
  while (complexes.size() - at >= 2) {
    std::size_t len = static_cast<std::size_t>(
        rng.between(2, static_cast<int>(std::min<std::size_t>(
                           4, complexes.size() - at))));
    if (complexes.size() - at - len == 1) ++len;
    for (std::size_t t = 0; t + 1 < len; ++t) {
      Reaction r;
      r.reactant = complexes[at + t];
      r.product = complexes[at + t + 1];
      r.reversible = true;
      net.reactions.push_back(std::move(r));
    }
    at += len;
  }
}

// Reactions with equal reactant/product arity and every species appearing
// once on each side of two different reactions (unit-ish coefficients).
bool add_flow(Rng& rng, int max_species, int max_reactions, int min_arity,
              ReactionNetwork& net) {
  const int m = rng.between(2, std::max(2, max_reactions));
  std::vector<int> arity(static_cast<std::size_t>(m), min_arity);
  int total = m * min_arity;
  if (total > max_species) return false;
  for (int j = 0; j < m; ++j) {
    const int extra = rng.between(0, 2);
    if (total + extra > max_species) break;
    arity[static_cast<std::size_t>(j)] += extra;
    total += extra;
  }
  std::vector<int> producers, consumers;
  for (int j = 0; j < m; ++j)
    for (int t = 0; t < arity[static_cast<std::size_t>(j)]; ++t) {
      producers.push_back(j);
      consumers.push_back(j);
    }
  for (int attempt = 0; attempt < 50; ++attempt) {
    rng.shuffle(consumers);
    bool ok = true;
    for (std::size_t t = 0; t < producers.size() && ok; ++t) {
      if (producers[t] != consumers[t]) continue;
      bool fixed = false;
      for (std::size_t u = 0; u < producers.size(); ++u) {
        if (producers[t] != consumers[u] && producers[u] != consumers[t]) {
          std::swap(consumers[t], consumers[u]);
          fixed = true;
          break;
        }
      }
      ok = fixed;
    }
    if (!ok) continue;
    const int base = static_cast<int>(net.species.size());
    std::vector<Reaction> reactions(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
      reactions[static_cast<std::size_t>(j)].reversible = rng.chance(0.35);
    for (std::size_t t = 0; t < producers.size(); ++t) {
      const int species = base + static_cast<int>(t);
      net.species.push_back("X" + std::to_string(species + 1));
      const Rational coeff = rng.chance(0.15) ? Rational(2) : Rational(1);
      reactions[static_cast<std::size_t>(producers[t])].product.set(species,
                                                                    coeff);
      reactions[static_cast<std::size_t>(consumers[t])].reactant.set(species,
                                                                     coeff);
    }
    for (auto& r : reactions) net.reactions.push_back(std::move(r));
    return true;
  }
  return false;
}

// Two copies of one reversible reaction; the only structured shape whose
// R-graph edge is labeled "-", giving sign patterns with a -1 entry.
void add_duplicate_pair(Rng& rng, ReactionNetwork& net) {
  const int base = static_cast<int>(net.species.size());
  const int left = rng.between(1, 2);
  const int right = rng.between(1, 2);
  Complex a, b;
  for (int t = 0; t < left + right; ++t)
    net.species.push_back("X" + std::to_string(base + t + 1));
  for (int t = 0; t < left; ++t) a.set(base + t, pick_coefficient(rng));
  for (int t = 0; t < right; ++t)
    b.set(base + left + t, pick_coefficient(rng));
  Reaction r;
  r.reactant = a;
  r.product = b;
  r.reversible = true;
  net.reactions.push_back(r);
  net.reactions.push_back(r);
}

// Unstructured usage-capped shape: disjoint random supports, each species
// in at most two reactions. May fail conservation/consistency.
bool add_free_form(Rng& rng, int max_species, int max_reactions,
                   ReactionNetwork& net) {
  const int n = rng.between(2, std::max(2, max_species));
  net.species = make_species_names(n);
  std::vector<int> usage(static_cast<std::size_t>(n), 0);
  const int m = rng.between(1, std::max(1, max_reactions));
  for (int j = 0; j < m; ++j) {
    std::vector<int> available;
    for (int i = 0; i < n; ++i)
      if (usage[static_cast<std::size_t>(i)] < 2) available.push_back(i);
    if (available.size() < 2) break;
    rng.shuffle(available);
    const int reactant_size =
        std::min<int>(rng.between(1, 3), static_cast<int>(available.size()) - 1);
    const int product_size = std::min<int>(
        rng.between(1, 3), static_cast<int>(available.size()) - reactant_size);
    Reaction r;
    int at = 0;
    for (int t = 0; t < reactant_size; ++t, ++at)
      r.reactant.set(available[static_cast<std::size_t>(at)],
                     pick_coefficient(rng));
    for (int t = 0; t < product_size; ++t, ++at)
      r.product.set(available[static_cast<std::size_t>(at)],
                    pick_coefficient(rng));
    r.reversible = rng.chance(0.4);
    for (int i : r.reactant.support()) ++usage[static_cast<std::size_t>(i)];
    for (int i : r.product.support()) ++usage[static_cast<std::size_t>(i)];
    net.reactions.push_back(std::move(r));
  }
  return !net.reactions.empty();
}

bool generate_base(Rng& rng, const RandomNetworkParams& p,
                   ReactionNetwork& net) {
  net = ReactionNetwork{};
  const int min_size = p.unit_free_complexes ? 2 : 1;
  const int min_species = 2 * min_size;
  const int flavor = p.structured_only || p.unit_free_complexes
                         ? rng.between(0, 2)
                         : rng.between(0, 3);
  switch (flavor) {
    case 0: {
      const int n = rng.between(min_species, std::max(min_species, p.max_species));
      net.species = make_species_names(n);
      add_cycles(rng, disjoint_complexes(rng, n, p.max_reactions, min_size),
                 net);
      break;
    }
    case 1: {
      const int n = rng.between(min_species, std::max(min_species, p.max_species));
      net.species = make_species_names(n);
      add_paths(rng, disjoint_complexes(rng, n, p.max_reactions, min_size),
                net);
      break;
    }
    case 2:
      if (!add_flow(rng, std::max(min_species, p.max_species),
                    std::max(2, p.max_reactions), min_size, net))
        return false;
      break;
    default:
      return add_free_form(rng, p.max_species, p.max_reactions, net);
  }
  if (p.structured_only && !p.unit_free_complexes && rng.chance(0.25))
    add_duplicate_pair(rng, net);
  return !net.reactions.empty();
}

}  // namespace

ReactionNetwork inflate_reaction(
    const ReactionNetwork& net, int j, const std::string& intermediate_name,
    const std::optional<std::pair<std::string, Rational>>& catalyst,
    int irreversible_pattern) {
  if (j < 0 || j >= net.reaction_count())
    throw std::invalid_argument("inflate: reaction index out of range");
  if (net.species_index(intermediate_name))
    throw std::invalid_argument("inflate: intermediate name already in use");

  ReactionNetwork out;
  out.species = net.species;
  const int y_species = out.species_count();
  out.species.push_back(intermediate_name);
  Complex intermediate;
  intermediate.set(y_species, 1);

  Complex shared;
  if (catalyst) {
    if (net.species_index(catalyst->first))
      throw std::invalid_argument("inflate: catalyst name already in use");
    const int c_species = out.species_count();
    out.species.push_back(catalyst->first);
    shared.set(c_species, catalyst->second);
  }

  const Reaction& r = net.reactions[static_cast<std::size_t>(j)];
  Reaction first, second;
  first.reactant = r.reactant;
  for (const auto& [i, coeff] : shared.terms()) first.reactant.add(i, coeff);
  first.product = intermediate;
  second.reactant = intermediate;
  second.product = r.product;
  for (const auto& [i, coeff] : shared.terms()) second.product.add(i, coeff);
  if (r.reversible) {
    first.reversible = second.reversible = true;
  } else {
    first.reversible = irreversible_pattern == 0;
    second.reversible = irreversible_pattern == 2;
  }

  for (int t = 0; t < net.reaction_count(); ++t) {
    if (t == j) {
      out.reactions.push_back(first);
      out.reactions.push_back(second);
    } else {
      out.reactions.push_back(net.reactions[static_cast<std::size_t>(t)]);
    }
  }
  return out;
}

ReactionNetwork random_network(const RandomNetworkParams& params) {
  Rng rng(params.seed);
  for (int attempt = 0; attempt < 400; ++attempt) {
    ReactionNetwork base;
    if (!generate_base(rng, params, base)) continue;
    ReactionNetwork net;
    try {
      net = validate_network(base);
    } catch (const ValidationError&) {
      continue;
    }

    std::vector<bool> inflatable(static_cast<std::size_t>(net.reaction_count()),
                                 true);
    bool inflated_ok = true;
    for (int k = 0; k < params.intermediates; ++k) {
      std::vector<int> targets;
      for (int t = 0; t < net.reaction_count(); ++t)
        if (params.allow_chains || inflatable[static_cast<std::size_t>(t)])
          targets.push_back(t);
      if (targets.empty()) {
        inflated_ok = false;
        break;
      }
      const int j =
          targets[static_cast<std::size_t>(rng.between(
              0, static_cast<int>(targets.size()) - 1))];
      std::optional<std::pair<std::string, Rational>> catalyst;
      if (rng.chance(0.5))
        catalyst = {{"Q" + std::to_string(k + 1),
                     rng.chance(0.2) ? Rational(2) : Rational(1)}};
      net = inflate_reaction(net, j, "W" + std::to_string(k + 1), catalyst,
                             rng.between(0, 2));
      inflatable.insert(inflatable.begin() + j + 1, false);
      inflatable[static_cast<std::size_t>(j)] = false;
    }
    if (!inflated_ok) continue;

    if (params.require_conservative || params.require_consistent) {
      const RationalMatrix stoich = stoichiometric_matrix(net);
      if (params.require_conservative &&
          !check_conservative(stoich).holds)
        continue;
      if (params.require_consistent) {
        std::set<int> irreversible;
        for (int t = 0; t < net.reaction_count(); ++t)
          if (!net.reactions[static_cast<std::size_t>(t)].reversible)
            irreversible.insert(t);
        if (!check_consistent(stoich, irreversible).holds) continue;
      }
    }
    return net;
  }
  throw std::runtime_error("random network generation failed");
}

}  // namespace crn
