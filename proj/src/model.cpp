#include "crn/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace crn {

void Complex::set(int species, const Rational& coefficient) {
  if (coefficient < 0)
    throw ValidationError(ValidationErrorKind::NonpositiveCoefficient,
                          "negative coefficient");
  if (coefficient == 0)
    coeffs_.erase(species);
  else
    coeffs_[species] = coefficient;
}

void Complex::add(int species, const Rational& coefficient) {
  set(species, coefficient + this->coefficient(species));
}

Rational Complex::coefficient(int species) const {
  auto it = coeffs_.find(species);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<int> Complex::support() const {
  std::vector<int> out;
  out.reserve(coeffs_.size());
  for (const auto& [idx, _] : coeffs_) out.push_back(idx);
  return out;
}

bool Complex::is_unit_species(int species) const {
  return coeffs_.size() == 1 && coefficient(species) == 1;
}

int ReactionNetwork::reversible_count() const {
  return static_cast<int>(
      std::count_if(reactions.begin(), reactions.end(),
                    [](const Reaction& r) { return r.reversible; }));
}

std::optional<int> ReactionNetwork::species_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < species.size(); ++i)
    if (species[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

Complex reindex(const Complex& c, const std::vector<int>& old_to_new) {
  Complex out;
  for (const auto& [idx, coeff] : c.terms())
    out.set(old_to_new[static_cast<std::size_t>(idx)], coeff);
  return out;
}

void check_indices(const Complex& c, int n, int reaction) {
  for (const auto& [idx, coeff] : c.terms()) {
    if (idx < 0 || idx >= n)
      throw ValidationError(ValidationErrorKind::BadSpeciesIndex,
                            "species index out of range", reaction);
    if (coeff <= 0)
      throw ValidationError(ValidationErrorKind::NonpositiveCoefficient,
                            "nonpositive stored coefficient", reaction);
  }
}

}  // namespace

ReactionNetwork validate_network(const ReactionNetwork& raw) {
  if (raw.reactions.empty())
    throw ValidationError(ValidationErrorKind::EmptyNetwork,
                          "network has no reactions");
  {
    std::set<std::string> seen;
    for (const auto& name : raw.species)
      if (!seen.insert(name).second)
        throw ValidationError(ValidationErrorKind::DuplicateSpeciesName,
                              "duplicate species name: " + name);
  }
  const int n = raw.species_count();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int j = 0; j < raw.reaction_count(); ++j) {
    const Reaction& r = raw.reactions[static_cast<std::size_t>(j)];
    check_indices(r.reactant, n, j);
    check_indices(r.product, n, j);
    if (r.reactant == r.product)
      throw ValidationError(ValidationErrorKind::ReactantEqualsProduct,
                            "reactant equals product in reaction " +
                                std::to_string(j + 1),
                            j);
    for (const auto& [idx, _] : r.reactant.terms())
      used[static_cast<std::size_t>(idx)] = true;
    for (const auto& [idx, _] : r.product.terms())
      used[static_cast<std::size_t>(idx)] = true;
  }

  ReactionNetwork net;
  std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) {
      old_to_new[static_cast<std::size_t>(i)] = net.species_count();
      net.species.push_back(raw.species[static_cast<std::size_t>(i)]);
    }
  }
  net.reactions.reserve(raw.reactions.size());
  for (const Reaction& r : raw.reactions) {
    Reaction out;
    out.reactant = reindex(r.reactant, old_to_new);
    out.product = reindex(r.product, old_to_new);
    out.reversible = r.reversible;
    out.label = r.label;
    net.reactions.push_back(std::move(out));
  }
  return net;
}

RationalMatrix stoichiometric_matrix(const ReactionNetwork& net) {
  const int n = net.species_count();
  const int m = net.reaction_count();
  RationalMatrix stoich = RationalMatrix::Zero(n, m);
  for (int j = 0; j < m; ++j) {
    const Reaction& r = net.reactions[static_cast<std::size_t>(j)];
    for (const auto& [i, coeff] : r.product.terms()) stoich(i, j) += coeff;
    for (const auto& [i, coeff] : r.reactant.terms()) stoich(i, j) -= coeff;
  }
  return stoich;
}

std::pair<HypothesisResult, HypothesisResult> check_structural_hypotheses(
    const ReactionNetwork& net) {
  HypothesisResult g1, g2;
  g1.holds = true;
  g2.holds = true;

  std::vector<int> occurrences(static_cast<std::size_t>(net.species_count()),
                               0);
  for (int j = 0; j < net.reaction_count(); ++j) {
    const Reaction& r = net.reactions[static_cast<std::size_t>(j)];
    std::set<int> touched;
    for (const auto& [i, _] : r.reactant.terms()) touched.insert(i);
    for (const auto& [i, _] : r.product.terms()) touched.insert(i);
    for (int i : touched) ++occurrences[static_cast<std::size_t>(i)];
    for (const auto& [i, coeff] : r.reactant.terms()) {
      if (r.product.contains(i)) {
        g1.holds = false;
        g1.violations.push_back({i, j});
      }
    }
  }
  for (int i = 0; i < net.species_count(); ++i) {
    if (occurrences[static_cast<std::size_t>(i)] > 2) {
      g2.holds = false;
      g2.violations.push_back({i, -1});
    }
  }
  return {g1, g2};
}

namespace {

std::string complex_token(const ReactionNetwork& net, const Complex& c) {
  if (c.empty()) return "0";
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [i, coeff] : c.terms())
    terms.emplace_back(net.species[static_cast<std::size_t>(i)], coeff);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += " + ";
    if (terms[k].second != 1) out += to_string(terms[k].second) + " ";
    out += terms[k].first;
  }
  return out;
}

}  // namespace

CanonicalNetwork canonical_form(const ReactionNetwork& net) {
  CanonicalNetwork canon;
  canon.species = net.species;
  std::sort(canon.species.begin(), canon.species.end());
  canon.reactions.reserve(net.reactions.size());
  for (const Reaction& r : net.reactions) {
    canon.reactions.push_back(complex_token(net, r.reactant) +
                              (r.reversible ? " <-> " : " -> ") +
                              complex_token(net, r.product));
  }
  std::sort(canon.reactions.begin(), canon.reactions.end());
  return canon;
}

bool networks_equal(const ReactionNetwork& a, const ReactionNetwork& b) {
  return canonical_form(a) == canonical_form(b);
}

ReactionNetwork permute_reactions(const ReactionNetwork& net,
                                  const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != net.reaction_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  ReactionNetwork out;
  out.species = net.species;
  out.reactions.reserve(perm.size());
  for (int old : perm) {
    if (old < 0 || old >= net.reaction_count() ||
        seen[static_cast<std::size_t>(old)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(old)] = true;
    out.reactions.push_back(net.reactions[static_cast<std::size_t>(old)]);
  }
  return out;
}

}  // namespace crn
