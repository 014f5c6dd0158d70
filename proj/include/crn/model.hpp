#ifndef CRN_MODEL_HPP
#define CRN_MODEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// A complex: formal nonnegative rational combination of species, stored
/// sparsely by species index. Zero coefficients are never stored.
class Complex {
 public:
  Complex() = default;

  void set(int species, const Rational& coefficient);
  void add(int species, const Rational& coefficient);
  Rational coefficient(int species) const;  // 0 when absent
  bool contains(int species) const { return coeffs_.count(species) != 0; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  /// Species indices with nonzero coefficient, ascending.
  std::vector<int> support() const;

  const std::map<int, Rational>& terms() const { return coeffs_; }

  /// True when this complex is exactly 1 * species.
  bool is_unit_species(int species) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) {
    return !(a == b);
  }

 private:
  std::map<int, Rational> coeffs_;
};

struct Reaction {
  Complex reactant;
  Complex product;
  bool reversible = false;
  std::string label;  // empty = unlabeled
};

/// A reaction network: ordered species names (unique) plus an ordered
/// multiset of reactions indexing into them. Duplicate reactions are
/// deliberately kept distinct.
struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  int species_count() const { return static_cast<int>(species.size()); }
  int reaction_count() const { return static_cast<int>(reactions.size()); }
  int reversible_count() const;
  std::optional<int> species_index(const std::string& name) const;
};

enum class ValidationErrorKind {
  EmptyNetwork,
  ReactantEqualsProduct,
  DuplicateSpeciesName,
  BadSpeciesIndex,
  NonpositiveCoefficient,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, std::string message,
                  int reaction_index = -1)
      : std::runtime_error(std::move(message)),
        kind(kind),
        reaction_index(reaction_index) {}

  ValidationErrorKind kind;
  int reaction_index;  // -1 when not tied to a reaction
};

/// Result of a structural hypothesis check. When the hypothesis fails,
/// `violations` lists the offending (species, reaction) pairs; when a
/// linear certificate backs a positive answer it is carried along so
/// callers can re-verify it independently.
struct HypothesisResult {
  bool holds = false;
  struct Violation {
    int species = -1;
    int reaction = -1;  // -1 when the violation concerns the species alone
  };
  std::vector<Violation> violations;
  RationalVector certificate;
};

/// Checks well-formedness, strips unused species (reindexing complexes),
/// and rejects reactions whose two sides are equal as vectors.
/// Species order is preserved.
ReactionNetwork validate_network(const ReactionNetwork& raw);

/// n x m matrix with entry (i, j) = product coefficient - reactant
/// coefficient of species i in reaction j.
RationalMatrix stoichiometric_matrix(const ReactionNetwork& net);

/// First: no species on both sides of one reaction (no auto-catalysis).
/// Second: every species takes part in at most two reactions.
std::pair<HypothesisResult, HypothesisResult> check_structural_hypotheses(
    const ReactionNetwork& net);

/// Order-insensitive fingerprint: species sorted by name, reactions as
/// normalized text tokens sorted lexicographically, duplicates kept.
struct CanonicalNetwork {
  std::vector<std::string> species;
  std::vector<std::string> reactions;

  friend bool operator==(const CanonicalNetwork& a, const CanonicalNetwork& b) {
    return a.species == b.species && a.reactions == b.reactions;
  }
};

CanonicalNetwork canonical_form(const ReactionNetwork& net);

bool networks_equal(const ReactionNetwork& a, const ReactionNetwork& b);

/// Returns a copy with reactions rearranged so that new position i holds
/// old reaction perm[i]. perm must be a permutation of 0..m-1.
ReactionNetwork permute_reactions(const ReactionNetwork& net,
                                  const std::vector<int>& perm);

}  // namespace crn

#endif
