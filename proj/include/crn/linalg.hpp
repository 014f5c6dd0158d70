#ifndef CRN_LINALG_HPP
#define CRN_LINALG_HPP

#include <optional>
#include <set>
#include <vector>

#include "crn/model.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Linear program over exact rationals:
///   optimize objective . x  subject to  equality_lhs x = equality_rhs,
///   lower[i] <= x[i] <= upper[i]  (nullopt = unbounded on that side).
/// An empty objective means pure feasibility.
struct LinearProgram {
  RationalMatrix equality_lhs;
  RationalVector equality_rhs;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  RationalVector objective;
  bool maximize = true;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;   // only for Feasible
  Rational objective;     // only for Feasible
};

/// Two-phase exact simplex with Bland's pivot rule. Feasible answers are
/// re-substituted into every constraint before being returned.
LpResult solve_lp(const LinearProgram& lp);

/// Basis of the right null space of M, computed by reduced row echelon
/// form. Size equals cols(M) - rank(M); each vector satisfies Mv = 0.
std::vector<RationalVector> rational_kernel_basis(const RationalMatrix& m);

int rational_rank(const RationalMatrix& m);

/// Conservation hypothesis: some strictly positive c with N^T c = 0.
/// Encoded as c_i >= 1 (the cone is scale invariant). Certificate = c.
HypothesisResult check_conservative(const RationalMatrix& stoich);

/// Consistency hypothesis: some v in ker N with v_j >= 1 on every
/// irreversible column, free elsewhere. Certificate = v.
HypothesisResult check_consistent(const RationalMatrix& stoich,
                                  const std::set<int>& irreversible_columns);

enum class OrthantClass { P1, P2, Neither };

/// Classification of ker N against the orthant {x : sigma_i x_i >= 0}.
///   P2      — certificate v: Nv = 0 and sigma_i v_i >= 1 for all i.
///   P1      — ker N meets the orthant only at 0 (no point certificate;
///             re-check by re-solving).
///   Neither — certificate: nonzero v in ker N with sigma_i v_i >= 0
///             but no interior point exists.
struct KernelOrthantClass {
  OrthantClass cls = OrthantClass::P1;
  RationalVector certificate;  // empty for P1
};

/// sigma must hold one entry in {+1, -1} per column of `stoich`;
/// throws std::invalid_argument on dimension mismatch.
KernelOrthantClass classify_kernel_orthant(const RationalMatrix& stoich,
                                           const std::vector<int>& sigma);

/// Brute-force enumeration of the minimal-support nonnegative left kernel
/// vectors of N (one coprime-integer generator per minimal support, in
/// increasing support order). Exponential in the row count; refuses to run
/// for more than max_rows rows.
std::vector<RationalVector> minimal_support_conservation_vectors(
    const RationalMatrix& stoich, int max_rows = 12);

}  // namespace crn

#endif
