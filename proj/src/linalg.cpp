#include "crn/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace crn {

namespace {

struct Rref {
  RationalMatrix mat;
  std::vector<int> pivot_cols;  // pivot column of each pivot row
};

Rref reduced_row_echelon(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) m.row(r).swap(m.row(pivot_row));
    const Rational inv = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

int rational_rank(const RationalMatrix& m) {
  return static_cast<int>(reduced_row_echelon(m).pivot_cols.size());
}

std::vector<RationalVector> rational_kernel_basis(const RationalMatrix& m) {
  const Rref rr = reduced_row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RationalVector> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v(f) = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v(rr.pivot_cols[r]) = -rr.mat(static_cast<Eigen::Index>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Exact two-phase simplex with Bland's pivot rule.
// ---------------------------------------------------------------------------

namespace {

// Minimizes cost over {T x = rhs, x >= 0}, starting from the given basis
// (T columns of basic variables are unit vectors). Returns false when the
// problem is unbounded below.
class SimplexTableau {
 public:
  SimplexTableau(RationalMatrix t, RationalVector rhs, std::vector<int> basis)
      : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {
    in_basis_.assign(static_cast<std::size_t>(t_.cols()), false);
    for (int b : basis_) in_basis_[static_cast<std::size_t>(b)] = true;
  }

  bool minimize(const RationalVector& cost) {
    for (;;) {
      const int enter = entering_column(cost);
      if (enter < 0) return true;
      const int leave = leaving_row(enter);
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational obj = 0;
    for (Eigen::Index r = 0; r < t_.rows(); ++r)
      obj += cost(basis_[static_cast<std::size_t>(r)]) * rhs_(r);
    return obj;
  }

  // Pivots remaining basic columns >= first_artificial out of the basis
  // where possible and deletes rows that turn out redundant.
  void eliminate_artificials(int first_artificial) {
    std::vector<Eigen::Index> drop;
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (basis_[static_cast<std::size_t>(r)] < first_artificial) continue;
      int col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (!in_basis_[static_cast<std::size_t>(j)] && t_(r, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0)
        pivot(static_cast<int>(r), col);
      else
        drop.push_back(r);  // zero structural row: redundant constraint
    }
    if (!drop.empty()) remove_rows(drop);
    shrink_columns(first_artificial);
  }

  RationalVector solution(int n_cols) const {
    RationalVector x = RationalVector::Zero(n_cols);
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      const int b = basis_[static_cast<std::size_t>(r)];
      if (b < n_cols) x(b) = rhs_(r);
    }
    return x;
  }

 private:
  int entering_column(const RationalVector& cost) const {
    for (Eigen::Index j = 0; j < t_.cols(); ++j) {
      if (in_basis_[static_cast<std::size_t>(j)]) continue;
      Rational reduced = cost(j);
      for (Eigen::Index r = 0; r < t_.rows(); ++r) {
        const Rational& cb = cost(basis_[static_cast<std::size_t>(r)]);
        if (cb != 0 && t_(r, j) != 0) reduced -= cb * t_(r, j);
      }
      if (reduced < 0) return static_cast<int>(j);  // Bland: lowest index
    }
    return -1;
  }

  int leaving_row(int enter) const {
    int leave = -1;
    Rational best;
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (t_(r, enter) <= 0) continue;
      const Rational ratio = rhs_(r) / t_(r, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis_[static_cast<std::size_t>(r)] <
                                basis_[static_cast<std::size_t>(leave)]))
        best = ratio, leave = static_cast<int>(r);
    }
    return leave;
  }

  void pivot(int row, int col) {
    const Rational inv = t_(row, col);
    t_.row(row) /= inv;
    rhs_(row) /= inv;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Rational factor = t_(i, col);
      t_.row(i) -= factor * t_.row(row);
      rhs_(i) -= factor * rhs_(row);
    }
    in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(row)])] =
        false;
    basis_[static_cast<std::size_t>(row)] = col;
    in_basis_[static_cast<std::size_t>(col)] = true;
  }

  void remove_rows(const std::vector<Eigen::Index>& rows) {
    RationalMatrix t(t_.rows() - static_cast<Eigen::Index>(rows.size()),
                     t_.cols());
    RationalVector rhs(t.rows());
    std::vector<int> basis;
    Eigen::Index out = 0;
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (std::find(rows.begin(), rows.end(), r) != rows.end()) {
        in_basis_[static_cast<std::size_t>(
            basis_[static_cast<std::size_t>(r)])] = false;
        continue;
      }
      t.row(out) = t_.row(r);
      rhs(out) = rhs_(r);
      basis.push_back(basis_[static_cast<std::size_t>(r)]);
      ++out;
    }
    t_ = std::move(t);
    rhs_ = std::move(rhs);
    basis_ = std::move(basis);
  }

  void shrink_columns(int keep) {
    t_.conservativeResize(Eigen::NoChange, keep);
    in_basis_.resize(static_cast<std::size_t>(keep));
  }

  RationalMatrix t_;
  RationalVector rhs_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
};

// Bound-shifted, all-nonnegative reformulation of a LinearProgram.
struct StandardForm {
  RationalMatrix a;
  RationalVector b;
  RationalVector cost;  // minimization over the standard columns

  struct VarMap {
    enum Kind { ShiftedUp, ShiftedDown, Split } kind;
    int col1 = -1;
    int col2 = -1;  // Split only
    Rational offset;
  };
  std::vector<VarMap> vars;
};

StandardForm standardize(const LinearProgram& lp) {
  const Eigen::Index p = lp.equality_lhs.rows();
  const Eigen::Index q = lp.equality_lhs.cols();

  StandardForm sf;
  sf.vars.resize(static_cast<std::size_t>(q));
  int n_cols = 0;
  int n_extra_rows = 0;
  for (Eigen::Index i = 0; i < q; ++i) {
    auto& vm = sf.vars[static_cast<std::size_t>(i)];
    const auto& lo = lp.lower[static_cast<std::size_t>(i)];
    const auto& hi = lp.upper[static_cast<std::size_t>(i)];
    if (lo && hi) {
      vm = {StandardForm::VarMap::ShiftedUp, n_cols++, -1, *lo};
      ++n_extra_rows;  // u + slack = hi - lo
    } else if (lo) {
      vm = {StandardForm::VarMap::ShiftedUp, n_cols++, -1, *lo};
    } else if (hi) {
      vm = {StandardForm::VarMap::ShiftedDown, n_cols++, -1, *hi};
    } else {
      vm = {StandardForm::VarMap::Split, n_cols, n_cols + 1, Rational(0)};
      n_cols += 2;
    }
  }
  const int n_slacks = n_extra_rows;
  sf.a = RationalMatrix::Zero(p + n_extra_rows, n_cols + n_slacks);
  sf.b = RationalVector::Zero(p + n_extra_rows);
  sf.b.head(p) = lp.equality_rhs;
  sf.cost = RationalVector::Zero(n_cols + n_slacks);

  const bool has_objective = lp.objective.size() == q;
  int extra = 0;
  for (Eigen::Index i = 0; i < q; ++i) {
    const auto& vm = sf.vars[static_cast<std::size_t>(i)];
    const Rational c =
        has_objective
            ? (lp.maximize ? Rational(-lp.objective(i)) : lp.objective(i))
            : Rational(0);
    switch (vm.kind) {
      case StandardForm::VarMap::ShiftedUp:
        for (Eigen::Index r = 0; r < p; ++r) sf.a(r, vm.col1) = lp.equality_lhs(r, i);
        sf.cost(vm.col1) = c;
        break;
      case StandardForm::VarMap::ShiftedDown:
        for (Eigen::Index r = 0; r < p; ++r)
          sf.a(r, vm.col1) = -lp.equality_lhs(r, i);
        sf.cost(vm.col1) = -c;
        break;
      case StandardForm::VarMap::Split:
        for (Eigen::Index r = 0; r < p; ++r) {
          sf.a(r, vm.col1) = lp.equality_lhs(r, i);
          sf.a(r, vm.col2) = -lp.equality_lhs(r, i);
        }
        sf.cost(vm.col1) = c;
        sf.cost(vm.col2) = -c;
        break;
    }
    if (vm.offset != 0)
      for (Eigen::Index r = 0; r < p; ++r)
        sf.b(r) -= lp.equality_lhs(r, i) * vm.offset;
    const auto& lo = lp.lower[static_cast<std::size_t>(i)];
    const auto& hi = lp.upper[static_cast<std::size_t>(i)];
    if (lo && hi) {
      const Eigen::Index row = p + extra;
      sf.a(row, vm.col1) = 1;
      sf.a(row, n_cols + extra) = 1;
      sf.b(row) = *hi - *lo;
      ++extra;
    }
  }
  return sf;
}

void validate_lp(const LinearProgram& lp) {
  const Eigen::Index p = lp.equality_lhs.rows();
  const Eigen::Index q = lp.equality_lhs.cols();
  if (lp.equality_rhs.size() != p)
    throw std::invalid_argument("LP: rhs size does not match constraint rows");
  if (static_cast<Eigen::Index>(lp.lower.size()) != q ||
      static_cast<Eigen::Index>(lp.upper.size()) != q)
    throw std::invalid_argument("LP: bound vectors must cover every variable");
  if (lp.objective.size() != 0 && lp.objective.size() != q)
    throw std::invalid_argument("LP: objective size does not match variables");
}

void check_solution(const LinearProgram& lp, const RationalVector& x) {
  const RationalVector residual = lp.equality_lhs * x - lp.equality_rhs;
  for (Eigen::Index r = 0; r < residual.size(); ++r)
    if (residual(r) != 0)
      throw std::logic_error("LP solution violates an equality constraint");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto& lo = lp.lower[static_cast<std::size_t>(i)];
    const auto& hi = lp.upper[static_cast<std::size_t>(i)];
    if ((lo && x(i) < *lo) || (hi && x(i) > *hi))
      throw std::logic_error("LP solution violates a variable bound");
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  validate_lp(lp);
  for (std::size_t i = 0; i < lp.lower.size(); ++i)
    if (lp.lower[i] && lp.upper[i] && *lp.lower[i] > *lp.upper[i])
      return {LpStatus::Infeasible, {}, 0};

  StandardForm sf = standardize(lp);
  const Eigen::Index rows = sf.a.rows();
  const int n_structural = static_cast<int>(sf.a.cols());

  // Phase 1: artificial basis, minimize the total artificial mass.
  RationalMatrix t(rows, n_structural + rows);
  RationalVector rhs = sf.b;
  t.leftCols(n_structural) = sf.a;
  t.rightCols(rows) = RationalMatrix::Zero(rows, rows);
  std::vector<int> basis;
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (rhs(r) < 0) {
      t.row(r) = -t.row(r);
      rhs(r) = -rhs(r);
    }
    t(r, n_structural + r) = 1;
    basis.push_back(n_structural + static_cast<int>(r));
  }
  RationalVector phase1_cost = RationalVector::Zero(n_structural + rows);
  for (Eigen::Index r = 0; r < rows; ++r) phase1_cost(n_structural + r) = 1;

  SimplexTableau tableau(std::move(t), std::move(rhs), std::move(basis));
  tableau.minimize(phase1_cost);  // bounded below by zero
  if (tableau.objective(phase1_cost) != 0) return {LpStatus::Infeasible, {}, 0};
  tableau.eliminate_artificials(n_structural);

  // Phase 2 on the real objective (zero for pure feasibility problems).
  if (!tableau.minimize(sf.cost)) return {LpStatus::Unbounded, {}, 0};

  const RationalVector std_x = tableau.solution(n_structural);
  RationalVector x(lp.equality_lhs.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto& vm = sf.vars[static_cast<std::size_t>(i)];
    switch (vm.kind) {
      case StandardForm::VarMap::ShiftedUp:
        x(i) = vm.offset + std_x(vm.col1);
        break;
      case StandardForm::VarMap::ShiftedDown:
        x(i) = vm.offset - std_x(vm.col1);
        break;
      case StandardForm::VarMap::Split:
        x(i) = std_x(vm.col1) - std_x(vm.col2);
        break;
    }
  }
  check_solution(lp, x);

  Rational objective = 0;
  if (lp.objective.size() == x.size())
    for (Eigen::Index i = 0; i < x.size(); ++i) objective += lp.objective(i) * x(i);
  return {LpStatus::Feasible, std::move(x), std::move(objective)};
}

// ---------------------------------------------------------------------------
// Hypothesis certificates and orthant classification.
// ---------------------------------------------------------------------------

namespace {

LinearProgram feasibility_lp(RationalMatrix lhs, RationalVector rhs) {
  LinearProgram lp;
  lp.equality_lhs = std::move(lhs);
  lp.equality_rhs = std::move(rhs);
  lp.lower.assign(static_cast<std::size_t>(lp.equality_lhs.cols()),
                  std::nullopt);
  lp.upper.assign(static_cast<std::size_t>(lp.equality_lhs.cols()),
                  std::nullopt);
  return lp;
}

}  // namespace

HypothesisResult check_conservative(const RationalMatrix& stoich) {
  const Eigen::Index n = stoich.rows();
  const Eigen::Index m = stoich.cols();
  HypothesisResult result;

  LinearProgram lp = feasibility_lp(stoich.transpose(), RationalVector::Zero(m));
  for (Eigen::Index i = 0; i < n; ++i)
    lp.lower[static_cast<std::size_t>(i)] = Rational(1);
  const LpResult primal = solve_lp(lp);
  if (primal.status == LpStatus::Feasible) {
    result.holds = true;
    result.certificate = primal.point;
    return result;
  }

  // No positive conservation law. The certificate of impossibility is a
  // reaction combination x with Nx >= 0 and Nx != 0: any positive c would
  // have to satisfy both c.(Nx) = 0 and c.(Nx) > 0.
  result.holds = false;
  LinearProgram dual;
  dual.equality_lhs = RationalMatrix::Zero(n + 1, m + n + 1);
  dual.equality_rhs = RationalVector::Zero(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) dual.equality_lhs(i, j) = stoich(i, j);
    dual.equality_lhs(i, m + i) = -1;  // (Nx)_i = s_i
    dual.equality_lhs(n, m + i) = 1;   // total production
  }
  dual.equality_lhs(n, m + n) = -1;
  dual.equality_rhs(n) = 1;  // sum s_i >= 1
  dual.lower.assign(static_cast<std::size_t>(m + n + 1), Rational(0));
  for (Eigen::Index j = 0; j < m; ++j)
    dual.lower[static_cast<std::size_t>(j)] = std::nullopt;
  dual.upper.assign(static_cast<std::size_t>(m + n + 1), std::nullopt);
  const LpResult witness = solve_lp(dual);
  if (witness.status != LpStatus::Feasible)
    throw std::logic_error("conservativity: both primal and dual infeasible");
  result.certificate = witness.point.head(m);
  return result;
}

HypothesisResult check_consistent(const RationalMatrix& stoich,
                                  const std::set<int>& irreversible_columns) {
  const Eigen::Index n = stoich.rows();
  const Eigen::Index m = stoich.cols();
  HypothesisResult result;

  LinearProgram lp = feasibility_lp(stoich, RationalVector::Zero(n));
  for (int j : irreversible_columns) {
    if (j < 0 || j >= m)
      throw std::invalid_argument("irreversible column index out of range");
    lp.lower[static_cast<std::size_t>(j)] = Rational(1);
  }
  const LpResult primal = solve_lp(lp);
  if (primal.status == LpStatus::Feasible) {
    result.holds = true;
    result.certificate = primal.point;
    return result;
  }

  // Impossibility witness: y with (N^T y)_j = 0 on reversible columns,
  // <= 0 on irreversible ones and < 0 somewhere, so no kernel vector can
  // be positive on every irreversible coordinate.
  result.holds = false;
  const Eigen::Index k = static_cast<Eigen::Index>(irreversible_columns.size());
  LinearProgram dual;
  dual.equality_lhs = RationalMatrix::Zero(m + 1, n + k + 1);
  dual.equality_rhs = RationalVector::Zero(m + 1);
  Eigen::Index slack = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i)
      dual.equality_lhs(j, i) = stoich(i, j);  // (N^T y)_j
    if (irreversible_columns.count(static_cast<int>(j))) {
      dual.equality_lhs(j, n + slack) = 1;  // (N^T y)_j + s = 0
      dual.equality_lhs(m, n + slack) = 1;
      ++slack;
    }
  }
  dual.equality_lhs(m, n + k) = -1;
  dual.equality_rhs(m) = 1;  // sum of slacks >= 1
  dual.lower.assign(static_cast<std::size_t>(n + k + 1), Rational(0));
  for (Eigen::Index i = 0; i < n; ++i)
    dual.lower[static_cast<std::size_t>(i)] = std::nullopt;
  dual.upper.assign(static_cast<std::size_t>(n + k + 1), std::nullopt);
  const LpResult witness = solve_lp(dual);
  if (witness.status != LpStatus::Feasible)
    throw std::logic_error("consistency: both primal and dual infeasible");
  result.certificate = witness.point.head(n);
  return result;
}

KernelOrthantClass classify_kernel_orthant(const RationalMatrix& stoich,
                                           const std::vector<int>& sigma) {
  const Eigen::Index m = stoich.cols();
  if (static_cast<Eigen::Index>(sigma.size()) != m)
    throw std::invalid_argument(
        "sign pattern length does not match reaction count");
  for (int s : sigma)
    if (s != 1 && s != -1)
      throw std::invalid_argument("sign pattern entries must be +1 or -1");

  RationalMatrix signed_stoich = stoich;
  for (Eigen::Index j = 0; j < m; ++j)
    if (sigma[static_cast<std::size_t>(j)] < 0)
      signed_stoich.col(j) = -signed_stoich.col(j);

  KernelOrthantClass out;

  // Interior test: N diag(sigma) w = 0 with w >= 1 scales onto int K.
  LinearProgram interior =
      feasibility_lp(signed_stoich, RationalVector::Zero(stoich.rows()));
  for (Eigen::Index j = 0; j < m; ++j)
    interior.lower[static_cast<std::size_t>(j)] = Rational(1);
  const LpResult p2 = solve_lp(interior);
  if (p2.status == LpStatus::Feasible) {
    out.cls = OrthantClass::P2;
    out.certificate = p2.point;
    for (Eigen::Index j = 0; j < m; ++j)
      if (sigma[static_cast<std::size_t>(j)] < 0)
        out.certificate(j) = -out.certificate(j);
    return out;
  }

  // Boundary test: any nonzero point of ker N inside K scales into the
  // unit box with positive coordinate sum.
  LinearProgram box =
      feasibility_lp(signed_stoich, RationalVector::Zero(stoich.rows()));
  box.objective = RationalVector::Zero(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    box.lower[static_cast<std::size_t>(j)] = Rational(0);
    box.upper[static_cast<std::size_t>(j)] = Rational(1);
    box.objective(j) = 1;
  }
  box.maximize = true;
  const LpResult p1 = solve_lp(box);
  if (p1.status != LpStatus::Feasible)
    throw std::logic_error("kernel box LP cannot be infeasible");
  if (p1.objective == 0) {
    out.cls = OrthantClass::P1;
    return out;
  }
  out.cls = OrthantClass::Neither;
  out.certificate = p1.point;
  for (Eigen::Index j = 0; j < m; ++j)
    if (sigma[static_cast<std::size_t>(j)] < 0)
      out.certificate(j) = -out.certificate(j);
  return out;
}

std::vector<RationalVector> minimal_support_conservation_vectors(
    const RationalMatrix& stoich, int max_rows) {
  const int n = static_cast<int>(stoich.rows());
  const Eigen::Index m = stoich.cols();
  if (n > max_rows)
    throw std::invalid_argument(
        "too many species for brute-force support enumeration");

  std::vector<std::vector<int>> minimal_supports;
  std::vector<RationalVector> generators;

  std::vector<int> support;
  for (int size = 1; size <= n; ++size) {
    support.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) support[static_cast<std::size_t>(i)] = i;
    for (;;) {
      const bool dominated = std::any_of(
          minimal_supports.begin(), minimal_supports.end(),
          [&](const std::vector<int>& s) {
            return std::includes(support.begin(), support.end(), s.begin(),
                                 s.end());
          });
      if (!dominated) {
        LinearProgram lp;
        lp.equality_lhs = RationalMatrix::Zero(m, size);
        lp.equality_rhs = RationalVector::Zero(m);
        for (Eigen::Index j = 0; j < m; ++j)
          for (int t = 0; t < size; ++t)
            lp.equality_lhs(j, t) = stoich(support[static_cast<std::size_t>(t)], j);
        lp.lower.assign(static_cast<std::size_t>(size), Rational(1));
        lp.upper.assign(static_cast<std::size_t>(size), std::nullopt);
        const LpResult r = solve_lp(lp);
        if (r.status == LpStatus::Feasible) {
          RationalVector omega = RationalVector::Zero(n);
          for (int t = 0; t < size; ++t)
            omega(support[static_cast<std::size_t>(t)]) = r.point(t);
          generators.push_back(normalize_to_coprime_integers(omega));
          minimal_supports.push_back(support);
        }
      }
      // next size-subset of {0..n-1} in lexicographic order
      int pos = size - 1;
      while (pos >= 0 &&
             support[static_cast<std::size_t>(pos)] == n - size + pos)
        --pos;
      if (pos < 0) break;
      ++support[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < size; ++t)
        support[static_cast<std::size_t>(t)] =
            support[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return generators;
}

}  // namespace crn
