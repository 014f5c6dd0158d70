#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crn/linalg.hpp"
#include "crn/parser.hpp"
#include "fixtures.hpp"

using namespace crn;

namespace {

RationalMatrix mat(int rows, int cols, std::initializer_list<int> entries) {
  RationalMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

bool annihilates(const RationalMatrix& m, const RationalVector& v) {
  const RationalVector r = m * v;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return false;
  return true;
}

std::set<int> irreversible_of(const ReactionNetwork& net) {
  std::set<int> out;
  for (int j = 0; j < net.reaction_count(); ++j)
    if (!net.reactions[static_cast<std::size_t>(j)].reversible) out.insert(j);
  return out;
}

}  // namespace

TEST_CASE("kernel of the reduced one-site matrix is spanned by (1, 1)") {
  const auto basis = rational_kernel_basis(mat(2, 2, {-1, 1, 1, -1}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0](0) == 1);
  CHECK(basis[0](1) == 1);
}

TEST_CASE("kernel of the identity is trivial") {
  CHECK(rational_kernel_basis(mat(2, 2, {1, 0, 0, 1})).empty());
}

TEST_CASE("kernel of the one-site matrix is spanned by the all-ones vector") {
  const RationalMatrix stoich = stoichiometric_matrix(fixtures::one_site());
  const auto basis = rational_kernel_basis(stoich);
  REQUIRE(basis.size() == 1);
  for (int j = 0; j < 4; ++j) CHECK(basis[0](j) == 1);
  CHECK(annihilates(stoich, basis[0]));
}

TEST_CASE("rank-nullity and annihilation on random rational matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-2, 2), den(1, 2), dim(1, 6);
  for (int round = 0; round < 60; ++round) {
    const int rows = dim(rng), cols = dim(rng);
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    const auto basis = rational_kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == cols - rational_rank(m));
    for (const auto& v : basis) CHECK(annihilates(m, v));
    if (!basis.empty()) {
      RationalMatrix stacked(cols, static_cast<int>(basis.size()));
      for (std::size_t k = 0; k < basis.size(); ++k)
        stacked.col(static_cast<Eigen::Index>(k)) = basis[k];
      CHECK(rational_rank(stacked) == static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("bounded maximization hits the upper bound") {
  LinearProgram lp;
  lp.equality_lhs = RationalMatrix(0, 1);
  lp.equality_rhs = RationalVector(0);
  lp.lower = {Rational(0)};
  lp.upper = {Rational(1)};
  lp.objective = RationalVector(1);
  lp.objective(0) = 1;
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Feasible);
  CHECK(r.point(0) == 1);
  CHECK(r.objective == 1);
}

TEST_CASE("contradictory inequalities are infeasible") {
  // x >= 1 together with -x >= 1, via a slack on the second
  LinearProgram lp;
  lp.equality_lhs = mat(1, 2, {-1, -1});  // -x - s = 1
  lp.equality_rhs = RationalVector(1);
  lp.equality_rhs(0) = 1;
  lp.lower = {Rational(1), Rational(0)};
  lp.upper = {std::nullopt, std::nullopt};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("an unconstrained maximization is unbounded") {
  LinearProgram lp;
  lp.equality_lhs = RationalMatrix(0, 1);
  lp.equality_rhs = RationalVector(0);
  lp.lower = {Rational(0)};
  lp.upper = {std::nullopt};
  lp.objective = RationalVector(1);
  lp.objective(0) = 1;
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("upper-bound-only variables work on both outcomes") {
  LinearProgram lp;
  lp.equality_lhs = RationalMatrix(0, 1);
  lp.equality_rhs = RationalVector(0);
  lp.lower = {std::nullopt};
  lp.upper = {Rational(5)};
  lp.objective = RationalVector(1);
  lp.objective(0) = 1;
  const LpResult up = solve_lp(lp);
  REQUIRE(up.status == LpStatus::Feasible);
  CHECK(up.objective == 5);
  lp.maximize = false;
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("crossed bounds are infeasible") {
  LinearProgram lp;
  lp.equality_lhs = RationalMatrix(0, 1);
  lp.equality_rhs = RationalVector(0);
  lp.lower = {Rational(2)};
  lp.upper = {Rational(1)};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("the classic degenerate cycling instance terminates at -1/20") {
  // min -3/4 x4 + 150 x5 - 1/50 x6 + 6 x7 over the standard cycling data
  LinearProgram lp;
  lp.equality_lhs = RationalMatrix::Zero(3, 7);
  lp.equality_rhs = RationalVector::Zero(3);
  lp.equality_lhs(0, 0) = 1;
  lp.equality_lhs(0, 3) = Rational(1, 4);
  lp.equality_lhs(0, 4) = -60;
  lp.equality_lhs(0, 5) = Rational(-1, 25);
  lp.equality_lhs(0, 6) = 9;
  lp.equality_lhs(1, 1) = 1;
  lp.equality_lhs(1, 3) = Rational(1, 2);
  lp.equality_lhs(1, 4) = -90;
  lp.equality_lhs(1, 5) = Rational(-1, 50);
  lp.equality_lhs(1, 6) = 3;
  lp.equality_lhs(2, 2) = 1;
  lp.equality_lhs(2, 5) = 1;
  lp.equality_rhs(2) = 1;
  lp.lower.assign(7, Rational(0));
  lp.upper.assign(7, std::nullopt);
  lp.objective = RationalVector::Zero(7);
  lp.objective(3) = Rational(-3, 4);
  lp.objective(4) = 150;
  lp.objective(5) = Rational(-1, 50);
  lp.objective(6) = 6;
  lp.maximize = false;
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::Feasible);
  CHECK(r.objective == Rational(-1, 20));
}

TEST_CASE("the one-site network is conservative") {
  const RationalMatrix stoich = stoichiometric_matrix(fixtures::one_site());
  const HypothesisResult g3 = check_conservative(stoich);
  REQUIRE(g3.holds);
  REQUIRE(g3.certificate.size() == 6);
  CHECK(annihilates(stoich.transpose(), g3.certificate));
  for (int i = 0; i < 6; ++i) CHECK(g3.certificate(i) >= 1);

  // the textbook certificate, verified by substitution
  RationalVector classic(6);
  classic << 1, 1, 2, 1, 1, 2;
  CHECK(annihilates(stoich.transpose(), classic));
}

TEST_CASE("conservation certificate of a single conversion") {
  const RationalMatrix stoich =
      stoichiometric_matrix(parse_network("A -> B"));
  const HypothesisResult g3 = check_conservative(stoich);
  REQUIRE(g3.holds);
  CHECK(g3.certificate(0) == g3.certificate(1));
  CHECK(g3.certificate(0) >= 1);
}

TEST_CASE("conservation constraints solved by hand re-check") {
  // c_A + c_B = c_C and c_C = 2 c_A force c_B = c_A > 0
  const RationalMatrix stoich =
      stoichiometric_matrix(parse_network("A + B -> C\nC -> 2 A"));
  const HypothesisResult g3 = check_conservative(stoich);
  REQUIRE(g3.holds);
  CHECK(g3.certificate(1) == g3.certificate(0));
  CHECK(g3.certificate(2) == 2 * g3.certificate(0));
}

TEST_CASE("a mass-creating loop is not conservative and carries a witness") {
  const RationalMatrix stoich =
      stoichiometric_matrix(parse_network("A -> 2 B\nB -> A"));
  const HypothesisResult g3 = check_conservative(stoich);
  CHECK_FALSE(g3.holds);
  REQUIRE(g3.certificate.size() == 2);
  const RationalVector produced = stoich * g3.certificate;
  bool some_positive = false;
  for (Eigen::Index i = 0; i < produced.size(); ++i) {
    CHECK(produced(i) >= 0);
    if (produced(i) > 0) some_positive = true;
  }
  CHECK(some_positive);
}

TEST_CASE("the one-site network is consistent") {
  const ReactionNetwork net = fixtures::one_site();
  const RationalMatrix stoich = stoichiometric_matrix(net);
  const HypothesisResult g4 = check_consistent(stoich, irreversible_of(net));
  REQUIRE(g4.holds);
  CHECK(annihilates(stoich, g4.certificate));
  CHECK(g4.certificate(1) >= 1);
  CHECK(g4.certificate(3) >= 1);
}

TEST_CASE("a single irreversible conversion is inconsistent") {
  const ReactionNetwork net = parse_network("A -> B");
  const RationalMatrix stoich = stoichiometric_matrix(net);
  const HypothesisResult g4 = check_consistent(stoich, {0});
  CHECK_FALSE(g4.holds);
  // witness: (N^T y) vanishes on reversible columns, is <= 0 on the
  // irreversible ones and negative somewhere
  REQUIRE(g4.certificate.size() == 2);
  const RationalVector u = stoich.transpose() * g4.certificate;
  CHECK(u(0) < 0);
}

TEST_CASE("the reduced pathway keeps the all-ones kernel vector") {
  const ReactionNetwork net = parse_network(fixtures::kRkipReduced);
  const RationalMatrix stoich = stoichiometric_matrix(net);
  RationalVector ones = RationalVector::Zero(4);
  for (int j = 0; j < 4; ++j) ones(j) = 1;
  CHECK(annihilates(stoich, ones));
  const HypothesisResult g4 = check_consistent(stoich, irreversible_of(net));
  REQUIRE(g4.holds);
  CHECK(annihilates(stoich, g4.certificate));
}

TEST_CASE("orthant classification: interior kernel vector") {
  const RationalMatrix stoich =
      stoichiometric_matrix(parse_network(fixtures::kOneSiteReduced));
  const KernelOrthantClass cls = classify_kernel_orthant(stoich, {1, 1});
  REQUIRE(cls.cls == OrthantClass::P2);
  CHECK(annihilates(stoich, cls.certificate));
  CHECK(cls.certificate(0) >= 1);
  CHECK(cls.certificate(1) >= 1);
  CHECK(cls.certificate(0) == cls.certificate(1));  // kernel is a line
}

TEST_CASE("orthant classification: trivial kernel") {
  const RationalMatrix stoich = stoichiometric_matrix(parse_network("A -> B"));
  CHECK(classify_kernel_orthant(stoich, {1}).cls == OrthantClass::P1);
}

TEST_CASE("orthant classification respects a signed pattern") {
  const RationalMatrix stoich = mat(2, 2, {-1, -1, 1, 1});
  const KernelOrthantClass cls = classify_kernel_orthant(stoich, {1, -1});
  REQUIRE(cls.cls == OrthantClass::P2);
  CHECK(annihilates(stoich, cls.certificate));
  CHECK(cls.certificate(0) >= 1);
  CHECK(-cls.certificate(1) >= 1);
}

TEST_CASE("orthant classification: boundary-only intersection") {
  const RationalMatrix stoich =
      stoichiometric_matrix(parse_network("A -> B\nB -> A\nC -> D"));
  const KernelOrthantClass cls =
      classify_kernel_orthant(stoich, {1, 1, 1});
  REQUIRE(cls.cls == OrthantClass::Neither);
  CHECK(annihilates(stoich, cls.certificate));
  bool nonzero = false;
  for (Eigen::Index j = 0; j < cls.certificate.size(); ++j) {
    CHECK(cls.certificate(j) >= 0);
    if (cls.certificate(j) != 0) nonzero = true;
  }
  CHECK(nonzero);
}

TEST_CASE("sign pattern length is checked") {
  const RationalMatrix stoich = mat(2, 2, {-1, 1, 1, -1});
  CHECK_THROWS_AS(classify_kernel_orthant(stoich, {1}),
                  std::invalid_argument);
}

TEST_CASE("minimal-support conservation vectors of the one-site network") {
  const RationalMatrix stoich = stoichiometric_matrix(fixtures::one_site());
  const auto vectors = minimal_support_conservation_vectors(stoich);
  REQUIRE(vectors.size() == 3);
  // species order: S0, E, S0E, S1, F, S1F
  RationalVector enzyme = RationalVector::Zero(6);
  enzyme(1) = enzyme(2) = 1;
  RationalVector phosphatase = RationalVector::Zero(6);
  phosphatase(4) = phosphatase(5) = 1;
  RationalVector substrate = RationalVector::Zero(6);
  substrate(0) = substrate(2) = substrate(3) = substrate(5) = 1;
  CHECK(vectors[0] == enzyme);
  CHECK(vectors[1] == phosphatase);
  CHECK(vectors[2] == substrate);
  for (const auto& v : vectors) CHECK(annihilates(stoich.transpose(), v));
}

TEST_CASE("minimal-support vectors: single conversion and empty cone") {
  const auto one = minimal_support_conservation_vectors(
      stoichiometric_matrix(parse_network("A -> B")));
  REQUIRE(one.size() == 1);
  CHECK(one[0](0) == 1);
  CHECK(one[0](1) == 1);

  const auto none = minimal_support_conservation_vectors(
      stoichiometric_matrix(parse_network("A -> 2 B\nB -> A")));
  CHECK(none.empty());
}

TEST_CASE("support enumeration refuses oversized inputs") {
  CHECK_THROWS_AS(
      minimal_support_conservation_vectors(RationalMatrix::Zero(13, 2)),
      std::invalid_argument);
}
