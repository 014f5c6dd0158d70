#ifndef CRN_RATIONAL_HPP
#define CRN_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace crn {

// Exact arithmetic throughout; GMP keeps values in lowest terms automatically.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline int sign(const Rational& a) {
  if (a > 0) return 1;
  if (a < 0) return -1;
  return 0;
}

/// Renders "a" for integers and "a/b" otherwise.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational rational_from_string(const std::string& text);

/// Scales a nonzero rational vector to the unique coprime integer vector
/// with the same direction and a positive leading entry.
RationalVector normalize_to_coprime_integers(const RationalVector& v);

std::vector<std::string> to_strings(const RationalVector& v);

}  // namespace crn

#endif
