#include "crn/rational.hpp"

#include <stdexcept>

namespace crn {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

RationalVector normalize_to_coprime_integers(const RationalVector& v) {
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den_lcm = lcm(den_lcm, denominator(v(i)));
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num_gcd = gcd(num_gcd, Integer(numerator(v(i)) * (den_lcm / denominator(v(i)))));
  if (num_gcd == 0) return v;  // zero vector
  Rational scale(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  RationalVector out = v * scale;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) != 0) {
      if (out(i) < 0) out = -out;
      break;
    }
  }
  return out;
}

std::vector<std::string> to_strings(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

}  // namespace crn
