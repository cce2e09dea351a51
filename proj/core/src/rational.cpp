#include "saxl/rational.hpp"

namespace saxl {

std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

}  // namespace saxl
