#include "fixnum/rational.hpp"

#include <stdexcept>

namespace fixnum {

std::string rational_to_string(const Rational& r) {
  // mpq_rational is kept canonical (gcd 1, positive denominator), and its
  // str() already emits "p" or "p/q" accordingly.
  return r.str();
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

} // namespace fixnum
