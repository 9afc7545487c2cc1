#include "lrb/rational.hpp"

#include "lrb/errors.hpp"

namespace lrb {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + text);
  }
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

std::string to_string(const BigInt& value) {
  return value.get_str();
}

BigInt denominator_lcm(const std::vector<std::vector<Rational>>& rows) {
  BigInt l = 1;
  for (const auto& row : rows)
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace lrb
