#include "casimir/rational.hpp"

#include <cctype>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw ParseError("", "invalid rational '" + text + "' (expected \"p\" or \"p/q\")");
  };

  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  const std::size_t slash = text.find('/');

  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) return fail();
    Integer num(text, 10);
    return Rational(num);
  }

  if (!all_digits(text, start, slash)) return fail();
  if (!all_digits(text, slash + 1, text.size())) return fail();
  Integer num(text.substr(0, slash), 10);
  Integer den(text.substr(slash + 1), 10);
  if (sgn(den) == 0) throw ParseError("", "zero denominator in rational '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow_rational(const Rational& value, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num().get_mpz_t(), value.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(result.get_den().get_mpz_t(), value.get_den().get_mpz_t(), exponent);
  return result;  // canonical: gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

}  // namespace casimir
