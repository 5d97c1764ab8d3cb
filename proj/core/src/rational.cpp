#include "intertwine/rational.hpp"

#include <cctype>

#include "intertwine/error.hpp"

namespace intertwine {

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw DomainError("empty rational literal");
  if (body.front() == '+') body.erase(body.begin());

  std::size_t slash = body.find('/');
  auto digits_only = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string numerator = body.substr(0, slash);
  std::string denominator = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!digits_only(numerator, true) || !digits_only(denominator, false)) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer den(denominator, 10);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational value(Integer(numerator, 10), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Rational floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational fractional_part(const Rational& value) {
  Rational result = value - floor(value);
  return result;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

}  // namespace intertwine
