#include "intertwine/field.hpp"

#include <algorithm>
#include <cctype>

#include "intertwine/error.hpp"

namespace intertwine {
namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer mod(const Integer& a, unsigned long p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned long p) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (s == "q" || s == "rationals" || s == "r" || s == "reals" || s == "0") return rationals();
  std::string digits;
  for (const char* prefix : {"z/", "zp:", "z", "f", "gf", "p="}) {
    std::string_view pre(prefix);
    if (s.size() > pre.size() && s.compare(0, pre.size(), pre) == 0) {
      digits = s.substr(pre.size());
      break;
    }
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw DomainError("unknown field '" + std::string(text) + "' (expected Q or Z/p)");
  }
  return prime(std::stoul(digits));
}

Rational FieldSpec::reduce(const Rational& value) const {
  if (kind_ == Kind::rationals) return value;
  Integer num = mod(value.get_num(), p_);
  Integer den = mod(value.get_den(), p_);
  if (den == 0) throw DomainError("denominator vanishes in " + name());
  Integer inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), Integer(p_).get_mpz_t());
  Integer prod = num * inv_den;
  return Rational(mod(prod, p_));
}

Rational FieldSpec::add(const Rational& a, const Rational& b) const {
  Rational r = a + b;
  return kind_ == Kind::rationals ? r : reduce(r);
}

Rational FieldSpec::sub(const Rational& a, const Rational& b) const {
  Rational r = a - b;
  return kind_ == Kind::rationals ? r : reduce(r);
}

Rational FieldSpec::mul(const Rational& a, const Rational& b) const {
  Rational r = a * b;
  return kind_ == Kind::rationals ? r : reduce(r);
}

Rational FieldSpec::neg(const Rational& a) const {
  Rational r = -a;
  return kind_ == Kind::rationals ? r : reduce(r);
}

Rational FieldSpec::inv(const Rational& a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  Rational r = 1 / a;
  return kind_ == Kind::rationals ? r : reduce(r);
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::rationals) return "Q";
  return "Z/" + std::to_string(p_);
}

}  // namespace intertwine
