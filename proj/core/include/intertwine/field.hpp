#pragma once

#include <string>
#include <string_view>

#include "intertwine/rational.hpp"

namespace intertwine {

/// Coefficient field: the rationals or a prime field Z/p.
///
/// Prime-field elements are carried as Rationals with integer value in [0, p),
/// so linear algebra is written once against this interface. Real coefficients
/// are served by the rationals: for finite complexes H*(X;R) = H*(X;Q) (x) R.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws DomainError unless p is prime.
  static FieldSpec prime(unsigned long p);
  /// Accepts "q", "Q", "rationals", "r", "R" (served by Q), "z2", "Z/2", "zp:5", "f5", ...
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// 0 for the rationals.
  unsigned long characteristic() const { return p_; }
  bool is_characteristic_zero() const { return kind_ == Kind::rationals; }

  /// Image of a rational in this field. Throws DomainError when the
  /// denominator is divisible by p.
  Rational reduce(const Rational& value) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws DomainError on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// "Q" or "Z/p".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  FieldSpec(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

}  // namespace intertwine
