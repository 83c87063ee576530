#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cyclix/rational.hpp"

namespace cyclix {

/// Ground ring for every linear object: the rationals, a prime field, or the
/// integers (the latter only for Smith-normal-form based computations).
class ScalarDomain {
 public:
  enum class Kind { Rationals, PrimeField, Integers };

  static ScalarDomain rationals() { return ScalarDomain(Kind::Rationals, 0); }
  /// Throws NotPrime unless p is a prime below 2^31.
  static ScalarDomain prime_field(std::int64_t p);
  static ScalarDomain integers() { return ScalarDomain(Kind::Integers, 0); }
  /// Accepts "q", "zp:<p>" and "z".
  static ScalarDomain parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }
  /// 0 for the rationals and the integers.
  std::int64_t characteristic() const noexcept { return p_; }

  /// Canonical representative: identity over Q and Z, residue in [0, p) over F_p.
  /// Throws DomainNotField if a non-integer is reduced over Z, or if the
  /// denominator is divisible by p.
  Rational reduce(const Rational& value) const;
  Rational add(const Rational& a, const Rational& b) const { return fast(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return fast(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return fast(a * b); }
  Rational neg(const Rational& a) const { return fast(-a); }
  /// Multiplicative inverse; throws DomainNotField over Z for non-units.
  Rational inverse(const Rational& a) const;

  /// "q", "zp:<p>" or "z".
  std::string name() const;

  friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const ScalarDomain& a, const ScalarDomain& b) { return !(a == b); }

 private:
  ScalarDomain(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Rational fast(Rational value) const {
    if (kind_ != Kind::PrimeField) return value;
    return reduce(value);
  }

  Kind kind_;
  std::int64_t p_;
};

}  // namespace cyclix
