#include "cyclix/scalar_domain.hpp"

#include "cyclix/error.hpp"

namespace cyclix {
namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + p : t;
}

std::int64_t residue(const mpz_class& z, std::int64_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DomainNotField: return "DomainNotField";
    case Errc::NotPrime: return "NotPrime";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ObjectMismatch: return "ObjectMismatch";
    case Errc::NonComposableWord: return "NonComposableWord";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::CyclicModeOnNonCyclic: return "CyclicModeOnNonCyclic";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::RangeExceedsComplex: return "RangeExceedsComplex";
    case Errc::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case Errc::SignCheckFailed: return "SignCheckFailed";
    case Errc::NotAChainMap: return "NotAChainMap";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoUnit: return "NoUnit";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MatrixMismatch: return "MatrixMismatch";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::PositiveCharacteristic: return "PositiveCharacteristic";
    case Errc::RelationFailure: return "RelationFailure";
    case Errc::NoUnitStructure: return "NoUnitStructure";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

ScalarDomain ScalarDomain::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return ScalarDomain(Kind::PrimeField, p);
}

ScalarDomain ScalarDomain::parse(std::string_view text) {
  if (text == "q") return rationals();
  if (text == "z") return integers();
  if (text.substr(0, 3) == "zp:") {
    const std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
      throw Error(Errc::InvalidInput, "bad prime in domain '" + std::string(text) + "'");
    }
    return prime_field(std::stoll(digits));
  }
  throw Error(Errc::InvalidInput, "unknown domain '" + std::string(text) + "' (expected q, zp:<p> or z)");
}

Rational ScalarDomain::reduce(const Rational& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (!value.is_integer()) throw Error(Errc::DomainNotField, "non-integer " + value.str() + " over Z");
      return value;
    case Kind::PrimeField: {
      if (auto small = value.to_int64()) {
        std::int64_t r = *small % p_;
        return Rational(r < 0 ? r + p_ : r);
      }
      const std::int64_t den = residue(value.denominator(), p_);
      if (den == 0) throw Error(Errc::DomainNotField, value.str() + " has denominator divisible by p");
      const std::int64_t num = residue(value.numerator(), p_);
      if (den == 1) return Rational(num);
      return Rational(static_cast<std::int64_t>((static_cast<wide_int>(num) * mod_inverse(den, p_)) % p_));
    }
  }
  return value;
}

Rational ScalarDomain::inverse(const Rational& a) const {
  if (a.is_zero()) throw Error(Errc::DomainNotField, "inverse of zero");
  switch (kind_) {
    case Kind::Rationals:
      return Rational(1) / a;
    case Kind::Integers:
      if (a == Rational(1) || a == Rational(-1)) return a;
      throw Error(Errc::DomainNotField, a.str() + " is not a unit in Z");
    case Kind::PrimeField:
      return Rational(mod_inverse(reduce(a).to_int64().value(), p_));
  }
  return a;
}

std::string ScalarDomain::name() const {
  switch (kind_) {
    case Kind::Rationals: return "q";
    case Kind::Integers: return "z";
    case Kind::PrimeField: return "zp:" + std::to_string(p_);
  }
  return "?";
}

}  // namespace cyclix
