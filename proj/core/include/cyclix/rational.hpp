#pragma once

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cyclix {

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

/// Exact rational number. Values whose reduced numerator and denominator fit
/// in int64 are stored inline; anything larger spills to a GMP mpq.
///
/// Invariant: the value is always in lowest terms with a positive
/// denominator, and big_ is non-null iff the inline form would overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) {  // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) {
      set_from_wide(value, 1);
    } else {
      num_ = value;
    }
  }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "a", "-a" or "a/b" in base 10.
  static Rational parse(const std::string& text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  /// Inline numerator; only meaningful when is_small() and is_integer().
  std::optional<std::int64_t> to_int64() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  void assign_big(mpq_class value);
  void set_from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace cyclix
