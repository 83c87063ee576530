#include "cyclix/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cyclix {
namespace {

using u128 = wide_uint;
using i128 = wide_int;

constexpr i128 kMaxInline = static_cast<i128>(INT64_MAX);

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  if (neg) out = -out;
  return out;
}

bool fits_inline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != mpz_class(LONG_MIN);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  set_from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const mpz_class& value) { assign_big(mpq_class(value)); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text, 10)));
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den(text.substr(slash + 1), 10);
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  if (fits_inline(value.get_num()) && fits_inline(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Rational::set_from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const u128 mag = num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num);
  const u128 g = gcd_u128(mag, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kMaxInline && num >= -kMaxInline && den <= kMaxInline) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t sum = 0;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != INT64_MIN) {
        num_ = sum;
        return *this;
      }
    }
    set_from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t diff = 0;
      if (!__builtin_sub_overflow(num_, rhs.num_, &diff) && diff != INT64_MIN) {
        num_ = diff;
        return *this;
      }
    }
    set_from_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t prod = 0;
      if (!__builtin_mul_overflow(num_, rhs.num_, &prod) && prod != INT64_MIN) {
        num_ = prod;
        return *this;
      }
    }
    set_from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !rhs.big_) {
    set_from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in storage class only when values differ
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace cyclix
