#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symleib {

// Exact rational. Values whose numerator and denominator fit in int64 are kept
// inline; anything larger spills into a shared, immutable mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "p/q", with optional sign; throws std::invalid_argument.
  static Rational parse(std::string_view s);

  std::string str() const;
  mpq_class to_mpq() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  // Square root when it is rational.
  std::optional<Rational> exact_sqrt() const;

  bool is_small() const { return !big_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational pow(const Rational& base, int exponent);

}  // namespace symleib
