#pragma once

#include <string>
#include <variant>

#include "symleib/rational.hpp"

namespace symleib {

enum class Regime { exact, floating };

inline constexpr double kDefaultEpsNum = 1e-9;
inline constexpr double kDefaultEpsFd = 1e-5;

std::string to_string(Regime r);

// A number in one of two regimes. Mixed arithmetic promotes to floating;
// transcendental functions always produce floating values.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : v_(Rational(n)) {}        // NOLINT(google-explicit-constructor)
  Scalar(double d) : v_(d) {}               // NOLINT(google-explicit-constructor)

  Regime regime() const { return v_.index() == 0 ? Regime::exact : Regime::floating; }
  bool is_exact() const { return v_.index() == 0; }

  // Throws std::logic_error for floating values.
  const Rational& exact() const;
  double to_double() const;
  Scalar to_floating() const { return Scalar(to_double()); }

  // Exact zero test in the exact regime, |x| <= eps otherwise.
  bool is_zero(double eps = kDefaultEpsNum) const;
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Structural equality: same regime and same value. Use approx_equal for numerics.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rational, double> v_;
};

// Exact comparison when both sides are exact; otherwise
// |a - b| <= eps * max(1, |a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, double eps = kDefaultEpsNum);
// Scaled deviation matching approx_equal (0 for equal exact values).
double deviation(const Scalar& a, const Scalar& b);

Scalar exp(const Scalar& x);
Scalar sin(const Scalar& x);
Scalar cos(const Scalar& x);
Scalar sinh(const Scalar& x);
Scalar cosh(const Scalar& x);

}  // namespace symleib
