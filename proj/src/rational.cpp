#include "symleib/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace symleib {

namespace {

using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so that negation never overflows.
bool fits(i128 v) { return v > kMin && v <= kMax; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

mpz_class mpz_from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == kMin) *this = from_mpq(mpq_class(mpz_from(n)));
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (n == kMin || d == kMin) {
    mpq_class q(mpz_from(n), mpz_from(d));
    q.canonicalize();
    *this = from_mpq(std::move(q));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = gcd64(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    long nn = n.get_si();
    long dd = d.get_si();
    if (nn != kMin) {
      r.num_ = nn;
      r.den_ = dd;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from(num_), mpz_from(den_));
}

Rational Rational::parse(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto bad = [&] { return std::invalid_argument("not a rational literal: '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);

  auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits_ok(num, true)) throw bad();
  if (slash != std::string_view::npos && !digits_ok(den, false)) throw bad();

  std::string ns(num);
  if (ns.front() == '+') ns.erase(0, 1);
  mpz_class n(ns, 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(std::move(q));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (big_) return from_mpq(1 / *big_);
  return Rational(den_, num_);
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpq_class q = to_mpq();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return from_mpq(mpq_class(rn, rd));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Rational(static_cast<long long>(s));
    } else {
      std::int64_t g = std::gcd(a.den_, b.den_);
      i128 t = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
      if (t == 0) return Rational();
      std::int64_t g2 = g == 1 ? 1 : gcd64(static_cast<std::int64_t>(t % g), g);
      i128 n = t / g2;
      i128 d = static_cast<i128>(a.den_ / g) * (b.den_ / g2);
      if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
      }
    }
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical forms: a big value never equals a small one.
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational pow(const Rational& base, int exponent) {
  Rational r(1);
  Rational b = exponent < 0 ? base.inverse() : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) r *= b;
  return r;
}

}  // namespace symleib
