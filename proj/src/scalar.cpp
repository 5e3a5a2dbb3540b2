#include "symleib/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symleib {

std::string to_string(Regime r) { return r == Regime::exact ? "exact" : "float"; }

const Rational& Scalar::exact() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  throw std::logic_error("floating scalar used where an exact value is required");
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<Rational>(&v_)) return q->to_double();
  return std::get<double>(v_);
}

bool Scalar::is_zero(double eps) const {
  if (auto* q = std::get_if<Rational>(&v_)) return q->is_zero();
  return std::abs(std::get<double>(v_)) <= eps;
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<Rational>(&v_)) return q->str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(v_);
  return os.str();
}

#define SYMLEIB_SCALAR_BINOP(op)                                    \
  Scalar operator op(const Scalar& a, const Scalar& b) {            \
    const auto* qa = std::get_if<Rational>(&a.v_);                  \
    const auto* qb = std::get_if<Rational>(&b.v_);                  \
    if (qa && qb) return Scalar(*qa op * qb);                       \
    return Scalar(a.to_double() op b.to_double());                  \
  }

SYMLEIB_SCALAR_BINOP(+)
SYMLEIB_SCALAR_BINOP(-)
SYMLEIB_SCALAR_BINOP(*)
SYMLEIB_SCALAR_BINOP(/)

#undef SYMLEIB_SCALAR_BINOP

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Scalar(-*q);
  return Scalar(-std::get<double>(v_));
}

bool approx_equal(const Scalar& a, const Scalar& b, double eps) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return deviation(a, b) <= eps;
}

double deviation(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return (a.exact() - b.exact()).abs().to_double();
  double x = a.to_double(), y = b.to_double();
  if (!std::isfinite(x) || !std::isfinite(y)) return INFINITY;
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

Scalar exp(const Scalar& x) { return std::exp(x.to_double()); }
Scalar sin(const Scalar& x) { return std::sin(x.to_double()); }
Scalar cos(const Scalar& x) { return std::cos(x.to_double()); }
Scalar sinh(const Scalar& x) { return std::sinh(x.to_double()); }
Scalar cosh(const Scalar& x) { return std::cosh(x.to_double()); }

}  // namespace symleib
