#include "symleib/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace symleib {

RowReduction<Rational> row_reduce(const QMatrix& m) {
  RowReduction<Rational> out{m, 0, {}};
  QMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

RowReduction<Scalar> row_reduce(const Matrix& m) {
  auto q = row_reduce(to_exact(m));
  return {to_scalar(q.reduced), q.rank, q.pivots};
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  std::vector<Vector> out;
  for (auto& v : kernel_basis(to_exact(m))) out.push_back(to_scalar(v));
  return out;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto rr = row_reduce(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  bool exact = true;
  for (std::size_t i = 0; i < m.rows() && exact; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_exact()) {
        exact = false;
        break;
      }
  if (exact) return to_scalar(inverse(to_exact(m)));

  std::size_t n = m.rows();
  std::vector<double> a(n * 2 * n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).to_double();
    at(i, n + i) = 1.0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(at(i, c)) > std::abs(at(p, c))) p = i;
    if (at(p, c) == 0.0) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    double piv = at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = at(i, n + j);
  return inv;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  QMatrix a = m;
  std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix to_exact(const Matrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_exact()) throw std::invalid_argument("exact-regime operation given a floating matrix");
      q(i, j) = m(i, j).exact();
    }
  return q;
}

Matrix to_scalar(const QMatrix& m) {
  Matrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = m(i, j);
  return s;
}

QVector to_exact(const Vector& v) {
  QVector q;
  q.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_exact()) throw std::invalid_argument("exact-regime operation given a floating vector");
    q.push_back(x.exact());
  }
  return q;
}

Vector to_scalar(const QVector& v) { return Vector(v.begin(), v.end()); }

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

double max_deviation(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, deviation(a[i], b[i]));
  return d;
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, deviation(a(i, j), b(i, j)));
  return d;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

}  // namespace symleib
