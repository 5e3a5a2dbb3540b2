#include "symleib/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace symleib {

namespace {

void check_dim(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("algebra dimension must be in 1..8, got " + std::to_string(n));
}

void check_len(const QVector& v, int n) {
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(n));
}

QVector add(QVector a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVector sub(QVector a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

QVector scale(QVector a, const Rational& s) {
  for (auto& x : a) x *= s;
  return a;
}

}  // namespace

// ---- StructureTable -------------------------------------------------------

StructureTable::StructureTable(int dim) : n_(dim) {
  check_dim(dim);
  c_.assign(static_cast<std::size_t>(n_ * n_ * n_), Rational(0));
}

std::size_t StructureTable::index(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
    throw std::out_of_range("structure constant index out of range");
  return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * n_ + (k - 1));
}

QVector StructureTable::basis_product(int i, int j) const {
  QVector v(n_);
  for (int k = 1; k <= n_; ++k) v[k - 1] = at(i, j, k);
  return v;
}

void StructureTable::set_product(int i, int j, const QVector& v) {
  check_len(v, n_);
  for (int k = 1; k <= n_; ++k) set(i, j, k, v[k - 1]);
}

// ---- LieTable -------------------------------------------------------------

LieTable LieTable::from_table(const StructureTable& t) {
  int n = t.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (t.at(i, j, k) != -t.at(j, i, k))
          throw std::invalid_argument("table is not antisymmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
  LieTable l(n);
  l.t_ = t;
  return l;
}

void LieTable::set_bracket(int i, int j, const QVector& v) {
  if (i == j && !is_zero(v)) throw std::invalid_argument("[e_i,e_i] must vanish");
  t_.set_product(i, j, v);
  QVector neg(v);
  for (auto& x : neg) x = -x;
  if (i != j) t_.set_product(j, i, neg);
}

QVector LieTable::bracket(const QVector& u, const QVector& v) const { return product(t_, u, v); }

// ---- OmegaForm ------------------------------------------------------------

OmegaForm::OmegaForm(int dim) : n_(dim) {
  check_dim(dim);
  w_.assign(static_cast<std::size_t>(n_ * (n_ + 1) / 2), QVector(n_, Rational(0)));
}

std::size_t OmegaForm::slot(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("omega index out of range");
  if (i > j) std::swap(i, j);
  // row-major upper triangle
  int before = (i - 1) * n_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(before + (j - i));
}

void OmegaForm::set(int i, int j, QVector v) {
  check_len(v, n_);
  w_[slot(i, j)] = std::move(v);
}

QVector OmegaForm::eval(const QVector& u, const QVector& v) const {
  check_len(u, n_);
  check_len(v, n_);
  QVector out(n_, Rational(0));
  for (int i = 1; i <= n_; ++i) {
    if (u[i - 1].is_zero()) continue;
    for (int j = 1; j <= n_; ++j) {
      if (v[j - 1].is_zero()) continue;
      Rational s = u[i - 1] * v[j - 1];
      const QVector& w = at(i, j);
      for (int k = 0; k < n_; ++k)
        if (!w[k].is_zero()) out[k] += s * w[k];
    }
  }
  return out;
}

bool OmegaForm::is_zero() const {
  return std::all_of(w_.begin(), w_.end(), [](const QVector& v) { return symleib::is_zero(v); });
}

OmegaForm OmegaForm::operator+(const OmegaForm& o) const {
  if (o.n_ != n_) throw std::invalid_argument("omega dimension mismatch");
  OmegaForm r(*this);
  for (std::size_t s = 0; s < w_.size(); ++s) r.w_[s] = add(r.w_[s], o.w_[s]);
  return r;
}

OmegaForm OmegaForm::scaled(const Rational& s) const {
  OmegaForm r(*this);
  for (auto& v : r.w_) v = scale(v, s);
  return r;
}

// ---- SubspaceBasis --------------------------------------------------------

SubspaceBasis SubspaceBasis::span(int dim, const std::vector<QVector>& generators) {
  SubspaceBasis b;
  b.n_ = dim;
  if (generators.empty()) return b;
  for (const auto& g : generators) check_len(g, dim);
  auto rr = row_reduce(QMatrix::from_rows(generators, static_cast<std::size_t>(dim)));
  for (std::size_t r = 0; r < rr.rank; ++r) {
    b.rows_.push_back(rr.reduced.row(r));
    b.pivots_.push_back(static_cast<int>(rr.pivots[r]));
  }
  return b;
}

std::vector<int> SubspaceBasis::complement() const {
  std::vector<int> c;
  for (int i = 0; i < n_; ++i)
    if (std::find(pivots_.begin(), pivots_.end(), i) == pivots_.end()) c.push_back(i);
  return c;
}

QVector SubspaceBasis::reduce(const QVector& v) const {
  check_len(v, n_);
  QVector r(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (int j = 0; j < n_; ++j) r[j] -= f * rows_[k][j];
  }
  return r;
}

// ---- AutoMatrix -----------------------------------------------------------

AutoMatrix AutoMatrix::verify(const LieTable& lie, const QMatrix& a) {
  int n = lie.dim();
  if (static_cast<int>(a.rows()) != n || static_cast<int>(a.cols()) != n)
    throw std::invalid_argument("automorphism matrix has the wrong shape");
  if (determinant(a).is_zero()) throw std::invalid_argument("automorphism matrix is singular");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      QVector lhs = a * lie.table().basis_product(i, j);
      QVector rhs = lie.bracket(a.col(i - 1), a.col(j - 1));
      if (lhs != rhs)
        throw std::invalid_argument("matrix does not preserve the bracket on (e" + std::to_string(i) + ",e" +
                                    std::to_string(j) + ")");
    }
  return AutoMatrix(lie, a, symleib::inverse(a));
}

// ---- operations -----------------------------------------------------------

QVector basis_vector(int dim, int i) {
  QVector v(dim, Rational(0));
  v.at(i - 1) = 1;
  return v;
}

QVector product(const StructureTable& t, const QVector& u, const QVector& v) {
  int n = t.dim();
  check_len(u, n);
  check_len(v, n);
  QVector out(n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    if (u[i - 1].is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      if (v[j - 1].is_zero()) continue;
      Rational s = u[i - 1] * v[j - 1];
      for (int k = 1; k <= n; ++k) {
        const Rational& c = t.at(i, j, k);
        if (!c.is_zero()) out[k - 1] += s * c;
      }
    }
  }
  return out;
}

QMatrix translation_matrix(const StructureTable& t, const QVector& u, Side side) {
  int n = t.dim();
  check_len(u, n);
  QMatrix m(n, n);
  for (int j = 1; j <= n; ++j) {
    QVector e = basis_vector(n, j);
    QVector col = side == Side::left ? product(t, u, e) : product(t, e, u);
    for (int i = 0; i < n; ++i) m(i, j - 1) = col[i];
  }
  return m;
}

IdentityReport is_left_leibniz(const StructureTable& t) {
  int n = t.dim();
  IdentityReport r;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        QVector u = basis_vector(n, a), v = basis_vector(n, b), w = basis_vector(n, c);
        QVector lhs = product(t, u, product(t, v, w));
        QVector rhs = add(product(t, product(t, u, v), w), product(t, v, product(t, u, w)));
        if (lhs != rhs) r.violations.push_back({a, b, c});
      }
  r.holds = r.violations.empty();
  return r;
}

IdentityReport is_right_leibniz(const StructureTable& t) {
  int n = t.dim();
  IdentityReport r;
  // triple reported as (u, v, w) in (v.w).u = (v.u).w + v.(w.u)
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        QVector u = basis_vector(n, a), v = basis_vector(n, b), w = basis_vector(n, c);
        QVector lhs = product(t, product(t, v, w), u);
        QVector rhs = add(product(t, product(t, v, u), w), product(t, v, product(t, w, u)));
        if (lhs != rhs) r.violations.push_back({a, b, c});
      }
  r.holds = r.violations.empty();
  return r;
}

Decomposition split(const StructureTable& t) {
  int n = t.dim();
  LieTable lie(n);
  OmegaForm omega(n);
  StructureTable anti(n);
  const Rational half(1, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      QVector a = t.basis_product(i, j), b = t.basis_product(j, i);
      anti.set_product(i, j, scale(sub(a, b), half));
      if (i <= j) omega.set(i, j, scale(add(a, b), half));
    }
  return {LieTable::from_table(anti), std::move(omega)};
}

StructureTable combine(const LieTable& lie, const OmegaForm& omega) {
  int n = lie.dim();
  if (omega.dim() != n) throw std::invalid_argument("lie/omega dimension mismatch");
  StructureTable t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t.set_product(i, j, add(lie.table().basis_product(i, j), omega.at(i, j)));
  return t;
}

StructureTable compose(const LieTable& lie, const OmegaForm& omega) {
  auto rep = check_prop31(lie, omega);
  if (!rep.holds)
    throw std::invalid_argument(std::string("lie/omega pair fails admissibility condition (") + rep.condition + ")");
  return combine(lie, omega);
}

IdentityReport is_lie(const LieTable& lie) {
  int n = lie.dim();
  IdentityReport r;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        QVector u = basis_vector(n, a), v = basis_vector(n, b), w = basis_vector(n, c);
        QVector s = add(add(lie.bracket(u, lie.bracket(v, w)), lie.bracket(v, lie.bracket(w, u))),
                        lie.bracket(w, lie.bracket(u, v)));
        if (!is_zero(s)) r.violations.push_back({a, b, c});
      }
  r.holds = r.violations.empty();
  return r;
}

IdentityReport is_lie(const StructureTable& t) { return is_lie(LieTable::from_table(t)); }

SubspaceBasis center(const LieTable& lie) {
  int n = lie.dim();
  // Row (i, m) of the stacked system: sum_j u_j c[j][i][m] = 0.
  QMatrix stacked(static_cast<std::size_t>(n * n), n);
  for (int i = 1; i <= n; ++i)
    for (int m = 1; m <= n; ++m)
      for (int j = 1; j <= n; ++j) stacked((i - 1) * n + (m - 1), j - 1) = lie.table().at(j, i, m);
  return SubspaceBasis::span(n, kernel_basis(stacked));
}

SubspaceBasis derived_space(const StructureTable& t) {
  int n = t.dim();
  std::vector<QVector> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      QVector p = t.basis_product(i, j);
      if (!is_zero(p)) gens.push_back(std::move(p));
    }
  return SubspaceBasis::span(n, gens);
}

Prop31Report check_prop31(const LieTable& lie, const OmegaForm& omega) {
  int n = lie.dim();
  if (omega.dim() != n) throw std::invalid_argument("lie/omega dimension mismatch");
  Prop31Report r;

  auto jac = is_lie(lie);
  r.jacobi = jac.holds;
  r.jacobi_violations = jac.violations;

  SubspaceBasis z = center(lie);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (!z.contains(omega.at(i, j))) r.noncentral_pairs.push_back({i, j});
  r.central_values = r.noncentral_pairs.empty();

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      QVector br = lie.table().basis_product(i, j);
      const QVector& om = omega.at(i, j);
      for (int k = 1; k <= n; ++k) {
        QVector e = basis_vector(n, k);
        if (!is_zero(omega.eval(br, e)) || !is_zero(omega.eval(om, e))) r.vanishing_violations.push_back({i, j, k});
      }
    }
  r.vanishing = r.vanishing_violations.empty();

  r.holds = r.jacobi && r.central_values && r.vanishing;
  r.condition = !r.jacobi ? 'a' : !r.central_values ? 'b' : !r.vanishing ? 'c' : 0;
  return r;
}

OmegaForm pullback_omega(const OmegaForm& omega, const AutoMatrix& a) {
  int n = omega.dim();
  if (a.lie().dim() != n) throw std::invalid_argument("automorphism dimension mismatch");
  OmegaForm mu(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      mu.set(i, j, a.inverse() * omega.eval(a.matrix().col(i - 1), a.matrix().col(j - 1)));
  return mu;
}

OmegaForm pullback_omega(const OmegaForm& omega, const LieTable& lie, const QMatrix& a) {
  return pullback_omega(omega, AutoMatrix::verify(lie, a));
}

OmegaFamily omega_parameter_space(const LieTable& lie) {
  int n = lie.dim();
  const StructureTable& c = lie.table();
  int pairs = n * (n + 1) / 2;
  auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
  };
  // unknown w[(i,j)][k]
  auto var = [&](int i, int j, int k) { return pair_index(i, j) * n + (k - 1); };
  std::size_t unknowns = static_cast<std::size_t>(pairs * n);

  std::vector<QVector> rows;
  auto new_row = [&] { return QVector(unknowns, Rational(0)); };

  // values central: [w(i,j), e_l]_m = sum_k w[(i,j)][k] c[k][l][m] = 0
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          QVector r = new_row();
          bool any = false;
          for (int k = 1; k <= n; ++k)
            if (!c.at(k, l, m).is_zero()) {
              r[var(i, j, k)] += c.at(k, l, m);
              any = true;
            }
          if (any) rows.push_back(std::move(r));
        }
  // w([e_a,e_b], e_d)_m = sum_k c[a][b][k] w[(k,d)][m] = 0
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int d = 1; d <= n; ++d)
        for (int m = 1; m <= n; ++m) {
          QVector r = new_row();
          bool any = false;
          for (int k = 1; k <= n; ++k)
            if (!c.at(a, b, k).is_zero()) {
              r[var(k, d, m)] += c.at(a, b, k);
              any = true;
            }
          if (any && !is_zero(r)) rows.push_back(std::move(r));
        }

  std::vector<QVector> kernel;
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) {
      QVector v(unknowns, Rational(0));
      v[u] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = kernel_basis(QMatrix::from_rows(rows, unknowns));
  }

  OmegaFamily fam;
  for (const auto& v : kernel) {
    OmegaForm w(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        QVector val(n);
        for (int k = 1; k <= n; ++k) val[k - 1] = v[var(i, j, k)];
        w.set(i, j, val);
      }
    fam.basis.push_back(std::move(w));
  }

  // w(w(u,v),x) = 0 identically on the span iff the symmetrized bilinear
  // expression vanishes for every pair of basis forms.
  for (std::size_t p = 0; p < fam.basis.size() && fam.quadratic_ok; ++p)
    for (std::size_t q = p; q < fam.basis.size() && fam.quadratic_ok; ++q)
      for (int i = 1; i <= n && fam.quadratic_ok; ++i)
        for (int j = i; j <= n && fam.quadratic_ok; ++j)
          for (int k = 1; k <= n; ++k) {
            QVector e = basis_vector(n, k);
            QVector s = add(fam.basis[p].eval(fam.basis[q].at(i, j), e), fam.basis[q].eval(fam.basis[p].at(i, j), e));
            if (!is_zero(s)) {
              fam.quadratic_ok = false;
              break;
            }
          }
  return fam;
}

std::string format_combination(const QVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Rational& c = v[k];
    if (c.is_zero()) continue;
    std::string term = "e" + std::to_string(k + 1);
    Rational mag = c.abs();
    std::string coef = mag == Rational(1) ? "" : mag.str();
    if (s.empty())
      s = (c.sign() < 0 ? "-" : "") + coef + term;
    else
      s += (c.sign() < 0 ? " - " : " + ") + coef + term;
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> describe(const StructureTable& t) {
  std::vector<std::string> out;
  for (int i = 1; i <= t.dim(); ++i)
    for (int j = 1; j <= t.dim(); ++j) {
      QVector p = t.basis_product(i, j);
      if (!is_zero(p))
        out.push_back("e" + std::to_string(i) + ".e" + std::to_string(j) + " = " + format_combination(p));
    }
  return out;
}

std::vector<std::string> describe(const OmegaForm& w) {
  std::vector<std::string> out;
  for (int i = 1; i <= w.dim(); ++i)
    for (int j = i; j <= w.dim(); ++j)
      if (!is_zero(w.at(i, j)))
        out.push_back("w(e" + std::to_string(i) + ",e" + std::to_string(j) + ") = " + format_combination(w.at(i, j)));
  return out;
}

}  // namespace symleib
