#include "symleib/tangent.hpp"

#include <cmath>
#include <stdexcept>

namespace symleib {

using nlohmann::json;

TangentTable::TangentTable(int dim, std::string subject, std::string method)
    : n_(dim), c_(static_cast<std::size_t>(dim * dim * dim), Scalar(0)), subject_(std::move(subject)),
      method_(std::move(method)) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

std::size_t TangentTable::index(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) throw std::out_of_range("table index out of range");
  return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * n_ + (k - 1));
}

Vector TangentTable::product(const Vector& u, const Vector& v) const {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("vector length mismatch");
  Vector out(n_, Scalar(0));
  for (int i = 0; i < n_; ++i) {
    if (u[i].is_zero(0.0)) continue;
    for (int j = 0; j < n_; ++j) {
      if (v[j].is_zero(0.0)) continue;
      Scalar s = u[i] * v[j];
      for (int k = 0; k < n_; ++k) out[k] += s * at(i + 1, j + 1, k + 1);
    }
  }
  return out;
}

bool TangentTable::finite() const {
  for (const auto& c : c_)
    if (!std::isfinite(c.to_double())) return false;
  return true;
}

TangentTable leibniz_from_rack(const RackStructure& r, double h_step) {
  const GroupSpec& G = r.group();
  int n = G.dim();
  bool exact = G.regime() == Regime::exact;
  const QMatrix& B = G.basis_identification();
  Matrix Binv = to_scalar(G.basis_identification_inverse());
  TangentTable t(n, r.label(), exact ? "7-point tensor stencil, step 1" : "4-point cross stencil, h=" + Scalar(h_step).str());

  // s * B e_i in coordinates
  auto curve = [&](int i, const Scalar& s) {
    Vector v(n, Scalar(0));
    for (int row = 0; row < n; ++row)
      if (!B(row, i).is_zero()) v[row] = s * Scalar(B(row, i));
    return v;
  };

  static const int kW[7] = {-1, 9, -45, 0, 45, -9, 1};  // /60, nodes -3..3
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector d(n, Scalar(0));
      if (exact) {
        for (int a = 0; a < 7; ++a) {
          if (kW[a] == 0) continue;
          Vector h = curve(i, Scalar(a - 3));
          for (int b = 0; b < 7; ++b) {
            if (kW[b] == 0) continue;
            Vector f = r.op(h, curve(j, Scalar(b - 3)));
            Scalar w(kW[a] * kW[b]);
            for (int k = 0; k < n; ++k) d[k] += w * f[k];
          }
        }
        for (auto& x : d) x /= Scalar(3600);
      } else {
        Scalar hp(h_step), hm(-h_step);
        Vector pp = r.op(curve(i, hp), curve(j, hp)), pm = r.op(curve(i, hp), curve(j, hm));
        Vector mp = r.op(curve(i, hm), curve(j, hp)), mm = r.op(curve(i, hm), curve(j, hm));
        for (int k = 0; k < n; ++k) d[k] = (pp[k] - pm[k] - mp[k] + mm[k]) / Scalar(4 * h_step * h_step);
      }
      Vector e = Binv * d;
      for (int k = 0; k < n; ++k) t.set(i + 1, j + 1, k + 1, e[k]);
    }
  if (!t.finite()) throw std::runtime_error("non-finite tangent table (step too small?)");
  return t;
}

TableComparison compare_tables(const TangentTable& t, const StructureTable& ref, double tol) {
  if (t.dim() != ref.dim()) throw std::invalid_argument("table dimensions differ");
  TableComparison c;
  c.tol = tol;
  int n = t.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        double d = std::abs((t.at(i, j, k) - Scalar(ref.at(i, j, k))).to_double());
        if (d > c.max_dev) {
          c.max_dev = d;
          c.worst = {i, j, k};
        }
      }
  c.pass = c.max_dev <= tol;
  return c;
}

double right_leibniz_defect(const TangentTable& t) {
  int n = t.dim();
  auto e = [n](int i) {
    Vector v(n, Scalar(0));
    v[i] = Scalar(1);
    return v;
  };
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vector u = e(a), v = e(b), w = e(c);
        Vector lhs = t.product(t.product(v, w), u);
        Vector r1 = t.product(t.product(v, u), w), r2 = t.product(v, t.product(w, u));
        for (int k = 0; k < n; ++k) worst = std::max(worst, std::abs((lhs[k] - r1[k] - r2[k]).to_double()));
      }
  return worst;
}

json RoundTripReport::to_json() const {
  return {{"entry", entry},
          {"group", group},
          {"params", params},
          {"method", method},
          {"max_dev", table.max_dev},
          {"tol", table.tol},
          {"pass", pass()},
          {"worst_triple", table.worst},
          {"right_leibniz_defect", leibniz_defect},
          {"right_leibniz_tol", leibniz_tol}};
}

RoundTripReport tangent_roundtrip(const CatalogEntry& e, const ParamMap& p, double h_step) {
  RackStructure r = RackStructure::generic(e, p);
  TangentTable t = leibniz_from_rack(r, h_step);
  RoundTripReport rep;
  rep.entry = e.slug;
  rep.group = e.group_id;
  rep.params = format_params(p);
  rep.method = t.method();
  double tol = r.group().regime() == Regime::exact ? kDefaultEpsNum : kDefaultEpsFd;
  rep.table = compare_tables(t, instantiate(e, p), tol);
  rep.leibniz_defect = right_leibniz_defect(t);
  return rep;
}

}  // namespace symleib
