#include "symleib/groups.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace symleib {

using nlohmann::json;

GroupSpec::GroupSpec(std::string id, std::string display, int dim, Regime regime, std::vector<std::string> coords,
                     ParamMap params, QMatrix basis)
    : id_(std::move(id)),
      display_(std::move(display)),
      dim_(dim),
      regime_(regime),
      coords_(std::move(coords)),
      params_(std::move(params)),
      basis_(std::move(basis)),
      basis_inv_(symleib::inverse(basis_)) {}

Vector GroupSpec::normalize(Vector coords) const {
  if (static_cast<int>(coords.size()) != dim_)
    throw std::invalid_argument(id_ + " expects " + std::to_string(dim_) + " coordinates, got " +
                                std::to_string(coords.size()));
  if (regime_ == Regime::floating)
    for (auto& c : coords) c = c.to_floating();
  return coords;
}

namespace {

using Bin = std::function<Vector(const Vector&, const Vector&)>;
using Un = std::function<Vector(const Vector&)>;
using ToM = std::function<Matrix(const Vector&)>;
using FromM = std::function<Vector(const Matrix&)>;

class FormulaGroup final : public GroupSpec {
 public:
  FormulaGroup(std::string id, std::string display, int dim, Regime regime, std::vector<std::string> coords,
               ParamMap params, QMatrix basis, Bin mul, Un inv, ToM to_m, FromM from_m)
      : GroupSpec(std::move(id), std::move(display), dim, regime, std::move(coords), std::move(params),
                  std::move(basis)),
        mul_(std::move(mul)),
        inv_(std::move(inv)),
        to_m_(std::move(to_m)),
        from_m_(std::move(from_m)) {}

  Vector mul(const Vector& h, const Vector& g) const override { return mul_(h, g); }
  Vector inv(const Vector& h) const override { return inv_(h); }
  Matrix to_matrix(const Vector& h) const override { return to_m_(h); }
  Vector from_matrix(const Matrix& m) const override { return from_m_(m); }

 private:
  Bin mul_;
  Un inv_;
  ToM to_m_;
  FromM from_m_;
};

Scalar ln(const Scalar& x) { return std::log(x.to_double()); }

Matrix eye(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kWXYZ{"w", "x", "y", "z"};

GroupPtr g31() {
  return std::make_shared<FormulaGroup>(
      "G31", "G_{3,1}", 3, Regime::exact, kXYZ, ParamMap{}, QMatrix::identity(3),
      [](const Vector& h, const Vector& g) {
        return Vector{h[0] + g[0] + h[1] * g[2], h[1] + g[1], h[2] + g[2]};
      },
      [](const Vector& h) { return Vector{-h[0] + h[1] * h[2], -h[1], -h[2]}; },
      [](const Vector& h) {
        Matrix m = eye(3);
        m(0, 1) = h[1];
        m(0, 2) = h[0];
        m(1, 2) = h[2];
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 2), m(0, 1), m(1, 2)}; });
}

GroupPtr g21() {
  return std::make_shared<FormulaGroup>(
      "G21xR2", "G_{2,1}xR^2", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        return Vector{h[0] + g[0] * exp(-h[1]), h[1] + g[1], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) { return Vector{-h[0] * exp(h[1]), -h[1], -h[2], -h[3]}; },
      [](const Vector& h) {
        Matrix m = eye(4);
        m(1, 0) = h[0];
        m(1, 1) = exp(-h[1]);
        m(2, 2) = exp(h[2]);
        m(3, 3) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(1, 0), -ln(m(1, 1)), ln(m(2, 2)), ln(m(3, 3))}; });
}

GroupPtr g31r() {
  return std::make_shared<FormulaGroup>(
      "G31xR", "G_{3,1}xR", 4, Regime::exact, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        return Vector{h[0] + g[0] + h[1] * g[2], h[1] + g[1], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) { return Vector{-h[0] + h[1] * h[2], -h[1], -h[2], -h[3]}; },
      [](const Vector& h) {
        Matrix m = eye(4);
        m(0, 1) = h[1];
        m(0, 2) = h[0];
        m(1, 2) = h[2];
        m(3, 3) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 2), m(0, 1), m(1, 2), ln(m(3, 3))}; });
}

GroupPtr g32() {
  return std::make_shared<FormulaGroup>(
      "G32xR", "G_{3,2}xR", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        Scalar ey = exp(h[2]);
        return Vector{h[0] + ey * (g[0] - h[2] * g[1]), h[1] + ey * g[1], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) {
        Scalar e = exp(-h[2]);
        return Vector{-h[0] * e - h[2] * h[1] * e, -h[1] * e, -h[2], -h[3]};
      },
      [](const Vector& h) {
        Matrix m = eye(4);
        Scalar ey = exp(h[2]);
        m(1, 0) = h[1];
        m(1, 1) = ey;
        m(2, 0) = h[0];
        m(2, 1) = -h[2] * ey;
        m(2, 2) = ey;
        m(3, 3) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(2, 0), m(1, 0), ln(m(1, 1)), ln(m(3, 3))}; });
}

GroupPtr g33() {
  return std::make_shared<FormulaGroup>(
      "G33xR", "G_{3,3}xR", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        Scalar ey = exp(h[2]);
        return Vector{h[0] + ey * g[0], h[1] + ey * g[1], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) {
        Scalar e = exp(-h[2]);
        return Vector{-h[0] * e, -h[1] * e, -h[2], -h[3]};
      },
      [](const Vector& h) {
        Matrix m = eye(4);
        Scalar ey = exp(h[2]);
        m(1, 0) = h[1];
        m(1, 1) = ey;
        m(2, 0) = h[0];
        m(2, 2) = ey;
        m(3, 3) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(2, 0), m(1, 0), ln(m(1, 1)), ln(m(3, 3))}; });
}

// Hyperbolic family; alpha = 0 gives G^0_{3,4}.
GroupPtr g34(std::string id, std::string display, const Rational& alpha, ParamMap params) {
  Scalar al(alpha);
  return std::make_shared<FormulaGroup>(
      std::move(id), std::move(display), 4, Regime::floating, kWXYZ, std::move(params), QMatrix::identity(4),
      [al](const Vector& h, const Vector& g) {
        Scalar f = exp(al * h[2]), ch = cosh(h[2]), sh = sinh(h[2]);
        return Vector{h[0] + f * (ch * g[0] - sh * g[1]), h[1] + f * (-sh * g[0] + ch * g[1]), h[2] + g[2],
                      h[3] + g[3]};
      },
      [al](const Vector& h) {
        Scalar f = exp(-al * h[2]), ch = cosh(h[2]), sh = sinh(h[2]);
        return Vector{-f * (ch * h[0] + sh * h[1]), -f * (sh * h[0] + ch * h[1]), -h[2], -h[3]};
      },
      [al](const Vector& h) {
        Matrix m = eye(4);
        Scalar f = exp(al * h[2]);
        m(1, 0) = h[0];
        m(2, 0) = h[1];
        m(1, 1) = f * cosh(h[2]);
        m(1, 2) = -f * sinh(h[2]);
        m(2, 1) = -f * sinh(h[2]);
        m(2, 2) = f * cosh(h[2]);
        m(3, 3) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) {
        double t = -m(1, 2).to_double() / m(1, 1).to_double();
        return Vector{m(1, 0), m(2, 0), Scalar(std::atanh(t)), ln(m(3, 3))};
      });
}

// Rotation family, realised by 5x5 matrices with an extra e^y diagonal entry.
GroupPtr g35(std::string id, std::string display, const Rational& alpha, ParamMap params) {
  Scalar al(alpha);
  return std::make_shared<FormulaGroup>(
      std::move(id), std::move(display), 4, Regime::floating, kWXYZ, std::move(params), QMatrix::identity(4),
      [al](const Vector& h, const Vector& g) {
        Scalar f = exp(al * h[2]), c = cos(h[2]), s = sin(h[2]);
        return Vector{h[0] + f * (c * g[0] - s * g[1]), h[1] + f * (s * g[0] + c * g[1]), h[2] + g[2], h[3] + g[3]};
      },
      [al](const Vector& h) {
        Scalar f = exp(-al * h[2]), c = cos(h[2]), s = sin(h[2]);
        return Vector{-f * (c * h[0] + s * h[1]), -f * (-s * h[0] + c * h[1]), -h[2], -h[3]};
      },
      [al](const Vector& h) {
        Matrix m = eye(5);
        Scalar f = exp(al * h[2]);
        m(1, 0) = h[0];
        m(2, 0) = h[1];
        m(1, 1) = f * cos(h[2]);
        m(1, 2) = -f * sin(h[2]);
        m(2, 1) = f * sin(h[2]);
        m(2, 2) = f * cos(h[2]);
        m(3, 3) = exp(h[2]);
        m(4, 4) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(1, 0), m(2, 0), ln(m(3, 3)), ln(m(4, 4))}; });
}

GroupPtr g41() {
  // e1 is the central direction d/dw + d/dx.
  QMatrix b = QMatrix::identity(4);
  b(1, 0) = 1;
  return std::make_shared<FormulaGroup>(
      "G41", "G_{4,1}", 4, Regime::exact, kWXYZ, ParamMap{}, b,
      [](const Vector& h, const Vector& g) {
        Scalar s = h[3] * (g[0] - g[1]) + h[3] * h[3] * g[2] / Scalar(2);
        return Vector{h[0] + g[0] + s, h[1] + g[1] + s - h[3] * g[2], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) {
        const Scalar &w = h[0], &x = h[1], &y = h[2], &z = h[3];
        Scalar q = y * z * z / Scalar(2);
        return Vector{w * z - w - x * z - q, w * z - x * z - x - q - y * z, -y, -z};
      },
      [](const Vector& h) {
        Matrix m = eye(4);
        m(0, 1) = h[3];
        m(0, 2) = h[3] * h[3] / Scalar(2);
        m(0, 3) = h[0];
        m(1, 2) = h[3];
        m(1, 3) = h[0] - h[1];
        m(2, 3) = h[2];
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 3), m(0, 3) - m(1, 3), m(2, 3), m(0, 1)}; });
}

GroupPtr g43() {
  return std::make_shared<FormulaGroup>(
      "G43", "G_{4,3}", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        return Vector{h[0] + exp(-h[3]) * g[0], h[1] + g[1] - h[3] * g[2], h[2] + g[2], h[3] + g[3]};
      },
      [](const Vector& h) { return Vector{-h[0] * exp(h[3]), -h[1] - h[3] * h[2], -h[2], -h[3]}; },
      [](const Vector& h) {
        Matrix m = eye(4);
        m(0, 0) = exp(-h[3]);
        m(0, 3) = h[0];
        m(1, 2) = -h[3];
        m(1, 3) = h[1];
        m(2, 3) = h[2];
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 3), m(1, 3), m(2, 3), -ln(m(0, 0))}; });
}

GroupPtr g48() {
  return std::make_shared<FormulaGroup>(
      "G48", "G^{-1}_{4,8}", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        return Vector{h[0] + g[0] + h[1] * g[2], g[1] + h[1] * exp(g[3]), h[2] + g[2] * exp(h[3]), h[3] + g[3]};
      },
      [](const Vector& h) {
        Scalar e = exp(-h[3]);
        return Vector{-h[0] + h[1] * h[2] * e, -h[1] * e, -h[2] * e, -h[3]};
      },
      [](const Vector& h) {
        Matrix m = eye(3);
        m(0, 1) = h[1];
        m(0, 2) = h[0];
        m(1, 1) = exp(h[3]);
        m(1, 2) = h[2];
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 2), m(0, 1), m(1, 2), ln(m(1, 1))}; });
}

GroupPtr g49() {
  return std::make_shared<FormulaGroup>(
      "G49", "G^0_{4,9}", 4, Regime::floating, kWXYZ, ParamMap{}, QMatrix::identity(4),
      [](const Vector& h, const Vector& g) {
        Scalar c = cos(h[3]), s = sin(h[3]);
        Scalar u = -h[1] * c - h[2] * s, v = h[2] * c - h[1] * s;
        return Vector{h[0] + g[0] - (u * g[2] + v * g[1]) / Scalar(2), h[1] - s * g[2] + c * g[1],
                      h[2] + c * g[2] + s * g[1], h[3] + g[3]};
      },
      [](const Vector& h) {
        Scalar c = cos(h[3]), s = sin(h[3]);
        Scalar a = -(c * h[1] + s * h[2]), b = -(-s * h[1] + c * h[2]);
        Scalar u = -h[1] * c - h[2] * s, v = h[2] * c - h[1] * s;
        return Vector{-h[0] + (u * b + v * a) / Scalar(2), a, b, -h[3]};
      },
      [](const Vector& h) {
        Matrix m = eye(5);
        Scalar c = cos(h[3]), s = sin(h[3]);
        m(0, 1) = -h[1] * c - h[2] * s;
        m(0, 2) = h[2] * c - h[1] * s;
        m(0, 3) = Scalar(-2) * h[0];
        m(1, 1) = c;
        m(1, 2) = s;
        m(1, 3) = h[2];
        m(2, 1) = -s;
        m(2, 2) = c;
        m(2, 3) = h[1];
        m(4, 4) = exp(h[3]);
        return m;
      },
      [](const Matrix& m) { return Vector{m(0, 3) / Scalar(-2), m(2, 3), m(1, 3), ln(m(4, 4))}; });
}

Rational alpha_for(std::string_view id, const ParamMap& params) {
  auto it = params.find(Symbol::alpha);
  if (it == params.end()) throw std::invalid_argument(std::string(id) + " requires parameter alpha");
  const CatalogEntry& e = find_entry(id, 1);
  if (const ParamSpec* spec = e.param(Symbol::alpha); spec && !spec->admits(it->second))
    throw std::invalid_argument(std::string(id) + ": alpha = " + it->second.str() + " violates " + spec->str());
  return it->second;
}

}  // namespace

const std::vector<std::string>& group_ids() {
  static const std::vector<std::string> ids{"G31",     "G21xR2",  "G31xR",   "G32xR", "G33xR", "G34_0xR", "G34_axR",
                                            "G35_0xR", "G35_axR", "G41",     "G43",   "G48",   "G49"};
  return ids;
}

GroupPtr make_group(std::string_view id, const ParamMap& params) {
  if (id == "G31") return g31();
  if (id == "G21xR2") return g21();
  if (id == "G31xR") return g31r();
  if (id == "G32xR") return g32();
  if (id == "G33xR") return g33();
  if (id == "G34_0xR") return g34("G34_0xR", "G^0_{3,4}xR", Rational(0), {});
  if (id == "G34_axR") {
    Rational a = alpha_for(id, params);
    return g34("G34_axR", "G^alpha_{3,4}xR", a, {{Symbol::alpha, a}});
  }
  if (id == "G35_0xR") return g35("G35_0xR", "G^0_{3,5}xR", Rational(0), {});
  if (id == "G35_axR") {
    Rational a = alpha_for(id, params);
    return g35("G35_axR", "G^alpha_{3,5}xR", a, {{Symbol::alpha, a}});
  }
  if (id == "G41") return g41();
  if (id == "G43") return g43();
  if (id == "G48") return g48();
  if (id == "G49") return g49();
  throw std::invalid_argument("unknown group '" + std::string(id) + "'");
}

// ---- points ---------------------------------------------------------------

GroupPoint make_point(GroupPtr spec, Vector coords) {
  Vector c = spec->normalize(std::move(coords));
  return {std::move(spec), std::move(c)};
}

GroupPoint mul(const GroupPoint& p, const GroupPoint& q) {
  if (!p.spec->same_as(*q.spec)) throw std::invalid_argument("group mismatch: " + p.spec->id() + " vs " + q.spec->id());
  return {p.spec, p.spec->mul(p.coords, q.coords)};
}

GroupPoint inv(const GroupPoint& p) { return {p.spec, p.spec->inv(p.coords)}; }

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) {
    if (c.is_exact())
      out.push_back(c.exact().str());
    else
      out.push_back(c.to_double());
  }
  return out;
}

json point_to_json(const GroupPoint& p) {
  json params = json::object();
  for (const auto& [s, v] : p.spec->params()) params[symbol_name(s)] = v.str();
  return {{"group", p.spec->id()}, {"params", params}, {"coords", vector_to_json(p.coords)}};
}

GroupPoint point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.at("group").is_string())
    throw std::invalid_argument("point JSON needs a \"group\" string");
  ParamMap params;
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) {
      auto s = parse_symbol(k);
      if (!s) throw std::invalid_argument("unknown parameter '" + k + "'");
      if (!v.is_string() && !v.is_number_integer()) throw std::invalid_argument("parameter values must be rational");
      params[*s] = v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long long>());
    }
  }
  GroupPtr g = make_group(j.at("group").get<std::string>(), params);
  if (!j.contains("coords") || !j.at("coords").is_array()) throw std::invalid_argument("point JSON needs \"coords\"");
  Vector c;
  for (const auto& v : j.at("coords")) {
    if (v.is_string())
      c.emplace_back(Rational::parse(v.get<std::string>()));
    else if (v.is_number_integer())
      c.emplace_back(Rational(v.get<long long>()));
    else if (v.is_number() && g->regime() == Regime::floating)
      c.emplace_back(v.get<double>());
    else
      throw std::invalid_argument("coordinate " + v.dump() + " is not admissible for " + g->id());
  }
  return make_point(g, std::move(c));
}

Vector parse_coords(const GroupSpec& g, std::string_view s) {
  Vector out;
  while (true) {
    auto comma = s.find(',');
    std::string item(s.substr(0, comma));
    try {
      out.emplace_back(Rational::parse(item));
    } catch (const std::invalid_argument&) {
      if (g.regime() == Regime::exact) throw;
      std::size_t used = 0;
      double d = 0;
      try {
        d = std::stod(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coordinate '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
      out.emplace_back(d);
    }
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return g.normalize(std::move(out));
}

// ---- CentralForm ----------------------------------------------------------

CentralForm::CentralForm(GroupPtr group, const LieTable& lie, const OmegaForm& omega)
    : group_(std::move(group)), omega_(omega) {
  int n = group_->dim();
  if (lie.dim() != n || omega.dim() != n) throw std::invalid_argument("algebra dimension does not match the group");
  auto rep = check_prop31(lie, omega);
  if (!rep.holds)
    throw std::invalid_argument(std::string("structure fails admissibility condition (") + rep.condition +
                                "); no central form");
  StructureTable t = combine(lie, omega);
  derived_ = derived_space(t);
  complement_ = derived_.complement();
  int k = quotient_dim();

  // q: e-coordinates -> complement coordinates of the reduced vector
  QMatrix q(k, n);
  for (int j = 0; j < n; ++j) {
    QVector r = derived_.reduce(basis_vector(n, j + 1));
    for (int a = 0; a < k; ++a) q(a, j) = r[complement_[a]];
  }
  kappa_ = q * group_->basis_identification_inverse();

  section_ = QMatrix(n, k);
  for (int a = 0; a < k; ++a) {
    QVector c = group_->basis_identification().col(complement_[a]);
    for (int i = 0; i < n; ++i) section_(i, a) = c[i];
  }

  beta_.reserve(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) beta_.push_back(omega_.at(complement_[a] + 1, complement_[b] + 1));

  SubspaceBasis z = center(lie);
  for (const auto& v : z.vectors()) central_dirs_.push_back(group_->basis_identification() * v);
}

std::optional<std::vector<int>> CentralForm::kappa_coords() const {
  std::vector<int> idx;
  for (std::size_t a = 0; a < kappa_.rows(); ++a) {
    int hit = -1;
    for (std::size_t j = 0; j < kappa_.cols(); ++j) {
      const Rational& v = kappa_(a, j);
      if (v.is_zero()) continue;
      if (v != Rational(1) || hit >= 0) return std::nullopt;
      hit = static_cast<int>(j);
    }
    if (hit < 0) return std::nullopt;
    idx.push_back(hit);
  }
  return idx;
}

Vector CentralForm::kappa(const Vector& coords) const {
  Vector out(kappa_.rows(), Scalar(0));
  for (std::size_t a = 0; a < kappa_.rows(); ++a)
    for (std::size_t j = 0; j < kappa_.cols(); ++j)
      if (!kappa_(a, j).is_zero()) out[a] += Scalar(kappa_(a, j)) * coords[j];
  return out;
}

Vector CentralForm::beta(const Vector& u, const Vector& v) const {
  int n = group_->dim(), k = quotient_dim();
  Vector out(n, Scalar(0));
  for (int a = 0; a < k; ++a) {
    if (u[a].is_exact() && u[a].exact().is_zero()) continue;
    for (int b = 0; b < k; ++b) {
      const QVector& c = beta_[a * k + b];
      if (is_zero(c)) continue;
      Scalar s = u[a] * v[b];
      for (int i = 0; i < n; ++i)
        if (!c[i].is_zero()) out[i] += s * Scalar(c[i]);
    }
  }
  return out;
}

Vector CentralForm::chi(const Vector& h, const Vector& g) const {
  Vector b = beta(kappa(h), kappa(g));
  const QMatrix& B = group_->basis_identification();
  int n = group_->dim();
  Vector out(n, Scalar(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!B(i, j).is_zero()) out[i] += Scalar(B(i, j)) * b[j];
  return group_->normalize(std::move(out));
}

Vector CentralForm::section_coords(const Vector& v) const {
  int n = group_->dim(), k = quotient_dim();
  Vector out(n, Scalar(0));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < k; ++a)
      if (!section_(i, a).is_zero()) out[i] += Scalar(section_(i, a)) * v[a];
  return out;
}

}  // namespace symleib
