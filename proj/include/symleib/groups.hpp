#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symleib/algebra.hpp"
#include "symleib/catalog.hpp"
#include "symleib/linalg.hpp"

namespace symleib {

// A matrix Lie group in global coordinates. Multiplication and inversion are
// closed-form coordinate maps; to_matrix is the defining matrix realisation.
class GroupSpec {
 public:
  virtual ~GroupSpec() = default;

  const std::string& id() const { return id_; }
  const std::string& display_name() const { return display_; }
  int dim() const { return dim_; }
  Regime regime() const { return regime_; }
  const ParamMap& params() const { return params_; }
  const std::vector<std::string>& coord_names() const { return coords_; }

  virtual Vector mul(const Vector& h, const Vector& g) const = 0;
  virtual Vector inv(const Vector& h) const = 0;
  virtual Matrix to_matrix(const Vector& h) const = 0;
  virtual Vector from_matrix(const Matrix& m) const = 0;

  // Column i holds the coordinate tangent vector at the identity that is
  // identified with the catalog basis vector e_{i+1}.
  const QMatrix& basis_identification() const { return basis_; }
  const QMatrix& basis_identification_inverse() const { return basis_inv_; }

  Vector identity() const { return Vector(dim_, Scalar(0)); }
  // Brings coordinates into the group's regime; throws on a length mismatch.
  Vector normalize(Vector coords) const;

  bool same_as(const GroupSpec& o) const { return id_ == o.id_ && params_ == o.params_; }

 protected:
  GroupSpec(std::string id, std::string display, int dim, Regime regime, std::vector<std::string> coords,
            ParamMap params, QMatrix basis);

 private:
  std::string id_;
  std::string display_;
  int dim_;
  Regime regime_;
  std::vector<std::string> coords_;
  ParamMap params_;
  QMatrix basis_;
  QMatrix basis_inv_;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

const std::vector<std::string>& group_ids();
// Only alpha is used (by the alpha-families); other symbols are ignored.
// Throws std::invalid_argument for unknown ids or a missing/invalid alpha.
GroupPtr make_group(std::string_view id, const ParamMap& params = {});

struct GroupPoint {
  GroupPtr spec;
  Vector coords;
};

GroupPoint make_point(GroupPtr spec, Vector coords);
GroupPoint mul(const GroupPoint& p, const GroupPoint& q);  // throws on spec mismatch
GroupPoint inv(const GroupPoint& p);

// Exact entries as "p/q" strings, floating ones as numbers.
nlohmann::json vector_to_json(const Vector& v);

// {"group": id, "params": {...}, "coords": [...]}; exact coordinates are
// written as "p/q" strings, floating ones as numbers.
nlohmann::json point_to_json(const GroupPoint& p);
GroupPoint point_from_json(const nlohmann::json& j);
// "1,-1/2,0" -> coordinates; floats are accepted only for floating groups.
Vector parse_coords(const GroupSpec& g, std::string_view s);

// beta and chi built from a symmetric Leibniz structure on the group's Lie
// algebra, via the quotient L/L.L represented by non-pivot basis vectors.
class CentralForm {
 public:
  // Throws std::invalid_argument if (lie, omega) is not admissible.
  CentralForm(GroupPtr group, const LieTable& lie, const OmegaForm& omega);

  const GroupSpec& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const OmegaForm& omega() const { return omega_; }
  const SubspaceBasis& derived() const { return derived_; }
  const std::vector<int>& complement() const { return complement_; }  // 0-based e-indices
  int quotient_dim() const { return static_cast<int>(complement_.size()); }

  // q o B^{-1}: coordinates -> quotient coordinates.
  const QMatrix& kappa_matrix() const { return kappa_; }
  // Indices i with kappa = (coords[i]...), when kappa is a coordinate projection.
  std::optional<std::vector<int>> kappa_coords() const;
  // Coordinates realising the centre of the Lie algebra (columns of B*Z).
  std::vector<QVector> central_directions() const { return central_dirs_; }

  Vector kappa(const Vector& coords) const;
  // beta(u, v) in the catalog basis; u, v are quotient coordinates.
  Vector beta(const Vector& u, const Vector& v) const;
  // beta(e_a, e_b) in the catalog basis.
  const QVector& beta_coeff(int a, int b) const { return beta_[a * quotient_dim() + b]; }
  // Coordinates of the central point exp(beta(kappa h, kappa g)).
  Vector chi(const Vector& h, const Vector& g) const;
  // Section of the quotient map expressed in group coordinates: B s(v).
  Vector section_coords(const Vector& v) const;

 private:
  GroupPtr group_;
  OmegaForm omega_;
  SubspaceBasis derived_;
  std::vector<int> complement_;
  QMatrix kappa_;
  QMatrix section_;  // n x k
  std::vector<QVector> beta_;
  std::vector<QVector> central_dirs_;
};

}  // namespace symleib
