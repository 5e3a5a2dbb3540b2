#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symleib/catalog.hpp"
#include "symleib/groups.hpp"
#include "symleib/sampling.hpp"

namespace symleib {

enum class RackMode { generic, closed_form, conjugation, trivial, custom };
std::string to_string(RackMode m);

using CoordOp = std::function<Vector(const Vector& h, const Vector& g)>;

// A binary operation on the points of a group. The right translation
// R_g(h) = h |> g is inverted by R_{g^{-1}} for every group-based mode.
class RackStructure {
 public:
  // h |> g = g^{-1} h g chi(h, g)
  static RackStructure generic(const CatalogEntry& e, const ParamMap& p, Reading r = Reading::printed);
  static RackStructure generic(std::shared_ptr<const CentralForm> form, std::string label);
  // The transcribed display formula; throws if the entry has none.
  static RackStructure closed_form(const CatalogEntry& e, const ParamMap& p);
  static RackStructure conjugation(GroupPtr g);
  static RackStructure trivial(GroupPtr g);
  static RackStructure custom(GroupPtr g, std::string label, CoordOp op);

  Vector op(const Vector& h, const Vector& g) const { return op_(h, g); }
  Vector op_inverse(const Vector& h, const Vector& g) const;

  const GroupSpec& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  RackMode mode() const { return mode_; }
  const std::string& label() const { return label_; }
  // Present for generic racks.
  const CentralForm* central_form() const { return form_.get(); }
  std::shared_ptr<const CentralForm> central_form_ptr() const { return form_; }

 private:
  RackStructure(GroupPtr g, RackMode m, std::string label, CoordOp op, std::shared_ptr<const CentralForm> form = {});

  GroupPtr group_;
  RackMode mode_;
  std::string label_;
  CoordOp op_;
  std::shared_ptr<const CentralForm> form_;
};

GroupPoint rack_op(const RackStructure& r, const GroupPoint& h, const GroupPoint& g);
GroupPoint rack_op_inverse(const RackStructure& r, const GroupPoint& h, const GroupPoint& g);

// Transcribed display formula for an entry, if the entry has one.
std::optional<CoordOp> closed_form_op(const CatalogEntry& e, const ParamMap& p);

struct CheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double eps = kDefaultEpsNum;
  bool grid = true;                // exhaustive integer grids for exact groups
  std::size_t grid_budget = 60000;  // max tuples per grid check
  std::size_t max_counterexamples = 3;
};

struct Counterexample {
  std::string property;
  std::vector<Vector> args;
  Vector lhs;
  Vector rhs;
  double deviation = 0.0;
};

nlohmann::json to_json(const Counterexample& c);

struct PropertyTally {
  std::string name;
  bool holds = true;
  std::size_t checks = 0;
  double max_deviation = 0.0;
};

struct AxiomReport {
  std::string subject;
  std::vector<PropertyTally> properties;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> grids;  // descriptions of exhaustive grids used

  bool ok() const;
  const PropertyTally* find(const std::string& name) const;
  bool holds(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Properties: "pointed", "self_distributive", "bijective".
AxiomReport check_rack_axioms(const RackStructure& r, const CheckOptions& opt = {});
// Properties: "identity", "inverse", "associative", "matrix_homomorphism", "chart".
AxiomReport check_group_axioms(const GroupSpec& g, const CheckOptions& opt = {});
// Properties: "symmetric", "unit", "additive", "inverse", "absorbs_central",
// "kappa_homomorphism", "central", "central_power".
AxiomReport check_chi_identities(const CentralForm& f, const CheckOptions& opt = {});

struct ModeDiscrepancy {
  Vector h, g, generic, closed;
  std::vector<int> coords;  // 0-based coordinates that disagree
  double deviation = 0.0;
};

struct CrossCheckReport {
  std::string entry;
  std::string params;
  bool has_display = false;
  bool agree = true;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  std::vector<int> coords;  // union of disagreeing coordinates
  std::vector<ModeDiscrepancy> discrepancies;  // first few
  nlohmann::json to_json(const GroupSpec& g) const;
};

CrossCheckReport cross_check_modes(const CatalogEntry& e, const ParamMap& p, const CheckOptions& opt = {});

// Jacobian at the identity of h -> h |> x, in coordinates.
Matrix ad_map(const RackStructure& r, const Vector& x);

// Ad_{x|>y} against the two conjugation orderings, on sampled pairs:
// "right": Ad_y Ad_x Ad_y^{-1}; "printed": Ad_x Ad_y Ad_x^{-1}.
struct AdIdentityReport {
  std::string subject;
  std::size_t samples = 0;
  double right_max_dev = 0.0;
  double printed_max_dev = 0.0;
  double tol = 0.0;
  bool right_holds() const { return right_max_dev <= tol; }
  bool printed_holds() const { return printed_max_dev <= tol; }
  nlohmann::json to_json() const;
};

// Tolerance: exact groups compare exactly, floating ones at eps_fd.
AdIdentityReport check_ad_identity(const RackStructure& r, std::size_t samples, std::uint64_t seed);

// Named absorption identities; "left", "inverse", "mixed".
AxiomReport check_absorption(const RackStructure& r, const CheckOptions& opt = {});

}  // namespace symleib
