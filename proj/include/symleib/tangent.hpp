#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symleib/algebra.hpp"
#include "symleib/rack.hpp"

namespace symleib {

inline constexpr double kDefaultTangentStep = 1e-4;

// Product recovered from a rack: e_i.e_j = d/dt d/ds (s e_i |> t e_j) at 0,
// in the catalog basis. Exact for exact groups, approximate otherwise.
class TangentTable {
 public:
  TangentTable(int dim, std::string subject, std::string method);

  int dim() const { return n_; }
  const Scalar& at(int i, int j, int k) const { return c_[index(i, j, k)]; }  // 1-based
  void set(int i, int j, int k, Scalar v) { c_[index(i, j, k)] = std::move(v); }
  Vector product(const Vector& u, const Vector& v) const;
  const std::string& subject() const { return subject_; }
  const std::string& method() const { return method_; }
  bool finite() const;

 private:
  std::size_t index(int i, int j, int k) const;
  int n_;
  std::vector<Scalar> c_;
  std::string subject_;
  std::string method_;
};

// Exact groups: 7-point tensor stencil with unit step (exact for the
// polynomial coordinates involved). Floating groups: 4-point cross stencil.
// Throws std::runtime_error if a value is not finite.
TangentTable leibniz_from_rack(const RackStructure& r, double h_step = kDefaultTangentStep);

struct TableComparison {
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = true;
  Triple worst{1, 1, 1};  // (i, j, k) of the largest deviation
};

TableComparison compare_tables(const TangentTable& t, const StructureTable& ref, double tol);

// Largest |(v.w).u - (v.u).w - v.(w.u)| over basis triples.
double right_leibniz_defect(const TangentTable& t);

struct RoundTripReport {
  std::string entry;
  std::string group;
  std::string params;
  std::string method;
  TableComparison table;
  double leibniz_defect = 0.0;
  double leibniz_tol = 1e-4;
  bool pass() const { return table.pass && leibniz_defect <= leibniz_tol; }
  nlohmann::json to_json() const;
};

// Generic rack of the entry -> recovered table -> compare with the catalog.
// Tolerance 1e-9 on exact groups, eps_fd (1e-5) on floating ones.
RoundTripReport tangent_roundtrip(const CatalogEntry& e, const ParamMap& p, double h_step = kDefaultTangentStep);

}  // namespace symleib
