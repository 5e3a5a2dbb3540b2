#pragma once

#include <array>
#include <string>
#include <vector>

#include "symleib/linalg.hpp"

namespace symleib {

// Basis indices are 1-based throughout the public algebra API.
using Triple = std::array<int, 3>;

// e_i.e_j = sum_k c[i][j][k] e_k
class StructureTable {
 public:
  explicit StructureTable(int dim);

  int dim() const { return n_; }
  const Rational& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set(int i, int j, int k, Rational v) { c_[index(i, j, k)] = std::move(v); }

  QVector basis_product(int i, int j) const;
  void set_product(int i, int j, const QVector& v);

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t index(int i, int j, int k) const;

  int n_;
  std::vector<Rational> c_;
};

// Antisymmetric structure table. Jacobi is not enforced here; see is_lie.
class LieTable {
 public:
  explicit LieTable(int dim) : t_(dim) {}
  // Throws std::invalid_argument when t is not antisymmetric.
  static LieTable from_table(const StructureTable& t);

  int dim() const { return t_.dim(); }
  // Sets [e_i,e_j] = v and [e_j,e_i] = -v.
  void set_bracket(int i, int j, const QVector& v);
  QVector bracket(const QVector& u, const QVector& v) const;
  const StructureTable& table() const { return t_; }

  friend bool operator==(const LieTable&, const LieTable&) = default;

 private:
  StructureTable t_;
};

// Symmetric bilinear map L x L -> L given on basis pairs.
class OmegaForm {
 public:
  explicit OmegaForm(int dim);

  int dim() const { return n_; }
  const QVector& at(int i, int j) const { return w_[slot(i, j)]; }
  void set(int i, int j, QVector v);
  QVector eval(const QVector& u, const QVector& v) const;
  bool is_zero() const;

  OmegaForm operator+(const OmegaForm& o) const;
  OmegaForm scaled(const Rational& s) const;

  friend bool operator==(const OmegaForm&, const OmegaForm&) = default;

 private:
  std::size_t slot(int i, int j) const;

  int n_;
  std::vector<QVector> w_;  // upper triangle, i <= j
};

// Canonical (reduced row echelon) basis of a subspace of Q^n.
class SubspaceBasis {
 public:
  static SubspaceBasis span(int dim, const std::vector<QVector>& generators);

  int dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<QVector>& vectors() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }  // 0-based columns
  // 0-based indices of non-pivot coordinates, spanning the chosen complement.
  std::vector<int> complement() const;

  // v minus the element of the subspace that agrees with v on the pivot columns.
  QVector reduce(const QVector& v) const;
  bool contains(const QVector& v) const { return is_zero(reduce(v)); }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  int n_ = 0;
  std::vector<QVector> rows_;
  std::vector<int> pivots_;
};

// Invertible matrix verified to preserve a Lie bracket: A[u,v] = [Au,Av].
class AutoMatrix {
 public:
  // Throws std::invalid_argument if a is singular or not an automorphism of lie.
  static AutoMatrix verify(const LieTable& lie, const QMatrix& a);

  const QMatrix& matrix() const { return a_; }
  const QMatrix& inverse() const { return inv_; }
  const LieTable& lie() const { return lie_; }

 private:
  AutoMatrix(LieTable lie, QMatrix a, QMatrix inv)
      : lie_(std::move(lie)), a_(std::move(a)), inv_(std::move(inv)) {}

  LieTable lie_;
  QMatrix a_;
  QMatrix inv_;
};

struct IdentityReport {
  bool holds = true;
  std::vector<Triple> violations;  // 1-based basis triples, lexicographic
};

struct Decomposition {
  LieTable lie;
  OmegaForm omega;
};

struct Prop31Report {
  bool holds = true;
  char condition = 0;  // first failing condition: 'a', 'b', 'c', or 0
  bool jacobi = true;           // (a)
  bool central_values = true;   // (b)
  bool vanishing = true;        // (c)
  std::vector<Triple> jacobi_violations;
  std::vector<std::array<int, 2>> noncentral_pairs;
  // (i,j,k) with omega([e_i,e_j],e_k) != 0 or omega(omega(e_i,e_j),e_k) != 0
  std::vector<Triple> vanishing_violations;
};

struct OmegaFamily {
  std::vector<OmegaForm> basis;
  bool quadratic_ok = true;
};

enum class Side { left, right };

QVector product(const StructureTable& t, const QVector& u, const QVector& v);
QMatrix translation_matrix(const StructureTable& t, const QVector& u, Side side);

// u.(v.w) = (u.v).w + v.(u.w)
IdentityReport is_left_leibniz(const StructureTable& t);
// (v.w).u = (v.u).w + v.(w.u)
IdentityReport is_right_leibniz(const StructureTable& t);

Decomposition split(const StructureTable& t);
// lie + omega without any admissibility check.
StructureTable combine(const LieTable& lie, const OmegaForm& omega);
// Throws std::invalid_argument naming the failed condition.
StructureTable compose(const LieTable& lie, const OmegaForm& omega);

IdentityReport is_lie(const LieTable& t);
// Throws std::invalid_argument for non-antisymmetric input.
IdentityReport is_lie(const StructureTable& t);

SubspaceBasis center(const LieTable& t);
SubspaceBasis derived_space(const StructureTable& t);

Prop31Report check_prop31(const LieTable& lie, const OmegaForm& omega);

OmegaForm pullback_omega(const OmegaForm& omega, const AutoMatrix& a);
// Throws std::invalid_argument if a is not an automorphism of lie.
OmegaForm pullback_omega(const OmegaForm& omega, const LieTable& lie, const QMatrix& a);

OmegaFamily omega_parameter_space(const LieTable& lie);

QVector basis_vector(int dim, int i);  // e_i, 1-based
// "2e1 - 1/2e3", "0" for the zero vector.
std::string format_combination(const QVector& v);
// One line per nonzero basis product, "e2.e3 = 2e1".
std::vector<std::string> describe(const StructureTable& t);
std::vector<std::string> describe(const OmegaForm& w);

}  // namespace symleib
