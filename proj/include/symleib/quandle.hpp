#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symleib/rack.hpp"

namespace symleib {

// Zero set of the scalar quadric q(v) = beta(v, v) on quotient coordinates,
// written as a union of linear subspaces (columns span each branch).
struct QuadricSolution {
  QMatrix form;                  // symmetric k x k Gram matrix of q (zero when beta vanishes on the diagonal)
  QMatrix congruence;            // P with P^T form P diagonal
  std::vector<Rational> diagonal;
  std::vector<std::string> var_names;  // coordinate names when kappa is a projection, else v1..vk
  std::vector<Matrix> branches;  // entries exact unless a branch needs an irrational slope
  bool degenerate = false;       // only v = 0 solves q(v) = 0
  std::string describe() const;  // e.g. "v1^2 + 2 v1 v2 + v2^2"
};

// Q(G) = { g : g |> g = g }. For generic racks membership is the quadric
// beta(kappa g, kappa g) = 0; for conjugation and trivial racks it is all of G.
class QuandlePredicate {
 public:
  explicit QuandlePredicate(RackStructure rack);

  const RackStructure& rack() const { return rack_; }
  const GroupSpec& group() const { return rack_.group(); }
  bool whole_group() const { return !rack_.central_form(); }
  const QuadricSolution& quadric() const { return quadric_; }

  // beta(kappa p, kappa p) in the catalog basis; zero for whole-group predicates.
  Vector quadric_value(const Vector& p) const;
  // Exact on exact coordinates (any group), within eps otherwise.
  bool contains(const Vector& p, double eps = kDefaultEpsNum) const;

  // A random member: random coordinates corrected along the section so that
  // kappa lands on a randomly chosen branch (branches are chosen evenly).
  Vector sample(Rng& rng) const;

 private:
  RackStructure rack_;
  QuadricSolution quadric_;
};

QuadricSolution solve_quadric(const CentralForm& f);

struct QSample {
  std::vector<Vector> points;
  bool degenerate = false;  // the quadric pins kappa to 0: only points over the centre of the quotient
};

QSample sample_Q(const QuandlePredicate& q, std::size_t n, std::uint64_t seed);

// Properties: "idempotent", "closed", "closed_inverse", "self_distributive".
AxiomReport check_quandle(const QuandlePredicate& q, const CheckOptions& opt = {});

struct Verdict {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::string grid;  // exhaustive grid description, if one was used
  nlohmann::json to_json() const;
};

// [g, k^{-1} g k] = 1 on member pairs; stops at the first violation.
Verdict is_quasi_trivial(const QuandlePredicate& q, std::size_t pairs, std::uint64_t seed, double eps = kDefaultEpsNum);
// (x|>y)|>(z|>w) = (x|>z)|>(y|>w); grid_budget = 0 disables the member grid.
Verdict is_medial(const QuandlePredicate& q, std::size_t samples, std::uint64_t seed, double eps = kDefaultEpsNum,
                  std::size_t grid_budget = 0);
// (y|>x)|>x = y
Verdict is_kei(const QuandlePredicate& q, std::size_t samples, std::uint64_t seed, double eps = kDefaultEpsNum,
               std::size_t grid_budget = 0);

// Membership sets as printed next to each display, kept as annotations.
struct PrintedSet {
  std::string text;
  // zero exactly on the printed set
  std::function<Scalar(const Vector&)> equation;
};

std::optional<PrintedSet> printed_set(const CatalogEntry& e, const ParamMap& p);

struct PrintedSetReport {
  std::string entry;
  std::string params;
  std::string printed;
  std::string quadric;
  std::size_t points = 0;   // grid points compared
  std::size_t sampled = 0;  // sampled members tested against the printed equation
  std::size_t member_not_printed = 0;
  std::size_t printed_not_member = 0;
  std::vector<Vector> examples;  // first disagreeing points
  bool agree() const { return member_not_printed == 0 && printed_not_member == 0; }
  nlohmann::json to_json() const;
};

// Exact comparison on the integer grid {-2..2}^dim, plus sampled members
// tested against the printed equation.
PrintedSetReport compare_printed_set(const CatalogEntry& e, const ParamMap& p, std::size_t samples = 200,
                                     std::uint64_t seed = 42);

// The per-family quasi-triviality statements: `claimed` items are asserted
// quasi-trivial, the others are the parameter values left out of that list.
struct QuasiTrivialClaim {
  std::string slug;
  ParamMap params;
  bool claimed = true;
};

const std::vector<QuasiTrivialClaim>& quasi_trivial_claims();

struct ClaimOutcome {
  QuasiTrivialClaim claim;
  Verdict verdict;
  // claimed: "confirmed" or "contradicted"; unclaimed: "counterexample" or "inconclusive"
  std::string status;
  bool consistent() const { return status != "contradicted"; }
  nlohmann::json to_json() const;
};

ClaimOutcome evaluate_claim(const QuasiTrivialClaim& c, std::uint64_t seed, std::size_t claimed_pairs = 2000,
                            std::size_t search_pairs = 100000);

// Finite quandles given by operation tables; entry (x, y) is x |> y.
class FiniteQuandle {
 public:
  using Perm = std::vector<int>;

  // Rejects tables whose columns are not permutations; other axioms are checked separately.
  explicit FiniteQuandle(std::vector<std::vector<int>> table, std::string name = "table");

  static FiniteQuandle trivial(int m);
  static FiniteQuandle dihedral(int n);
  static FiniteQuandle alexander(int n, int t);  // t must be a unit mod n
  // Closure of a set of permutations under conjugation, x |> y = y^{-1} x y.
  static FiniteQuandle conjugation_closure(const std::vector<Perm>& generators, std::string name = "conj");

  int size() const { return static_cast<int>(table_.size()); }
  const std::string& name() const { return name_; }
  int op(int x, int y) const { return table_[x][y]; }
  int op_inverse(int x, int y) const { return inverse_[y][x]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  // For conjugation closures: the permutation behind each element.
  const std::vector<Perm>& elements() const { return elements_; }

  // Properties: "idempotent", "bijective", "self_distributive"; exhaustive.
  AxiomReport check_axioms() const;
  Verdict is_kei() const;
  Verdict is_medial() const;
  // x |> phi(x) = x for every inner automorphism phi (Inn enumerated).
  Verdict is_quasi_trivial() const;
  std::vector<int> orbit(int x) const;
  std::vector<int> center() const;
  // Size of Inn(X), the group generated by the right translations.
  std::size_t inner_group_order() const;

  nlohmann::json to_json() const;
  static FiniteQuandle from_json(const nlohmann::json& j);

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inverse_;  // inverse_[y][z] = x with x |> y = z
  std::vector<Perm> elements_;
  std::string name_;

  std::vector<Perm> inner_group() const;
};

}  // namespace symleib
