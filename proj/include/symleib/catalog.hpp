#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symleib/algebra.hpp"

namespace symleib {

enum class Symbol { epsilon, gamma, alpha, beta };

std::string symbol_name(Symbol s);  // "eps", "gamma", "alpha", "beta"
// Accepts eps/epsilon, gamma, alpha, beta.
std::optional<Symbol> parse_symbol(std::string_view s);

using ParamMap = std::map<Symbol, Rational>;

// "eps=1,gamma=-1/2"; throws std::invalid_argument on unknown symbols or
// non-rational literals (decimals are rejected).
ParamMap parse_params(std::string_view s);
std::string format_params(const ParamMap& p);

// constant + sum coeff * symbol
struct Affine {
  Rational constant;
  std::map<Symbol, Rational> coeffs;

  Rational eval(const ParamMap& p) const;
  bool is_zero() const;
};

struct Constraint {
  enum class Kind { one_of, nonzero, positive, not_equal, real };
  Kind kind = Kind::real;
  std::vector<Rational> values;  // one_of set, or the excluded value for not_equal

  bool admits(const Rational& v) const;
  std::string str(Symbol s) const;
};

struct ParamSpec {
  Symbol symbol;
  std::vector<Constraint> constraints;

  bool admits(const Rational& v) const;
  std::string str() const;
};

// The printed table row vs. a corrected reading, for rows whose printed
// values fail the admissibility conditions.
enum class Reading { printed, alternate };

using AffineVector = std::vector<Affine>;
using PairTerm = std::pair<std::array<int, 2>, AffineVector>;

struct CatalogEntry {
  std::string name;      // e.g. "g_{3,1}^2"
  std::string slug;      // e.g. "g31-2"
  std::string lie_name;  // e.g. "g_{3,1}"
  std::string group_id;  // matrix group realising the Lie algebra
  int variant = 1;       // 1-based position among the rows of lie_name
  int dim = 0;
  std::vector<PairTerm> brackets;  // [e_i,e_j] for i < j
  std::vector<PairTerm> omega;     // w(e_i,e_j) for i <= j, printed reading
  std::optional<std::vector<PairTerm>> alternate_omega;
  std::vector<ParamSpec> params;
  std::vector<std::string> notes;

  bool flagged() const { return alternate_omega.has_value(); }
  const ParamSpec* param(Symbol s) const;
};

// Reported when an instantiated table is known to fail admissibility.
struct FlaggedFailure {
  char condition;  // Prop. condition tag
  Triple triple;   // a violating basis triple that must be reported
  std::string note;
};

const std::vector<CatalogEntry>& entries();
// Lookup by name, slug, or "GROUP/VARIANT"; throws std::invalid_argument.
const CatalogEntry& find_entry(std::string_view key);
const CatalogEntry& find_entry(std::string_view group_id, int variant);
std::vector<const CatalogEntry*> entries_for_group(std::string_view group_id);

// Throws std::invalid_argument naming the violated constraint, a missing
// parameter, or an unused one.
void check_admissible(const CatalogEntry& e, const ParamMap& p);

LieTable lie_of(const CatalogEntry& e, const ParamMap& p);
OmegaForm omega_of(const CatalogEntry& e, const ParamMap& p, Reading r = Reading::printed);
StructureTable instantiate(const CatalogEntry& e, const ParamMap& p, Reading r = Reading::printed);

std::optional<FlaggedFailure> flagged_failure(const CatalogEntry& e, const ParamMap& p, Reading r = Reading::printed);

// Each symbol over {-2,-1,-1/2,0,1/2,1,2} intersected with its admissible set.
std::vector<ParamMap> parameter_grid(const CatalogEntry& e);
const std::vector<Rational>& grid_values();

// ---- g_{4,1} normal form ---------------------------------------------------

struct G41NormalForm {
  int class_id = 0;       // 1, 2 or 3
  ParamMap canonical;     // eps for classes 1 and 2, empty for class 3
  OmegaForm canonical_omega{4};
  QMatrix witness;        // verified automorphism T with T^{-1} w(T., T.) = canonical
};

LieTable g41_lie();
// w(e3,e3) = alpha e1, w(e4,e4) = beta e1, w(e3,e4) = gamma e1
OmegaForm g41_omega(const Rational& alpha, const Rational& beta, const Rational& gamma);

// Throws std::invalid_argument for (0,0,0), and for class-1 inputs where
// |alpha*beta - gamma^2| is not the square of a rational.
G41NormalForm g41_normal_form(const Rational& alpha, const Rational& beta, const Rational& gamma);

}  // namespace symleib
