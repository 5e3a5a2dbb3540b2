#include "symleib/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace symleib {

// ---- parameters -----------------------------------------------------------

std::string symbol_name(Symbol s) {
  switch (s) {
    case Symbol::epsilon: return "eps";
    case Symbol::gamma: return "gamma";
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
  }
  return "?";
}

std::optional<Symbol> parse_symbol(std::string_view s) {
  if (s == "eps" || s == "epsilon") return Symbol::epsilon;
  if (s == "gamma") return Symbol::gamma;
  if (s == "alpha") return Symbol::alpha;
  if (s == "beta") return Symbol::beta;
  return std::nullopt;
}

ParamMap parse_params(std::string_view s) {
  ParamMap out;
  while (!s.empty()) {
    auto comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("parameter '" + std::string(item) + "' is not k=v");
    auto sym = parse_symbol(item.substr(0, eq));
    if (!sym) throw std::invalid_argument("unknown parameter '" + std::string(item.substr(0, eq)) + "'");
    if (out.count(*sym)) throw std::invalid_argument("parameter '" + symbol_name(*sym) + "' given twice");
    out[*sym] = Rational::parse(item.substr(eq + 1));
  }
  return out;
}

std::string format_params(const ParamMap& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + symbol_name(k) + "=" + v.str();
  return s;
}

Rational Affine::eval(const ParamMap& p) const {
  Rational v = constant;
  for (const auto& [s, c] : coeffs) {
    auto it = p.find(s);
    if (it == p.end()) throw std::invalid_argument("parameter '" + symbol_name(s) + "' is required");
    v += c * it->second;
  }
  return v;
}

bool Affine::is_zero() const {
  return constant.is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool Constraint::admits(const Rational& v) const {
  switch (kind) {
    case Kind::one_of: return std::find(values.begin(), values.end(), v) != values.end();
    case Kind::nonzero: return !v.is_zero();
    case Kind::positive: return v.sign() > 0;
    case Kind::not_equal: return v != values.at(0);
    case Kind::real: return true;
  }
  return false;
}

std::string Constraint::str(Symbol s) const {
  std::string n = symbol_name(s);
  switch (kind) {
    case Kind::one_of: {
      std::string set;
      for (const auto& v : values) set += (set.empty() ? "" : ",") + v.str();
      return n + " in {" + set + "}";
    }
    case Kind::nonzero: return n + " != 0";
    case Kind::positive: return n + " > 0";
    case Kind::not_equal: return n + " != " + values.at(0).str();
    case Kind::real: return n + " real";
  }
  return n;
}

bool ParamSpec::admits(const Rational& v) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) { return c.admits(v); });
}

std::string ParamSpec::str() const {
  std::string s;
  for (const auto& c : constraints) s += (s.empty() ? "" : ", ") + c.str(symbol);
  return s;
}

const ParamSpec* CatalogEntry::param(Symbol s) const {
  for (const auto& p : params)
    if (p.symbol == s) return &p;
  return nullptr;
}

// ---- table construction ---------------------------------------------------

namespace {

Affine num(long long n, long long d = 1) { return Affine{Rational(n, d), {}}; }
Affine sym(Symbol s, long long k = 1) { return Affine{Rational(0), {{s, Rational(k)}}}; }
Affine operator+(Affine a, const Affine& b) {
  a.constant += b.constant;
  for (const auto& [s, c] : b.coeffs) a.coeffs[s] += c;
  return a;
}

const Symbol kEps = Symbol::epsilon;
const Symbol kGam = Symbol::gamma;
const Symbol kAlp = Symbol::alpha;

// sum of terms coeff * e_idx in dimension n
AffineVector vec(int n, std::initializer_list<std::pair<int, Affine>> terms) {
  AffineVector v(n, num(0));
  for (const auto& [idx, a] : terms) v.at(idx - 1) = v.at(idx - 1) + a;
  return v;
}

PairTerm at(int i, int j, AffineVector v) { return {{i, j}, std::move(v)}; }

ParamSpec one_of(Symbol s, std::initializer_list<long long> vals) {
  Constraint c{Constraint::Kind::one_of, {}};
  for (auto v : vals) c.values.emplace_back(v);
  return {s, {c}};
}
ParamSpec nonzero(Symbol s) { return {s, {Constraint{Constraint::Kind::nonzero, {}}}}; }
ParamSpec real(Symbol s) { return {s, {Constraint{Constraint::Kind::real, {}}}}; }
ParamSpec positive(Symbol s, bool exclude_one) {
  ParamSpec p{s, {Constraint{Constraint::Kind::positive, {}}}};
  if (exclude_one) p.constraints.push_back(Constraint{Constraint::Kind::not_equal, {Rational(1)}});
  return p;
}

CatalogEntry make(std::string name, std::string slug, std::string lie_name, std::string group, int variant, int dim,
                  std::vector<PairTerm> br, std::vector<PairTerm> om, std::vector<ParamSpec> params = {}) {
  CatalogEntry e;
  e.name = std::move(name);
  e.slug = std::move(slug);
  e.lie_name = std::move(lie_name);
  e.group_id = std::move(group);
  e.variant = variant;
  e.dim = dim;
  e.brackets = std::move(br);
  e.omega = std::move(om);
  e.params = std::move(params);
  return e;
}

// The four omega families shared by g_{3,1} and g_{3,1}+g_1.
std::vector<std::pair<std::vector<PairTerm>, std::vector<ParamSpec>>> heisenberg_rows(int n) {
  return {
      {{at(2, 2, vec(n, {{1, num(1)}})), at(3, 3, vec(n, {{1, num(1)}})), at(2, 3, vec(n, {{1, num(1)}}))}, {}},
      {{at(3, 3, vec(n, {{1, num(1)}}))}, {}},
      {{at(2, 2, vec(n, {{1, num(1)}})), at(3, 3, vec(n, {{1, sym(kEps)}}))}, {one_of(kEps, {0, 1})}},
      {{at(2, 3, vec(n, {{1, sym(kGam)}}))}, {nonzero(kGam)}},
  };
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    std::vector<PairTerm> br{at(2, 3, vec(3, {{1, num(1)}}))};
    int k = 1;
    for (auto& [om, ps] : heisenberg_rows(3)) {
      out.push_back(make("g_{3,1}^" + std::to_string(k), "g31-" + std::to_string(k), "g_{3,1}", "G31", k, 3, br, om, ps));
      ++k;
    }
  }

  {
    std::vector<PairTerm> br{at(1, 2, vec(4, {{1, num(1)}}))};
    auto s34 = [](Affine a) { return vec(4, {{3, a}, {4, a}}); };
    std::string lie = "g_{2,1}+2g_1";
    auto name = [](int k) { return "(g_{2,1}+2g_1)^" + std::to_string(k); };
    auto slug = [](int k) { return "g21+2g1-" + std::to_string(k); };
    out.push_back(make(name(1), slug(1), lie, "G21xR2", 1, 4, br,
                       {at(2, 3, s34(sym(kEps))), at(2, 4, s34(sym(kEps, -1)))}, {nonzero(kEps)}));
    out.push_back(make(name(2), slug(2), lie, "G21xR2", 2, 4, br,
                       {at(2, 2, s34(num(1))), at(2, 3, s34(sym(kEps))), at(2, 4, s34(sym(kEps, -1)))},
                       {nonzero(kEps)}));
    out.push_back(make(name(3), slug(3), lie, "G21xR2", 3, 4, br, {at(2, 2, vec(4, {{3, num(1)}}))}));
    out.push_back(make(name(4), slug(4), lie, "G21xR2", 4, 4, br, {at(2, 4, vec(4, {{3, num(1)}}))}));
    CatalogEntry e5 = make(name(5), slug(5), lie, "G21xR2", 5, 4, br,
                           {at(2, 2, vec(4, {{3, sym(kGam)}})), at(3, 3, vec(4, {{3, sym(kEps)}}))},
                           {one_of(kGam, {0, 1}), one_of(kEps, {0, 1, -1})});
    e5.alternate_omega = std::vector<PairTerm>{at(2, 2, vec(4, {{3, sym(kGam)}})), at(3, 3, vec(4, {{4, sym(kEps)}}))};
    e5.notes.push_back(
        "printed row 'e3.e3 = eps e3' fails the vanishing condition for eps != 0: w(w(e3,e3),e3) = eps^2 e3");
    e5.notes.push_back(
        "alternate reading 'e3.e3 = eps e4' is stored separately; it fails for gamma*eps != 0 at (e2,e2,e3)");
    out.push_back(std::move(e5));
  }

  {
    std::vector<PairTerm> br{at(2, 3, vec(4, {{1, num(1)}}))};
    int k = 1;
    for (auto& [om, ps] : heisenberg_rows(4)) {
      out.push_back(make("(g_{3,1}+g_1)^" + std::to_string(k), "g31+g1-" + std::to_string(k), "g_{3,1}+g_1", "G31xR",
                         k, 4, br, om, ps));
      ++k;
    }
  }

  std::vector<PairTerm> e33_e4{at(3, 3, vec(4, {{4, num(1)}}))};
  {
    CatalogEntry e = make("(g_{3,2}+g_1)^1", "g32+g1", "g_{3,2}+g_1", "G32xR", 1, 4,
                          {at(1, 3, vec(4, {{1, num(-1)}})), at(2, 3, vec(4, {{1, num(1)}, {2, num(-1)}}))}, e33_e4);
    e.notes.push_back("printed 'e3.e1 = -e3.e1 = e1' read as e3.e1 = -e1.e3 = e1, matching [e3,e1] = e1");
    out.push_back(std::move(e));
  }
  out.push_back(make("(g_{3,3}+g_1)^1", "g33+g1", "g_{3,3}+g_1", "G33xR", 1, 4,
                     {at(1, 3, vec(4, {{1, num(-1)}})), at(2, 3, vec(4, {{2, num(-1)}}))}, e33_e4));
  out.push_back(make("(g^0_{3,4}+g_1)^1", "g34_0+g1", "g^0_{3,4}+g_1", "G34_0xR", 1, 4,
                     {at(1, 3, vec(4, {{2, num(1)}})), at(2, 3, vec(4, {{1, num(1)}}))}, e33_e4));
  out.push_back(make("(g^alpha_{3,4}+g_1)^1", "g34_a+g1", "g^alpha_{3,4}+g_1", "G34_axR", 1, 4,
                     {at(1, 3, vec(4, {{1, sym(kAlp, -1)}, {2, num(1)}})),
                      at(2, 3, vec(4, {{1, num(1)}, {2, sym(kAlp, -1)}}))},
                     e33_e4, {positive(kAlp, true)}));
  out.push_back(make("(g^0_{3,5}+g_1)^1", "g35_0+g1", "g^0_{3,5}+g_1", "G35_0xR", 1, 4,
                     {at(1, 3, vec(4, {{2, num(-1)}})), at(2, 3, vec(4, {{1, num(1)}}))}, e33_e4));
  out.push_back(make("(g^alpha_{3,5}+g_1)^1", "g35_a+g1", "g^alpha_{3,5}+g_1", "G35_axR", 1, 4,
                     {at(1, 3, vec(4, {{1, sym(kAlp, -1)}, {2, num(-1)}})),
                      at(2, 3, vec(4, {{1, num(1)}, {2, sym(kAlp, -1)}}))},
                     e33_e4, {positive(kAlp, false)}));

  {
    std::vector<PairTerm> br{at(2, 4, vec(4, {{1, num(1)}})), at(3, 4, vec(4, {{2, num(1)}}))};
    out.push_back(make("g_{4,1}^1", "g41-1", "g_{4,1}", "G41", 1, 4, br,
                       {at(3, 3, vec(4, {{1, num(1)}})), at(4, 4, vec(4, {{1, sym(kEps)}}))},
                       {one_of(kEps, {0, 1, -1})}));
    out.push_back(make("g_{4,1}^2", "g41-2", "g_{4,1}", "G41", 2, 4, br, {at(4, 4, vec(4, {{1, sym(kEps)}}))},
                       {one_of(kEps, {0, 1})}));
    out.push_back(make("g_{4,1}^3", "g41-3", "g_{4,1}", "G41", 3, 4, br, {at(3, 4, vec(4, {{1, num(1)}}))}));
  }
  {
    std::vector<PairTerm> br{at(1, 4, vec(4, {{1, num(1)}})), at(3, 4, vec(4, {{2, num(1)}}))};
    out.push_back(make("g_{4,3}^1", "g43-1", "g_{4,3}", "G43", 1, 4, br, {at(4, 4, vec(4, {{2, num(1)}}))}));
    out.push_back(make("g_{4,3}^2", "g43-2", "g_{4,3}", "G43", 2, 4, br,
                       {at(3, 3, vec(4, {{2, num(1)}})), at(4, 4, vec(4, {{2, sym(kEps)}}))}, {real(kEps)}));
    out.push_back(make("g_{4,3}^3", "g43-3", "g_{4,3}", "G43", 3, 4, br, {at(3, 4, vec(4, {{2, sym(kEps)}}))},
                       {nonzero(kEps)}));
  }
  out.push_back(make("(g^{-1}_{4,8})^1", "g48", "g^{-1}_{4,8}", "G48", 1, 4,
                     {at(2, 3, vec(4, {{1, num(1)}})), at(2, 4, vec(4, {{2, num(1)}})), at(3, 4, vec(4, {{3, num(-1)}}))},
                     {at(4, 4, vec(4, {{1, num(1)}}))}));
  out.push_back(make("(g^0_{4,9})^1", "g49", "g^0_{4,9}", "G49", 1, 4,
                     {at(2, 3, vec(4, {{1, num(1)}})), at(2, 4, vec(4, {{3, num(-1)}})), at(3, 4, vec(4, {{2, num(1)}}))},
                     {at(4, 4, vec(4, {{1, num(1)}}))}));
  return out;
}

QVector eval_vec(const AffineVector& v, const ParamMap& p) {
  QVector out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.eval(p));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = build();
  return all;
}

const CatalogEntry& find_entry(std::string_view key) {
  for (const auto& e : entries())
    if (e.name == key || e.slug == key) return e;
  auto slash = key.find('/');
  if (slash != std::string_view::npos) {
    std::string v(key.substr(slash + 1));
    try {
      return find_entry(key.substr(0, slash), std::stoi(v));
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("unknown catalog entry '" + std::string(key) + "'");
}

const CatalogEntry& find_entry(std::string_view group_id, int variant) {
  for (const auto& e : entries())
    if (e.group_id == group_id && e.variant == variant) return e;
  throw std::invalid_argument("no variant " + std::to_string(variant) + " for group '" + std::string(group_id) + "'");
}

std::vector<const CatalogEntry*> entries_for_group(std::string_view group_id) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries())
    if (e.group_id == group_id) out.push_back(&e);
  return out;
}

void check_admissible(const CatalogEntry& e, const ParamMap& p) {
  for (const auto& spec : e.params) {
    auto it = p.find(spec.symbol);
    if (it == p.end()) throw std::invalid_argument(e.name + " requires parameter " + symbol_name(spec.symbol));
    for (const auto& c : spec.constraints)
      if (!c.admits(it->second))
        throw std::invalid_argument(e.name + ": " + symbol_name(spec.symbol) + " = " + it->second.str() +
                                    " violates " + c.str(spec.symbol));
  }
  for (const auto& [s, v] : p)
    if (!e.param(s)) throw std::invalid_argument(e.name + " has no parameter " + symbol_name(s));
}

LieTable lie_of(const CatalogEntry& e, const ParamMap& p) {
  check_admissible(e, p);
  LieTable l(e.dim);
  for (const auto& [ij, v] : e.brackets) l.set_bracket(ij[0], ij[1], eval_vec(v, p));
  return l;
}

OmegaForm omega_of(const CatalogEntry& e, const ParamMap& p, Reading r) {
  check_admissible(e, p);
  if (r == Reading::alternate && !e.alternate_omega)
    throw std::invalid_argument(e.name + " has no alternate reading");
  const auto& terms = r == Reading::alternate ? *e.alternate_omega : e.omega;
  OmegaForm w(e.dim);
  for (const auto& [ij, v] : terms) w.set(ij[0], ij[1], eval_vec(v, p));
  return w;
}

StructureTable instantiate(const CatalogEntry& e, const ParamMap& p, Reading r) {
  return combine(lie_of(e, p), omega_of(e, p, r));
}

std::optional<FlaggedFailure> flagged_failure(const CatalogEntry& e, const ParamMap& p, Reading r) {
  if (!e.flagged()) return std::nullopt;
  Rational eps = p.at(Symbol::epsilon);
  Rational gam = p.at(Symbol::gamma);
  if (r == Reading::printed && !eps.is_zero()) return FlaggedFailure{'c', {3, 3, 3}, e.notes.at(0)};
  if (r == Reading::alternate && !eps.is_zero() && !gam.is_zero()) return FlaggedFailure{'c', {2, 2, 3}, e.notes.at(1)};
  return std::nullopt;
}

const std::vector<Rational>& grid_values() {
  static const std::vector<Rational> g{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 2), Rational(1), Rational(2)};
  return g;
}

std::vector<ParamMap> parameter_grid(const CatalogEntry& e) {
  std::vector<ParamMap> out{ParamMap{}};
  for (const auto& spec : e.params) {
    std::vector<ParamMap> next;
    for (const auto& base : out)
      for (const auto& v : grid_values())
        if (spec.admits(v)) {
          ParamMap m = base;
          m[spec.symbol] = v;
          next.push_back(std::move(m));
        }
    out = std::move(next);
  }
  return out;
}

// ---- g_{4,1} normal form ---------------------------------------------------

LieTable g41_lie() { return lie_of(find_entry("g41-3"), {}); }

OmegaForm g41_omega(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  OmegaForm w(4);
  w.set(3, 3, {alpha, 0, 0, 0});
  w.set(4, 4, {beta, 0, 0, 0});
  w.set(3, 4, {gamma, 0, 0, 0});
  return w;
}

namespace {

// Upper-triangular automorphism of g_{4,1} with a13 = a14 = a23 = a24 = 0.
QMatrix g41_T(const Rational& a33, const Rational& a34, const Rational& a44) {
  QMatrix t(4, 4);
  t(0, 0) = a33 * a44 * a44;
  t(1, 1) = a33 * a44;
  t(2, 2) = a33;
  t(2, 3) = a34;
  t(3, 3) = a44;
  return t;
}

}  // namespace

G41NormalForm g41_normal_form(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
    throw std::invalid_argument("g41 normal form needs (alpha, beta, gamma) != 0");
  G41NormalForm nf;
  Rational a33(1), a34(0), a44(1);
  if (!alpha.is_zero()) {
    nf.class_id = 1;
    Rational d = alpha * beta - gamma * gamma;
    if (!d.is_zero()) {
      auto root = d.abs().exact_sqrt();
      if (!root)
        throw std::invalid_argument("|alpha*beta - gamma^2| = " + d.abs().str() +
                                    " is not a rational square; no rational normalising automorphism");
      a44 = *root;
    }
    a33 = a44 * a44 / alpha;
    a34 = -gamma * a44 / alpha;
    nf.canonical[Symbol::epsilon] = Rational(d.sign());
  } else if (gamma.is_zero()) {
    nf.class_id = 2;
    a33 = beta;
    nf.canonical[Symbol::epsilon] = Rational(1);
  } else {
    nf.class_id = 3;
    a44 = gamma;
    a34 = -beta / Rational(2);
  }
  const CatalogEntry& e = find_entry("G41", nf.class_id);
  nf.canonical_omega = omega_of(e, nf.canonical);
  nf.witness = g41_T(a33, a34, a44);
  OmegaForm mu = pullback_omega(g41_omega(alpha, beta, gamma), g41_lie(), nf.witness);
  if (!(mu == nf.canonical_omega)) throw std::logic_error("g41 normal form witness does not reach the canonical form");
  return nf;
}

}  // namespace symleib
