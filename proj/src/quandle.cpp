#include "symleib/quandle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "check_util.hpp"

namespace symleib {

using nlohmann::json;

// ---------------------------------------------------------------- quadric

namespace {

// Symmetric congruence diagonalisation over Q: returns P with P^T S P diagonal.
QMatrix diagonalize(QMatrix s, std::vector<Rational>& diag) {
  std::size_t k = s.rows();
  QMatrix p = QMatrix::identity(k);
  auto add_to = [&](std::size_t i, std::size_t j, const Rational& f) {  // basis_i += f basis_j
    for (std::size_t r = 0; r < k; ++r) s(r, i) = s(r, i) + f * s(r, j);
    for (std::size_t c = 0; c < k; ++c) s(i, c) = s(i, c) + f * s(j, c);
    for (std::size_t r = 0; r < k; ++r) p(r, i) = p(r, i) + f * p(r, j);
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (s(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < k && s(j, j).is_zero()) ++j;
      if (j < k) {
        add_to(i, j, Rational(1));
      } else {
        j = i + 1;
        while (j < k && s(i, j).is_zero()) ++j;
        if (j == k) continue;
        add_to(i, j, Rational(1));  // s(i,i) becomes 2 s(i,j)
      }
    }
    for (std::size_t j = i + 1; j < k; ++j)
      if (!s(j, i).is_zero()) add_to(j, i, -(s(j, i) / s(i, i)));
  }
  diag.clear();
  for (std::size_t i = 0; i < k; ++i) diag.push_back(s(i, i));
  return p;
}

std::string monomial(const std::string& a, const std::string& b) { return a == b ? a + "^2" : a + " " + b; }

}  // namespace

std::string QuadricSolution::describe() const {
  std::string out;
  std::size_t k = form.rows();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rational c = a == b ? form(a, b) : form(a, b) * Rational(2);
      if (c.is_zero()) continue;
      std::string term = monomial(var_names[a], var_names[b]);
      bool neg = c.sign() < 0;
      Rational m = c.abs();
      std::string coef = m == Rational(1) ? "" : m.str() + " ";
      if (out.empty())
        out = (neg ? "-" : "") + coef + term;
      else
        out += (neg ? " - " : " + ") + coef + term;
    }
  return out.empty() ? "0" : out;
}

QuadricSolution solve_quadric(const CentralForm& f) {
  int k = f.quotient_dim(), n = f.group().dim();
  QuadricSolution sol;
  auto idx = f.kappa_coords();
  for (int a = 0; a < k; ++a)
    sol.var_names.push_back(idx ? f.group().coord_names()[(*idx)[a]] : "v" + std::to_string(a + 1));

  // One Gram matrix per output coordinate; all must be proportional.
  std::optional<QMatrix> first;
  for (int i = 0; i < n; ++i) {
    QMatrix s(k, k);
    bool any = false;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        s(a, b) = f.beta_coeff(a, b)[i];
        any = any || !s(a, b).is_zero();
      }
    if (!any) continue;
    if (!first) {
      first = s;
      continue;
    }
    // proportionality test: s = lambda * first
    std::optional<Rational> lambda;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const Rational& x = (*first)(a, b);
        if (x.is_zero()) {
          if (!s(a, b).is_zero()) throw std::domain_error("quadric system with independent forms");
        } else if (!lambda) {
          lambda = s(a, b) / x;
        } else if (s(a, b) != *lambda * x) {
          throw std::domain_error("quadric system with independent forms");
        }
      }
  }
  sol.form = first ? *first : QMatrix(k, k);
  sol.congruence = diagonalize(sol.form, sol.diagonal);

  const QMatrix& P = sol.congruence;
  std::vector<int> nz, free;
  for (int i = 0; i < k; ++i) (sol.diagonal[i].is_zero() ? free : nz).push_back(i);

  auto branch = [&](const std::vector<Vector>& extra) {
    Matrix m(k, free.size() + extra.size());
    for (std::size_t c = 0; c < free.size(); ++c)
      for (int r = 0; r < k; ++r) m(r, c) = Scalar(P(r, free[c]));
    for (std::size_t c = 0; c < extra.size(); ++c)
      for (int r = 0; r < k; ++r) m(r, free.size() + c) = extra[c][r];
    return m;
  };

  if (nz.size() <= 1) {
    sol.branches.push_back(branch({}));
  } else if (nz.size() == 2) {
    int i = nz[0], j = nz[1];
    Rational r = -(sol.diagonal[j] / sol.diagonal[i]);  // t_i^2 = r t_j^2
    if (r.sign() < 0) {
      sol.branches.push_back(branch({}));
    } else {
      auto root = r.exact_sqrt();
      for (int sgn : {1, -1}) {
        Scalar s = root ? Scalar(*root * Rational(sgn)) : Scalar(sgn * std::sqrt(r.to_double()));
        Vector dir(k, Scalar(0));
        for (int row = 0; row < k; ++row) dir[row] = s * Scalar(P(row, i)) + Scalar(P(row, j));
        sol.branches.push_back(branch({dir}));
      }
    }
  } else {
    throw std::domain_error("quadric of rank > 2 is not supported");
  }
  sol.degenerate = std::all_of(sol.branches.begin(), sol.branches.end(), [](const Matrix& m) { return m.cols() == 0; });
  return sol;
}

QuandlePredicate::QuandlePredicate(RackStructure rack) : rack_(std::move(rack)) {
  if (rack_.central_form()) {
    quadric_ = solve_quadric(*rack_.central_form());
  } else if (rack_.mode() != RackMode::conjugation && rack_.mode() != RackMode::trivial) {
    throw std::invalid_argument("membership needs a generic, conjugation or trivial rack");
  }
}

Vector QuandlePredicate::quadric_value(const Vector& p) const {
  const CentralForm* f = rack_.central_form();
  if (!f) return Vector(group().dim(), Scalar(0));
  Vector k = f->kappa(p);
  return f->beta(k, k);
}

bool QuandlePredicate::contains(const Vector& p, double eps) const {
  if (whole_group()) return true;
  for (const auto& v : quadric_value(p))
    if (!approx_equal(v, Scalar(0), eps)) return false;
  return true;
}

Vector QuandlePredicate::sample(Rng& rng) const {
  const GroupSpec& g = group();
  Vector r = random_coords(g, rng);
  if (whole_group()) return r;
  const CentralForm& f = *rack_.central_form();
  const Matrix& m = quadric_.branches[static_cast<std::size_t>(rng.integer(0, quadric_.branches.size() - 1))];
  Vector v(m.rows(), Scalar(0));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Scalar u = g.regime() == Regime::exact ? Scalar(rng.rational(6, 4)) : Scalar(rng.uniform(-2.0, 2.0));
    for (std::size_t row = 0; row < m.rows(); ++row) v[row] += m(row, c) * u;
  }
  Vector kr = f.kappa(r);
  for (std::size_t a = 0; a < v.size(); ++a) v[a] -= kr[a];
  Vector s = f.section_coords(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += s[i];
  return g.normalize(std::move(r));
}

QSample sample_Q(const QuandlePredicate& q, std::size_t n, std::uint64_t seed) {
  QSample out;
  out.degenerate = !q.whole_group() && q.quadric().degenerate;
  Rng rng = Rng::stream(seed, "sample_Q:" + q.rack().label());
  for (std::size_t i = 0; i < n; ++i) out.points.push_back(q.sample(rng));
  return out;
}

// ---------------------------------------------------------------- property checks

AxiomReport check_quandle(const QuandlePredicate& q, const CheckOptions& opt) {
  using detail::Tuple;
  AxiomReport rep;
  const RackStructure& r = q.rack();
  const GroupSpec& G = q.group();
  rep.subject = "Q(" + r.label() + ")";
  detail::Recorder rec(rep, opt, {"idempotent", "closed", "closed_inverse", "self_distributive"});
  auto sampler = [&q](Rng& rng) { return q.sample(rng); };
  auto keep = [&q](const Vector& p) { return q.contains(p); };
  const Vector zero(G.dim(), Scalar(0));
  detail::sweep(rep, G, opt, "idempotent", 1, sampler, keep, [&](const Tuple& t) {
    rec.check("idempotent", {*t[0]}, r.op(*t[0], *t[0]), *t[0]);
    return true;
  });
  detail::sweep(rep, G, opt, "closed", 2, sampler, keep, [&](const Tuple& t) {
    const Vector &x = *t[0], &y = *t[1];
    rec.check("closed", {x, y}, q.quadric_value(r.op(x, y)), zero);
    rec.check("closed_inverse", {x, y}, q.quadric_value(r.op_inverse(x, y)), zero);
    return true;
  });
  detail::sweep(rep, G, opt, "quandle_sd", 3, sampler, keep, [&](const Tuple& t) {
    const Vector &x = *t[0], &y = *t[1], &z = *t[2];
    rec.check("self_distributive", {x, y, z}, r.op(r.op(x, y), z), r.op(r.op(x, z), r.op(y, z)));
    return true;
  });
  return rep;
}

json Verdict::to_json() const {
  json j = {{"holds", holds}, {"checked", checked}};
  j["counterexample"] = counterexample ? symleib::to_json(*counterexample) : json(nullptr);
  if (!grid.empty()) j["grid"] = grid;
  return j;
}

namespace {

// Drives a tuple identity over random member tuples and an optional member grid.
Verdict tuple_verdict(const QuandlePredicate& q, const std::string& name, int arity, std::size_t samples,
                      std::uint64_t seed, double eps, std::size_t grid_budget,
                      const std::function<std::pair<Vector, Vector>(const detail::Tuple&)>& sides) {
  Verdict v;
  AxiomReport scratch;
  CheckOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.eps = eps;
  opt.grid = grid_budget > 0;
  opt.grid_budget = grid_budget;
  detail::sweep(
      scratch, q.group(), opt, name + ":" + q.rack().label(), arity, [&q](Rng& rng) { return q.sample(rng); },
      [&q](const Vector& p) { return q.contains(p); },
      [&](const detail::Tuple& t) {
        ++v.checked;
        auto [lhs, rhs] = sides(t);
        if (detail::vectors_agree(lhs, rhs, eps)) return true;
        std::vector<Vector> args;
        for (const Vector* p : t) args.push_back(*p);
        v.holds = false;
        v.counterexample = Counterexample{name, std::move(args), lhs, rhs, max_deviation(lhs, rhs)};
        return false;
      });
  if (!scratch.grids.empty()) v.grid = scratch.grids.front();
  return v;
}

}  // namespace

Verdict is_quasi_trivial(const QuandlePredicate& q, std::size_t pairs, std::uint64_t seed, double eps) {
  const GroupSpec& G = q.group();
  return tuple_verdict(q, "quasi_trivial", 2, pairs, seed, eps, 0, [&G](const detail::Tuple& t) {
    const Vector &g = *t[0], &k = *t[1];
    Vector c = G.mul(G.mul(G.inv(k), g), k);  // k^{-1} g k
    Vector comm = G.mul(G.mul(G.inv(g), G.inv(c)), G.mul(g, c));
    return std::pair{comm, G.identity()};
  });
}

Verdict is_medial(const QuandlePredicate& q, std::size_t samples, std::uint64_t seed, double eps,
                  std::size_t grid_budget) {
  const RackStructure& r = q.rack();
  return tuple_verdict(q, "medial", 4, samples, seed, eps, grid_budget, [&r](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1], &z = *t[2], &w = *t[3];
    return std::pair{r.op(r.op(x, y), r.op(z, w)), r.op(r.op(x, z), r.op(y, w))};
  });
}

Verdict is_kei(const QuandlePredicate& q, std::size_t samples, std::uint64_t seed, double eps,
               std::size_t grid_budget) {
  const RackStructure& r = q.rack();
  return tuple_verdict(q, "kei", 2, samples, seed, eps, grid_budget, [&r](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1];
    return std::pair{r.op(r.op(y, x), x), y};
  });
}

// ---------------------------------------------------------------- printed membership sets

namespace {

Scalar pval(const ParamMap& p, Symbol s) {
  auto it = p.find(s);
  return it == p.end() ? Scalar(0) : Scalar(it->second);
}

}  // namespace

std::optional<PrintedSet> printed_set(const CatalogEntry& e, const ParamMap& p) {
  const std::string& s = e.slug;
  Scalar eps = pval(p, Symbol::epsilon), gam = pval(p, Symbol::gamma);
  using F = std::function<Scalar(const Vector&)>;
  auto coord = [](int i) -> F { return [i](const Vector& v) { return v[i]; }; };
  auto prod = [](int i, int j) -> F { return [i, j](const Vector& v) { return v[i] * v[j]; }; };
  auto sum = [](int i, int j) -> F { return [i, j](const Vector& v) { return v[i] + v[j]; }; };
  auto sq_eps = [eps](int i, int j) -> F { return [=](const Vector& v) { return v[i] * v[i] + eps * v[j] * v[j]; }; };
  // G_{3,1} coordinates (a,b,c) = 0..2; four-dimensional groups (t,a,b,c) = 0..3
  if (s == "g31-1") return PrintedSet{"b=-c", sum(1, 2)};
  if (s == "g31-2") return PrintedSet{"c=0", coord(2)};
  if (s == "g31-3" || s == "g31-4") return PrintedSet{"bc=0", prod(1, 2)};
  if (s == "g21+2g1-1") return PrintedSet{"all points (conjugation)", [](const Vector&) { return Scalar(0); }};
  if (s == "g21+2g1-2" || s == "g21+2g1-3") return PrintedSet{"a=0", coord(1)};
  if (s == "g21+2g1-4") return PrintedSet{"ac=0", prod(1, 3)};
  if (s == "g21+2g1-5") return PrintedSet{"gamma a=0", [gam](const Vector& v) { return gam * v[1]; }};
  if (s == "g31+g1-1") return PrintedSet{"a=-b", sum(1, 2)};
  if (s == "g31+g1-2" || s == "g31+g1-3") return PrintedSet{"b=0", coord(2)};
  if (s == "g31+g1-4") return PrintedSet{"ab=0", prod(1, 2)};
  if (e.group_id.rfind("G3", 0) == 0 && e.dim == 4) return PrintedSet{"b=0", coord(2)};  // G32 .. G35
  if (s == "g41-1" || s == "g43-2") return PrintedSet{"b^2+eps c^2=0", sq_eps(2, 3)};
  if (s == "g41-2") return PrintedSet{"eps=0 or c=0", [eps](const Vector& v) { return eps * v[3]; }};
  if (s == "g41-3" || s == "g43-3") return PrintedSet{"bc=0", prod(2, 3)};
  if (s == "g43-1" || s == "g48" || s == "g49") return PrintedSet{"c=0", coord(3)};
  return std::nullopt;
}

json PrintedSetReport::to_json() const {
  json ex = json::array();
  for (const auto& v : examples) ex.push_back(vector_to_json(v));
  return {{"entry", entry},
          {"params", params},
          {"printed", printed},
          {"quadric", quadric},
          {"grid_points", points},
          {"sampled_members", sampled},
          {"agree", agree()},
          {"member_not_printed", member_not_printed},
          {"printed_not_member", printed_not_member},
          {"examples", ex}};
}

PrintedSetReport compare_printed_set(const CatalogEntry& e, const ParamMap& p, std::size_t samples, std::uint64_t seed) {
  PrintedSetReport rep;
  rep.entry = e.slug;
  rep.params = format_params(p);
  auto ps = printed_set(e, p);
  if (!ps) throw std::invalid_argument("no printed membership set for " + e.slug);
  rep.printed = ps->text;
  QuandlePredicate q(RackStructure::generic(e, p));
  rep.quadric = q.quadric().describe() + " = 0";
  // Rational grid coordinates keep both tests exact even on floating groups.
  for (const auto& v : grid_points(e.dim, {2, e.dim})) {
    ++rep.points;
    bool member = q.contains(v);
    bool printed = ps->equation(v).is_zero();
    if (member == printed) continue;
    (member ? rep.member_not_printed : rep.printed_not_member)++;
    if (rep.examples.size() < 3) rep.examples.push_back(v);
  }
  // Sampled members catch non-integer branches the grid misses.
  for (const auto& v : sample_Q(q, samples, seed).points) {
    ++rep.sampled;
    if (approx_equal(ps->equation(v), Scalar(0))) continue;
    ++rep.member_not_printed;
    if (rep.examples.size() < 3) rep.examples.push_back(v);
  }
  return rep;
}

// ---------------------------------------------------------------- quasi-triviality statements

const std::vector<QuasiTrivialClaim>& quasi_trivial_claims() {
  static const std::vector<QuasiTrivialClaim> claims = [] {
    std::vector<QuasiTrivialClaim> out;
    auto all = [&](const std::string& slug) {
      for (auto& p : parameter_grid(find_entry(slug))) out.push_back({slug, p, true});
    };
    auto split = [&](const std::string& slug, const std::function<bool(const Rational&)>& claimed) {
      for (auto& p : parameter_grid(find_entry(slug))) out.push_back({slug, p, claimed(p.at(Symbol::epsilon))});
    };
    for (const char* s : {"g31-1", "g31-2", "g31-3", "g31-4"}) all(s);
    for (auto& p : parameter_grid(find_entry("g21+2g1-2")))
      if (!p.at(Symbol::epsilon).is_zero()) out.push_back({"g21+2g1-2", p, true});
    all("g21+2g1-3");
    for (const char* s : {"g31+g1-1", "g31+g1-2", "g31+g1-3", "g31+g1-4"}) all(s);
    for (const char* s : {"g32+g1", "g33+g1", "g34_0+g1", "g34_a+g1", "g35_0+g1", "g35_a+g1"}) all(s);
    split("g41-1", [](const Rational& e) { return e.is_zero() || e == Rational(1); });
    split("g41-2", [](const Rational& e) { return !e.is_zero(); });
    all("g41-3");
    all("g43-1");
    split("g43-2", [](const Rational& e) { return e == Rational(1); });
    all("g48");
    all("g49");
    return out;
  }();
  return claims;
}

json ClaimOutcome::to_json() const {
  return {{"entry", claim.slug},
          {"params", format_params(claim.params)},
          {"claimed_quasi_trivial", claim.claimed},
          {"status", status},
          {"verdict", verdict.to_json()}};
}

ClaimOutcome evaluate_claim(const QuasiTrivialClaim& c, std::uint64_t seed, std::size_t claimed_pairs,
                            std::size_t search_pairs) {
  ClaimOutcome out{c, {}, {}};
  QuandlePredicate q(RackStructure::generic(find_entry(c.slug), c.params));
  out.verdict = is_quasi_trivial(q, c.claimed ? claimed_pairs : search_pairs, seed);
  if (c.claimed)
    out.status = out.verdict.holds ? "confirmed" : "contradicted";
  else
    out.status = out.verdict.holds ? "inconclusive" : "counterexample";
  return out;
}

// ---------------------------------------------------------------- finite quandles

namespace {

using Perm = FiniteQuandle::Perm;

Perm compose(const Perm& a, const Perm& b) {  // a o b
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

Vector ints(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Verdict finite_verdict(const std::string& name, std::vector<int> args, int lhs, int rhs) {
  Verdict v;
  v.holds = false;
  Vector a;
  for (int x : args) a.emplace_back(x);
  v.counterexample = Counterexample{name, {a}, ints({lhs}), ints({rhs}), std::abs(double(lhs - rhs))};
  return v;
}

}  // namespace

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  int m = size();
  if (m == 0) throw std::invalid_argument("empty quandle table");
  inverse_.assign(m, std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(table_[x].size()) != m) throw std::invalid_argument("quandle table must be square");
    for (int y = 0; y < m; ++y) {
      int z = table_[x][y];
      if (z < 0 || z >= m) throw std::invalid_argument("quandle table entry out of range");
      if (inverse_[y][z] >= 0)
        throw std::invalid_argument("right translation by " + std::to_string(y) + " is not a bijection");
      inverse_[y][z] = x;
    }
  }
}

FiniteQuandle FiniteQuandle::trivial(int m) {
  if (m < 1) throw std::invalid_argument("size must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x) std::fill(t[x].begin(), t[x].end(), x);
  return FiniteQuandle(std::move(t), "T" + std::to_string(m));
}

FiniteQuandle FiniteQuandle::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  return FiniteQuandle(std::move(t), "R" + std::to_string(n));
}

FiniteQuandle FiniteQuandle::alexander(int n, int t) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  int tt = ((t % n) + n) % n;
  if (std::gcd(tt, n) != 1) throw std::invalid_argument("t=" + std::to_string(t) + " is not a unit mod " + std::to_string(n));
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x][y] = ((tt * x + (1 - tt) * y) % n + n) % n;
  return FiniteQuandle(std::move(tab), "Alex(Z" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
}

FiniteQuandle FiniteQuandle::conjugation_closure(const std::vector<Perm>& generators, std::string name) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  std::size_t deg = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != deg) throw std::invalid_argument("permutations of different degrees");
    Perm s = g;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < deg; ++i)
      if (s[i] != static_cast<int>(i)) throw std::invalid_argument("not a permutation");
  }
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  for (const auto& g : generators)
    if (index.emplace(g, static_cast<int>(elems.size())).second) elems.push_back(g);
  for (std::size_t done = 0; done < elems.size(); ++done) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      for (auto [a, b] : {std::pair{done, j}, std::pair{j, done}}) {
        Perm c = compose(invert(elems[b]), compose(elems[a], elems[b]));
        if (index.emplace(c, static_cast<int>(elems.size())).second) elems.push_back(c);
      }
    }
    if (elems.size() > 5000) throw std::invalid_argument("conjugation closure too large");
  }
  int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x][y] = index.at(compose(invert(elems[y]), compose(elems[x], elems[y])));
  FiniteQuandle q(std::move(t), std::move(name));
  q.elements_ = std::move(elems);
  return q;
}

AxiomReport FiniteQuandle::check_axioms() const {
  AxiomReport rep;
  rep.subject = name_;
  CheckOptions opt;
  detail::Recorder rec(rep, opt, {"idempotent", "bijective", "self_distributive"});
  int m = size();
  for (int x = 0; x < m; ++x) {
    rec.check("idempotent", {ints({x})}, ints({op(x, x)}), ints({x}));
    for (int y = 0; y < m; ++y) {
      rec.check("bijective", {ints({x, y})}, ints({op(op_inverse(x, y), y), op_inverse(op(x, y), y)}), ints({x, x}));
      for (int z = 0; z < m; ++z)
        rec.check("self_distributive", {ints({x, y, z})}, ints({op(op(x, y), z)}), ints({op(op(x, z), op(y, z))}));
    }
  }
  return rep;
}

Verdict FiniteQuandle::is_kei() const {
  Verdict v;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      ++v.checked;
      if (op(op(y, x), x) != y) {
        auto f = finite_verdict("kei", {x, y}, op(op(y, x), x), y);
        f.checked = v.checked;
        return f;
      }
    }
  return v;
}

Verdict FiniteQuandle::is_medial() const {
  Verdict v;
  int m = size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w) {
          ++v.checked;
          int l = op(op(x, y), op(z, w)), r = op(op(x, z), op(y, w));
          if (l != r) {
            auto f = finite_verdict("medial", {x, y, z, w}, l, r);
            f.checked = v.checked;
            return f;
          }
        }
  return v;
}

std::vector<FiniteQuandle::Perm> FiniteQuandle::inner_group() const {
  int m = size();
  std::vector<Perm> gens;
  for (int y = 0; y < m; ++y) {
    Perm r(m);
    for (int x = 0; x < m; ++x) r[x] = op(x, y);
    gens.push_back(std::move(r));
  }
  Perm id(m);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm c = compose(g, elems[i]);
      if (seen.insert(c).second) elems.push_back(std::move(c));
      if (elems.size() > 200000) throw std::runtime_error("inner automorphism group too large to enumerate");
    }
  return elems;
}

std::size_t FiniteQuandle::inner_group_order() const { return inner_group().size(); }

Verdict FiniteQuandle::is_quasi_trivial() const {
  Verdict v;
  for (const auto& phi : inner_group())
    for (int x = 0; x < size(); ++x) {
      ++v.checked;
      if (op(x, phi[x]) != x) {
        auto f = finite_verdict("quasi_trivial", {x, phi[x]}, op(x, phi[x]), x);
        f.checked = v.checked;
        return f;
      }
    }
  return v;
}

std::vector<int> FiniteQuandle::orbit(int x) const {
  if (x < 0 || x >= size()) throw std::out_of_range("element out of range");
  std::vector<char> seen(size(), 0);
  std::vector<int> queue{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int y = 0; y < size(); ++y)
      for (int z : {op(queue[i], y), op_inverse(queue[i], y)})
        if (!seen[z]) {
          seen[z] = 1;
          queue.push_back(z);
        }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> FiniteQuandle::center() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool fixed = true;
    for (int y = 0; y < size() && fixed; ++y) fixed = op(x, y) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

json FiniteQuandle::to_json() const { return {{"size", size()}, {"table", table_}}; }

FiniteQuandle FiniteQuandle::from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table"))
    throw std::invalid_argument("quandle JSON needs \"size\" and \"table\"");
  if (!j.at("size").is_number_integer()) throw std::invalid_argument("\"size\" must be an integer");
  int m = j.at("size").get<int>();
  std::vector<std::vector<int>> t;
  try {
    t = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    throw std::invalid_argument("\"table\" must be a matrix of integers");
  }
  if (static_cast<int>(t.size()) != m) throw std::invalid_argument("table size does not match \"size\"");
  return FiniteQuandle(std::move(t));
}

}  // namespace symleib
