#include "symleib/rack.hpp"

#include <algorithm>
#include <stdexcept>

#include "check_util.hpp"

namespace symleib {

using nlohmann::json;

std::string to_string(RackMode m) {
  switch (m) {
    case RackMode::generic: return "generic";
    case RackMode::closed_form: return "closed_form";
    case RackMode::conjugation: return "conjugation";
    case RackMode::trivial: return "trivial";
    case RackMode::custom: return "custom";
  }
  return "?";
}

RackStructure::RackStructure(GroupPtr g, RackMode m, std::string label, CoordOp op,
                             std::shared_ptr<const CentralForm> form)
    : group_(std::move(g)), mode_(m), label_(std::move(label)), op_(std::move(op)), form_(std::move(form)) {}

namespace {

std::string entry_label(const CatalogEntry& e, const ParamMap& p) {
  std::string s = e.slug;
  if (!p.empty()) s += " [" + format_params(p) + "]";
  return s;
}

}  // namespace

RackStructure RackStructure::generic(const CatalogEntry& e, const ParamMap& p, Reading r) {
  check_admissible(e, p);
  auto form = std::make_shared<const CentralForm>(make_group(e.group_id, p), lie_of(e, p), omega_of(e, p, r));
  std::string label = entry_label(e, p);
  if (r == Reading::alternate) label += " (alternate)";
  return generic(std::move(form), std::move(label));
}

RackStructure RackStructure::generic(std::shared_ptr<const CentralForm> form, std::string label) {
  GroupPtr g = form->group_ptr();
  const CentralForm* f = form.get();
  CoordOp op = [g, f](const Vector& h, const Vector& x) {
    Vector conj = g->mul(g->mul(g->inv(x), h), x);
    return g->mul(conj, f->chi(h, x));
  };
  return RackStructure(g, RackMode::generic, std::move(label), std::move(op), std::move(form));
}

RackStructure RackStructure::closed_form(const CatalogEntry& e, const ParamMap& p) {
  auto op = closed_form_op(e, p);
  if (!op) throw std::invalid_argument("no closed form for " + e.slug);
  GroupPtr g = make_group(e.group_id, p);
  CoordOp wrapped = [g, f = *op](const Vector& h, const Vector& x) { return g->normalize(f(h, x)); };
  return RackStructure(g, RackMode::closed_form, entry_label(e, p) + " (display)", std::move(wrapped));
}

RackStructure RackStructure::conjugation(GroupPtr g) {
  const GroupSpec* s = g.get();
  CoordOp op = [s](const Vector& h, const Vector& x) { return s->mul(s->mul(s->inv(x), h), x); };
  std::string label = "Conj(" + g->id() + ")";
  return RackStructure(std::move(g), RackMode::conjugation, std::move(label), std::move(op));
}

RackStructure RackStructure::trivial(GroupPtr g) {
  std::string label = "Triv(" + g->id() + ")";
  return RackStructure(std::move(g), RackMode::trivial, std::move(label), [](const Vector& h, const Vector&) { return h; });
}

RackStructure RackStructure::custom(GroupPtr g, std::string label, CoordOp op) {
  return RackStructure(std::move(g), RackMode::custom, std::move(label), std::move(op));
}

Vector RackStructure::op_inverse(const Vector& h, const Vector& g) const {
  if (mode_ == RackMode::trivial) return h;
  return op_(h, group_->inv(g));
}

GroupPoint rack_op(const RackStructure& r, const GroupPoint& h, const GroupPoint& g) {
  if (!h.spec->same_as(r.group()) || !g.spec->same_as(r.group()))
    throw std::invalid_argument("point does not belong to " + r.group().id());
  return {r.group_ptr(), r.op(h.coords, g.coords)};
}

GroupPoint rack_op_inverse(const RackStructure& r, const GroupPoint& h, const GroupPoint& g) {
  if (!h.spec->same_as(r.group()) || !g.spec->same_as(r.group()))
    throw std::invalid_argument("point does not belong to " + r.group().id());
  return {r.group_ptr(), r.op_inverse(h.coords, g.coords)};
}

json to_json(const Counterexample& c) {
  json args = json::array();
  for (const auto& a : c.args) args.push_back(vector_to_json(a));
  return {{"property", c.property},
          {"args", args},
          {"lhs", vector_to_json(c.lhs)},
          {"rhs", vector_to_json(c.rhs)},
          {"deviation", c.deviation}};
}

bool AxiomReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.holds; });
}

const PropertyTally* AxiomReport::find(const std::string& name) const {
  for (const auto& t : properties)
    if (t.name == name) return &t;
  return nullptr;
}

bool AxiomReport::holds(const std::string& name) const {
  const PropertyTally* t = find(name);
  if (!t) throw std::out_of_range("no property '" + name + "'");
  return t->holds;
}

json AxiomReport::to_json() const {
  json props = json::array();
  for (const auto& t : properties)
    props.push_back({{"name", t.name}, {"holds", t.holds}, {"checks", t.checks}, {"max_deviation", t.max_deviation}});
  json cex = json::array();
  for (const auto& c : counterexamples) cex.push_back(symleib::to_json(c));
  return {{"subject", subject}, {"ok", ok()}, {"properties", props}, {"counterexamples", cex}, {"grids", grids}};
}

namespace {

using detail::Recorder;
using detail::sweep;
using detail::vectors_agree;

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

AxiomReport check_rack_axioms(const RackStructure& r, const CheckOptions& opt) {
  AxiomReport rep;
  rep.subject = r.label();
  Recorder rec(rep, opt, {"pointed", "self_distributive", "bijective"});
  const GroupSpec& G = r.group();
  const Vector e = G.identity();
  sweep(rep, G, opt, "pointed", 1, [&](const detail::Tuple& t) {
    const Vector& x = *t[0];
    rec.check("pointed", {x}, r.op(x, e), x);
    rec.check("pointed", {x}, r.op(e, x), e);
  });
  sweep(rep, G, opt, "bijective", 2, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1];
    rec.check("bijective", {x, y}, r.op_inverse(r.op(x, y), y), x);
    rec.check("bijective", {x, y}, r.op(r.op_inverse(x, y), y), x);
  });
  sweep(rep, G, opt, "self_distributive", 3, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1], &z = *t[2];
    rec.check("self_distributive", {x, y, z}, r.op(r.op(x, y), z), r.op(r.op(x, z), r.op(y, z)));
  });
  return rep;
}

AxiomReport check_group_axioms(const GroupSpec& g, const CheckOptions& opt) {
  AxiomReport rep;
  rep.subject = g.id();
  Recorder rec(rep, opt, {"identity", "inverse", "associative", "matrix_homomorphism", "chart"});
  const Vector e = g.identity();
  std::size_t n = g.to_matrix(e).rows();
  rec.check("identity", {e}, flatten(g.to_matrix(e)), flatten(Matrix::identity(n)));
  sweep(rep, g, opt, "group1", 1, [&](const detail::Tuple& t) {
    const Vector& x = *t[0];
    rec.check("identity", {x}, g.mul(x, e), x);
    rec.check("identity", {x}, g.mul(e, x), x);
    rec.check("inverse", {x}, g.mul(x, g.inv(x)), e);
    rec.check("inverse", {x}, g.mul(g.inv(x), x), e);
    rec.check("chart", {x}, g.from_matrix(g.to_matrix(x)), x);
  });
  sweep(rep, g, opt, "group2", 2, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1];
    rec.check("matrix_homomorphism", {x, y}, flatten(g.to_matrix(g.mul(x, y))),
              flatten(g.to_matrix(x) * g.to_matrix(y)));
  });
  sweep(rep, g, opt, "group3", 3, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1], &z = *t[2];
    rec.check("associative", {x, y, z}, g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
  });
  return rep;
}

AxiomReport check_chi_identities(const CentralForm& f, const CheckOptions& opt) {
  AxiomReport rep;
  const GroupSpec& g = f.group();
  rep.subject = "chi on " + g.id();
  Recorder rec(rep, opt,
               {"symmetric", "unit", "additive", "inverse", "absorbs_central", "kappa_homomorphism", "central",
                "central_power"});
  const Vector e = g.identity();
  sweep(rep, g, opt, "chi2", 2, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1];
    Vector c = f.chi(x, y);
    rec.check("symmetric", {x, y}, c, f.chi(y, x));
    rec.check("unit", {x}, f.chi(x, e), e);
    rec.check("inverse", {x, y}, f.chi(g.inv(x), y), g.inv(c));
    Vector sum = f.kappa(x);
    Vector ky = f.kappa(y);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += ky[i];
    rec.check("kappa_homomorphism", {x, y}, f.kappa(g.mul(x, y)), sum);
    rec.check("central", {x, y}, g.mul(c, x), g.mul(x, c));
    Vector pow = c;
    for (int k = 2; k <= 3; ++k) {
      pow = g.mul(pow, c);
      Vector scaled = c;
      for (auto& s : scaled) s *= Scalar(k);
      rec.check("central_power", {x, y}, pow, scaled);
    }
  });
  sweep(rep, g, opt, "chi3", 3, [&](const detail::Tuple& t) {
    const Vector &x = *t[0], &y = *t[1], &z = *t[2];
    rec.check("additive", {x, y, z}, f.chi(g.mul(x, y), z), g.mul(f.chi(x, z), f.chi(y, z)));
    rec.check("absorbs_central", {x, y, z}, f.chi(g.mul(x, f.chi(y, z)), z), f.chi(x, z));
  });
  return rep;
}

json CrossCheckReport::to_json(const GroupSpec& g) const {
  json names = json::array();
  for (int c : coords) names.push_back(g.coord_names()[c]);
  json disc = json::array();
  for (const auto& d : discrepancies)
    disc.push_back({{"h", vector_to_json(d.h)},
                    {"g", vector_to_json(d.g)},
                    {"generic", vector_to_json(d.generic)},
                    {"display", vector_to_json(d.closed)},
                    {"deviation", d.deviation}});
  return {{"entry", entry},       {"params", params},   {"has_display", has_display},
          {"agree", agree},       {"samples", samples}, {"max_deviation", max_deviation},
          {"coordinates", names}, {"discrepancies", disc}};
}

CrossCheckReport cross_check_modes(const CatalogEntry& e, const ParamMap& p, const CheckOptions& opt) {
  CrossCheckReport rep;
  rep.entry = e.slug;
  rep.params = format_params(p);
  RackStructure gen = RackStructure::generic(e, p);
  if (!closed_form_op(e, p)) return rep;
  rep.has_display = true;
  RackStructure disp = RackStructure::closed_form(e, p);
  const GroupSpec& G = gen.group();
  AxiomReport scratch;
  auto compare = [&](const Vector& h, const Vector& g) {
    ++rep.samples;
    Vector a = gen.op(h, g), b = disp.op(h, g);
    double dev = max_deviation(a, b);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (vectors_agree(a, b, opt.eps)) return;
    rep.agree = false;
    ModeDiscrepancy d{h, g, a, b, {}, dev};
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!approx_equal(a[i], b[i], opt.eps)) {
        d.coords.push_back(static_cast<int>(i));
        if (std::find(rep.coords.begin(), rep.coords.end(), static_cast<int>(i)) == rep.coords.end())
          rep.coords.push_back(static_cast<int>(i));
      }
    if (rep.discrepancies.size() < opt.max_counterexamples) rep.discrepancies.push_back(std::move(d));
  };
  sweep(scratch, G, opt, "crosscheck", 2, [&](const detail::Tuple& t) { compare(*t[0], *t[1]); });
  std::sort(rep.coords.begin(), rep.coords.end());
  return rep;
}

Matrix ad_map(const RackStructure& r, const Vector& x) {
  const GroupSpec& G = r.group();
  int n = G.dim();
  Matrix J(n, n);
  auto f = [&](int j, Scalar s) {
    Vector h = G.identity();
    h[j] = s;
    return r.op(h, x);
  };
  for (int j = 0; j < n; ++j) {
    Vector d(n);
    if (G.regime() == Regime::exact) {
      // five-point stencil with unit step; exact for polynomials of degree <= 4
      Vector m2 = f(j, Scalar(-2)), m1 = f(j, Scalar(-1)), p1 = f(j, Scalar(1)), p2 = f(j, Scalar(2));
      for (int i = 0; i < n; ++i) d[i] = (m2[i] - Scalar(8) * m1[i] + Scalar(8) * p1[i] - p2[i]) / Scalar(12);
    } else {
      const double h = kDefaultEpsFd;
      Vector p = f(j, Scalar(h)), m = f(j, Scalar(-h));
      for (int i = 0; i < n; ++i) d[i] = (p[i] - m[i]) / Scalar(2 * h);
    }
    for (int i = 0; i < n; ++i) J(i, j) = d[i];
  }
  return J;
}

json AdIdentityReport::to_json() const {
  return {{"subject", subject},
          {"samples", samples},
          {"tol", tol},
          {"right_ordering", {{"holds", right_holds()}, {"max_deviation", right_max_dev}}},
          {"printed_ordering", {{"holds", printed_holds()}, {"max_deviation", printed_max_dev}}}};
}

AdIdentityReport check_ad_identity(const RackStructure& r, std::size_t samples, std::uint64_t seed) {
  const GroupSpec& G = r.group();
  AdIdentityReport rep;
  rep.subject = r.label();
  rep.tol = G.regime() == Regime::exact ? 0.0 : kDefaultEpsFd;
  Rng rng = Rng::stream(seed, "ad_identity");
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x = random_coords(G, rng), y = random_coords(G, rng);
    Matrix ax = ad_map(r, x), ay = ad_map(r, y), axy = ad_map(r, r.op(x, y));
    rep.right_max_dev = std::max(rep.right_max_dev, max_deviation(axy, ay * ax * inverse(ay)));
    rep.printed_max_dev = std::max(rep.printed_max_dev, max_deviation(axy, ax * ay * inverse(ax)));
    ++rep.samples;
  }
  return rep;
}

AxiomReport check_absorption(const RackStructure& r, const CheckOptions& opt) {
  AxiomReport rep;
  rep.subject = r.label();
  Recorder rec(rep, opt, {"left", "inverse", "mixed"});
  sweep(rep, r.group(), opt, "absorption", 3, [&](const detail::Tuple& t) {
    const Vector &a = *t[0], &b = *t[1], &c = *t[2];
    rec.check("left", {a, b, c}, r.op(a, r.op(b, c)), r.op(a, b));
    rec.check("inverse", {a, b, c}, r.op_inverse(a, r.op_inverse(b, c)), r.op_inverse(a, b));
    rec.check("mixed", {a, b, c}, r.op(a, r.op_inverse(b, c)), r.op(a, b));
  });
  return rep;
}

}  // namespace symleib
