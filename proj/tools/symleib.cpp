// symleib: command-line front end.
//
// Exit codes: 0 all checks pass, 1 some property fails, 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symleib/algebra.hpp"
#include "symleib/catalog.hpp"
#include "symleib/groups.hpp"
#include "symleib/quandle.hpp"
#include "symleib/rack.hpp"
#include "symleib/table_io.hpp"
#include "symleib/tangent.hpp"
#include "symleib/verify.hpp"

using namespace symleib;
using nlohmann::json;

namespace {

struct Opts {
  std::string group;
  int variant = 0;
  std::string params;
  bool has_params = false;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double eps = kDefaultEpsNum;
  bool json = false;
  std::string file;
  std::string h, g, point;
  std::string mode = "generic";
  std::string finite;
  bool alternate = false;
  bool inverse = false;
};

Opts opt;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- selection

bool is_group_id(const std::string& s) {
  const auto& ids = group_ids();
  return std::find(ids.begin(), ids.end(), s) != ids.end();
}

// All entries when nothing is selected; a whole group for a bare group id.
std::vector<const CatalogEntry*> selected_entries() {
  if (opt.group.empty()) {
    if (opt.variant) throw UsageError("--variant needs --group");
    std::vector<const CatalogEntry*> all;
    for (const auto& e : entries()) all.push_back(&e);
    return all;
  }
  if (opt.variant) return {&find_entry(opt.group, opt.variant)};
  if (is_group_id(opt.group)) {
    auto v = entries_for_group(opt.group);
    if (v.empty()) throw std::invalid_argument("no catalog entry on group " + opt.group);
    return v;
  }
  return {&find_entry(opt.group)};
}

const CatalogEntry& single_entry() {
  auto v = selected_entries();
  if (v.size() != 1) throw UsageError("select one entry with --group SLUG or --group GROUP --variant N");
  return *v.front();
}

ParamMap given_params() { return opt.has_params ? parse_params(opt.params) : ParamMap{}; }

// --params if given (checked), else the parameter grid.
std::vector<ParamMap> param_sets(const CatalogEntry& e) {
  if (!opt.has_params) return parameter_grid(e);
  ParamMap p = given_params();
  check_admissible(e, p);
  return {p};
}

ParamMap single_params(const CatalogEntry& e) {
  if (!opt.has_params && !e.params.empty()) throw UsageError(e.slug + " needs --params");
  ParamMap p = given_params();
  check_admissible(e, p);
  return p;
}

Reading reading() { return opt.alternate ? Reading::alternate : Reading::printed; }

RackStructure selected_rack() {
  if (opt.mode == "conjugation" || opt.mode == "trivial") {
    GroupPtr g;
    if (is_group_id(opt.group) && !opt.variant) {
      g = make_group(opt.group, given_params());
    } else {
      const CatalogEntry& e = single_entry();
      g = make_group(e.group_id, single_params(e));
    }
    return opt.mode == "conjugation" ? RackStructure::conjugation(g) : RackStructure::trivial(g);
  }
  const CatalogEntry& e = single_entry();
  ParamMap p = single_params(e);
  if (opt.mode == "generic") return RackStructure::generic(e, p, reading());
  if (opt.mode == "display") return RackStructure::closed_form(e, p);
  throw UsageError("unknown --mode '" + opt.mode + "' (generic, display, conjugation, trivial)");
}

CheckOptions check_options() {
  CheckOptions o;
  o.samples = opt.samples;
  o.seed = opt.seed;
  o.eps = opt.eps;
  return o;
}

std::string label(const CatalogEntry& e, const ParamMap& p) {
  return p.empty() ? e.slug : e.slug + " [" + format_params(p) + "]";
}

json triple_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

json lines_json(const std::vector<std::string>& lines) { return json(lines); }

std::string vec_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

void print_report(const AxiomReport& r) {
  std::cout << r.subject << ": " << (r.ok() ? "ok" : "FAIL") << "\n";
  for (const auto& p : r.properties)
    std::cout << "  " << (p.holds ? "pass " : "FAIL ") << p.name << "  (" << p.checks
              << " checks, max deviation " << p.max_deviation << ")\n";
  for (const auto& g : r.grids) std::cout << "  grid " << g << "\n";
  for (const auto& c : r.counterexamples) std::cout << "  counterexample " << to_json(c).dump() << "\n";
}

void print_verdict(const std::string& what, const std::string& subject, const Verdict& v) {
  std::cout << subject << ": " << (v.holds ? what : "not " + what) << " (" << v.checked << " checks)\n";
  if (!v.grid.empty()) std::cout << "  grid " << v.grid << "\n";
  if (v.counterexample) std::cout << "  counterexample " << to_json(*v.counterexample).dump() << "\n";
}

int emit(const json& j, bool ok) {
  if (opt.json) std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

std::optional<FiniteQuandle> finite_quandle() {
  if (opt.finite.empty()) return std::nullopt;
  std::vector<std::string> parts;
  std::string s = opt.finite;
  for (std::size_t pos; (pos = s.find(':')) != std::string::npos; s = s.substr(pos + 1)) parts.push_back(s.substr(0, pos));
  parts.push_back(s);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw UsageError("bad --finite '" + opt.finite + "'");
    return std::stoi(parts[i]);
  };
  if (parts[0] == "dihedral" && parts.size() == 2) return FiniteQuandle::dihedral(num(1));
  if (parts[0] == "trivial" && parts.size() == 2) return FiniteQuandle::trivial(num(1));
  if (parts[0] == "alexander" && parts.size() == 3) return FiniteQuandle::alexander(num(1), num(2));
  if (parts[0] == "file" && parts.size() == 2) {
    std::ifstream in(parts[1]);
    if (!in) throw std::invalid_argument("cannot open " + parts[1]);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed quandle file: ") + e.what());
    }
    return FiniteQuandle::from_json(j);
  }
  throw UsageError("--finite expects dihedral:N, alexander:N:T, trivial:N or file:PATH");
}

StructureTable input_table() {
  if (opt.file.empty()) {
    const CatalogEntry& e = single_entry();
    return instantiate(e, single_params(e), reading());
  }
  return read_table_file(opt.file);
}

// ---- catalog

int catalog_list() {
  json out = json::array();
  for (const auto& e : entries()) {
    json params = json::array();
    for (const auto& p : e.params) params.push_back(p.str());
    out.push_back({{"slug", e.slug}, {"name", e.name}, {"lie", e.lie_name}, {"group", e.group_id},
                   {"variant", e.variant}, {"dim", e.dim}, {"params", params}, {"flagged", e.flagged()}});
    if (!opt.json) {
      std::string ps;
      for (const auto& p : params) ps += (ps.empty() ? "" : "; ") + p.get<std::string>();
      std::printf("%-14s %-22s %-8s v%d  dim %d  %s%s\n", e.slug.c_str(), e.name.c_str(), e.group_id.c_str(),
                  e.variant, e.dim, ps.c_str(), e.flagged() ? "  [flagged]" : "");
    }
  }
  if (!opt.json) std::cout << out.size() << " entries\n";
  return emit(out, true);
}

int catalog_verify() {
  json rows = json::array();
  bool ok = true;
  for (const auto* e : selected_entries())
    for (const auto& p : param_sets(*e)) {
      StructureTable t = instantiate(*e, p, reading());
      IdentityReport l = is_left_leibniz(t), r = is_right_leibniz(t);
      Prop31Report pr = check_prop31(lie_of(*e, p), omega_of(*e, p, reading()));
      auto flag = flagged_failure(*e, p, reading());
      bool leib = l.holds && r.holds;
      // a flagged parameter set is expected to fail, at the recorded triple
      bool expected = flag ? !leib && std::find(pr.vanishing_violations.begin(), pr.vanishing_violations.end(),
                                                 flag->triple) != pr.vanishing_violations.end()
                           : leib;
      ok = ok && expected;
      json row = {{"entry", label(*e, p)}, {"left_leibniz", l.holds}, {"right_leibniz", r.holds},
                  {"conditions", pr.holds}, {"as_expected", expected}};
      if (!l.holds) row["left_violation"] = triple_json(l.violations.front());
      if (!r.holds) row["right_violation"] = triple_json(r.violations.front());
      if (pr.condition) row["failed_condition"] = std::string(1, pr.condition);
      if (flag) row["flagged"] = {{"condition", std::string(1, flag->condition)}, {"triple", triple_json(flag->triple)},
                                  {"note", flag->note}};
      rows.push_back(row);
      if (!opt.json) {
        std::cout << (expected ? "ok   " : "FAIL ") << label(*e, p) << ": "
                  << (leib ? "symmetric Leibniz" : "not Leibniz");
        if (pr.condition) std::cout << ", condition (" << pr.condition << ") fails";
        if (flag) std::cout << " [flagged: expected failure at " << triple_json(flag->triple).dump() << "]";
        std::cout << "\n";
      }
    }
  return emit({{"ok", ok}, {"results", rows}}, ok);
}

int catalog_export() {
  const CatalogEntry& e = single_entry();
  StructureTable t = instantiate(e, single_params(e), reading());
  std::cout << dump_table(t);
  return 0;
}

// ---- algebra

int algebra_check() {
  StructureTable t = input_table();
  IdentityReport l = is_left_leibniz(t), r = is_right_leibniz(t);
  Decomposition d = split(t);
  Prop31Report pr = check_prop31(d.lie, d.omega);
  bool ok = l.holds && r.holds;
  json lv = json::array(), rv = json::array();
  for (const auto& v : l.violations) lv.push_back(triple_json(v));
  for (const auto& v : r.violations) rv.push_back(triple_json(v));
  json out = {{"left_leibniz", l.holds}, {"right_leibniz", r.holds}, {"left_violations", lv},
              {"right_violations", rv}, {"conditions", pr.holds},
              {"failed_condition", pr.condition ? std::string(1, pr.condition) : ""}};
  if (!opt.json) {
    std::cout << "left Leibniz:  " << (l.holds ? "yes" : "no") << "\n";
    if (!l.holds) std::cout << "  first violating triple (i,j,k) = " << triple_json(l.violations.front()).dump() << "\n";
    std::cout << "right Leibniz: " << (r.holds ? "yes" : "no") << "\n";
    if (!r.holds) std::cout << "  first violating triple (i,j,k) = " << triple_json(r.violations.front()).dump() << "\n";
    std::cout << "conditions (a)-(c) on the symmetric/antisymmetric split: "
              << (pr.holds ? "hold" : std::string("fail at (") + pr.condition + ")") << "\n";
  }
  return emit(out, ok);
}

json prop31_json(const Prop31Report& pr) {
  json jv = json::array(), nc = json::array(), vv = json::array();
  for (const auto& v : pr.jacobi_violations) jv.push_back(triple_json(v));
  for (const auto& v : pr.noncentral_pairs) nc.push_back({v[0], v[1]});
  for (const auto& v : pr.vanishing_violations) vv.push_back(triple_json(v));
  return {{"holds", pr.holds}, {"jacobi", pr.jacobi}, {"central_values", pr.central_values},
          {"vanishing", pr.vanishing}, {"jacobi_violations", jv}, {"noncentral_pairs", nc},
          {"vanishing_violations", vv}};
}

json basis_json(const SubspaceBasis& b) {
  json out = json::array();
  for (const auto& v : b.vectors()) out.push_back(format_combination(v));
  return out;
}

int algebra_decompose() {
  StructureTable t = input_table();
  Decomposition d = split(t);
  Prop31Report pr = check_prop31(d.lie, d.omega);
  json out = {{"bracket", lines_json(describe(d.lie.table()))},
              {"omega", lines_json(describe(d.omega))},
              {"center", basis_json(center(d.lie))},
              {"derived", basis_json(derived_space(t))},
              {"jacobi", is_lie(d.lie).holds},
              {"conditions", prop31_json(pr)}};
  if (!opt.json) {
    std::cout << "bracket:\n";
    for (const auto& s : describe(d.lie.table())) std::cout << "  " << s << "\n";
    std::cout << "omega:\n";
    for (const auto& s : describe(d.omega)) std::cout << "  " << s << "\n";
    std::cout << "center: span" << out["center"].dump() << "\n";
    std::cout << "L.L:    span" << out["derived"].dump() << "\n";
    std::cout << "conditions (a)-(c): " << (pr.holds ? "hold" : std::string("fail at (") + pr.condition + ")")
              << "\n";
  }
  return emit(out, pr.holds);
}

int algebra_omega_solve() {
  LieTable lie = opt.file.empty() ? split(input_table()).lie : LieTable::from_table(read_table_file(opt.file));
  IdentityReport jac = is_lie(lie);
  if (!jac.holds) throw std::invalid_argument("input bracket fails the Jacobi identity");
  OmegaFamily fam = omega_parameter_space(lie);
  json basis = json::array();
  for (const auto& w : fam.basis) basis.push_back(lines_json(describe(w)));
  if (!opt.json) {
    std::cout << fam.basis.size() << "-parameter family of admissible forms"
              << (fam.quadratic_ok ? "" : " (quadratic condition fails on the span)") << "\n";
    for (std::size_t i = 0; i < fam.basis.size(); ++i) {
      std::cout << "  w" << i + 1 << ":";
      for (const auto& s : describe(fam.basis[i])) std::cout << "  " << s;
      std::cout << "\n";
    }
  }
  return emit({{"dimension", fam.basis.size()}, {"basis", basis}, {"quadratic_ok", fam.quadratic_ok}},
              fam.quadratic_ok);
}

// ---- normal form

int normalform_g41() {
  ParamMap p = given_params();
  auto get = [&](Symbol s) { return p.count(s) ? p.at(s) : Rational(0); };
  for (const auto& [s, v] : p)
    if (s == Symbol::epsilon) throw std::invalid_argument("normalform g41 takes alpha, beta, gamma");
  G41NormalForm nf = g41_normal_form(get(Symbol::alpha), get(Symbol::beta), get(Symbol::gamma));
  json w = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(nf.witness(i, j).str());
    w.push_back(row);
  }
  std::string target = "g41-" + std::to_string(nf.class_id);
  json out = {{"class", nf.class_id}, {"entry", target}, {"canonical", format_params(nf.canonical)},
              {"omega", lines_json(describe(nf.canonical_omega))}, {"witness", w}};
  if (!opt.json) {
    std::cout << "class " << nf.class_id << " (" << target
              << (nf.canonical.empty() ? "" : " [" + format_params(nf.canonical) + "]") << ")\n";
    for (const auto& s : describe(nf.canonical_omega)) std::cout << "  " << s << "\n";
    std::cout << "witness automorphism T (rows):\n";
    for (const auto& row : w) std::cout << "  " << row.dump() << "\n";
  }
  return emit(out, true);
}

// ---- rack

int rack_eval() {
  if (opt.h.empty() || opt.g.empty()) throw UsageError("rack eval needs --h and --g");
  RackStructure r = selected_rack();
  Vector h = parse_coords(r.group(), opt.h), g = parse_coords(r.group(), opt.g);
  Vector out = opt.inverse ? r.op_inverse(h, g) : r.op(h, g);
  if (!opt.json) std::cout << vec_str(out) << "\n";
  return emit({{"rack", r.label()}, {"h", vector_to_json(h)}, {"g", vector_to_json(g)}, {"inverse", opt.inverse},
               {"result", vector_to_json(out)}},
              true);
}

int rack_verify() {
  RackStructure r = selected_rack();
  CheckOptions o = check_options();
  AxiomReport grp = check_group_axioms(r.group(), o);
  AxiomReport rack = check_rack_axioms(r, o);
  bool ok = grp.ok() && rack.ok();
  json out = {{"group", grp.to_json()}, {"rack", rack.to_json()}};
  if (!opt.json) {
    print_report(grp);
    print_report(rack);
  }
  if (const CentralForm* f = r.central_form()) {
    CheckOptions co = o;
    co.samples = std::min<std::size_t>(o.samples, 500);
    co.grid = false;
    AxiomReport chi = check_chi_identities(*f, co);
    ok = ok && chi.ok();
    out["chi"] = chi.to_json();
    if (!opt.json) print_report(chi);
  }
  // Informational: which conjugation ordering the adjoint maps satisfy.
  AdIdentityReport ad = check_ad_identity(r, std::min<std::size_t>(opt.samples, 20), opt.seed);
  out["ad_identity"] = ad.to_json();
  if (!opt.json)
    std::cout << "Ad(x|>y) = Ad_y Ad_x Ad_y^-1: " << (ad.right_holds() ? "holds" : "fails")
              << "; Ad_x Ad_y Ad_x^-1: " << (ad.printed_holds() ? "holds" : "fails") << "\n";
  out["ok"] = ok;
  return emit(out, ok);
}

int rack_crosscheck() {
  json rows = json::array();
  bool ok = true;
  std::size_t shown = 0;
  for (const auto* e : selected_entries()) {
    if (!closed_form_op(*e, parameter_grid(*e).front()) && opt.group.empty()) continue;
    for (const auto& p : param_sets(*e)) {
      if (flagged_failure(*e, p)) continue;
      CrossCheckReport x = cross_check_modes(*e, p, check_options());
      GroupPtr g = make_group(e->group_id, p);
      ok = ok && x.agree;
      rows.push_back(x.to_json(*g));
      ++shown;
      if (!opt.json) {
        std::cout << (x.agree ? "agree    " : "DISAGREE ") << label(*e, p) << "  (" << x.samples
                  << " points, max deviation " << x.max_deviation << ")";
        if (!x.agree) {
          std::cout << "  coordinates:";
          for (int c : x.coords) std::cout << " " << g->coord_names()[c];
        }
        std::cout << "\n";
        if (!x.agree && !x.discrepancies.empty()) {
          const auto& d = x.discrepancies.front();
          std::cout << "  h=" << vec_str(d.h) << " g=" << vec_str(d.g) << "\n  generic " << vec_str(d.generic)
                    << "\n  display " << vec_str(d.closed) << "\n";
        }
      }
    }
  }
  if (!shown) throw std::invalid_argument("no display formula for the selection");
  return emit({{"agree", ok}, {"results", rows}}, ok);
}

// ---- quandle

int quandle_membership() {
  const CatalogEntry& e = single_entry();
  ParamMap p = single_params(e);
  QuandlePredicate q(RackStructure::generic(e, p, reading()));
  if (opt.point.empty()) {
    // no point: compare the quadric with the printed set
    json out = {{"entry", label(e, p)}, {"quadric", q.quadric().describe()}, {"degenerate", q.quadric().degenerate}};
    bool ok = true;
    if (printed_set(e, p)) {
      PrintedSetReport rep = compare_printed_set(e, p, 200, opt.seed);
      out["printed"] = rep.to_json();
      ok = rep.agree();
      if (!opt.json)
        std::cout << label(e, p) << ": q = " << rep.quadric << "\n  printed: " << rep.printed << "\n  "
                  << (ok ? "agrees" : "DIFFERS") << " on " << rep.points << " grid points and " << rep.sampled
                  << " members (" << rep.member_not_printed << " members outside, " << rep.printed_not_member
                  << " printed points outside)\n";
    } else if (!opt.json) {
      std::cout << label(e, p) << ": q = " << q.quadric().describe() << "\n";
    }
    return emit(out, ok);
  }
  Vector x = parse_coords(q.group(), opt.point);
  bool in = q.contains(x, opt.eps);
  json out = {{"entry", label(e, p)}, {"point", vector_to_json(x)}, {"member", in},
              {"quadric_value", vector_to_json(q.quadric_value(x))}, {"quadric", q.quadric().describe()}};
  if (!opt.json)
    std::cout << vec_str(x) << (in ? " is" : " is not") << " in Q(" << label(e, p) << ")  [beta(k g, k g) = "
              << vec_str(q.quadric_value(x)) << "]\n";
  return emit(out, in);
}

int finite_report(const FiniteQuandle& fq, const std::string& what) {
  json out = {{"quandle", fq.name()}, {"size", fq.size()}};
  bool ok = true;
  auto add = [&](const std::string& key, const Verdict& v) {
    out[key] = v.to_json();
    if (!opt.json) print_verdict(key == "quasi_trivial" ? "quasi-trivial" : key, fq.name(), v);
  };
  if (what == "verify") {
    AxiomReport a = fq.check_axioms();
    ok = a.ok();
    out["axioms"] = a.to_json();
    out["orbit_of_0"] = fq.orbit(0);
    out["center"] = fq.center();
    out["inner_group_order"] = fq.inner_group_order();
    if (!opt.json) {
      print_report(a);
      std::cout << "  orbit of 0: " << out["orbit_of_0"].dump() << ", center: " << out["center"].dump()
                << ", |Inn| = " << fq.inner_group_order() << "\n";
    }
  } else {
    Verdict v = what == "kei" ? fq.is_kei() : what == "medial" ? fq.is_medial() : fq.is_quasi_trivial();
    ok = v.holds;
    add(what, v);
  }
  return emit(out, ok);
}

int quandle_verify() {
  if (auto fq = finite_quandle()) return finite_report(*fq, "verify");
  QuandlePredicate q(selected_rack());
  AxiomReport a = check_quandle(q, check_options());
  if (!opt.json) {
    std::cout << "Q: " << (q.whole_group() ? "whole group" : "q = " + q.quadric().describe()) << "\n";
    print_report(a);
  }
  return emit(a.to_json(), a.ok());
}

int quandle_quasitrivial() {
  if (auto fq = finite_quandle()) return finite_report(*fq, "quasi_trivial");
  if (!opt.has_params && opt.mode == "generic") {
    // every statement for the selected entries
    std::set<std::string> slugs;
    for (const auto* e : selected_entries()) slugs.insert(e->slug);
    json rows = json::array();
    bool ok = true;
    for (const auto& c : quasi_trivial_claims()) {
      if (!slugs.count(c.slug)) continue;
      ClaimOutcome o = evaluate_claim(c, opt.seed, 2000, 100000);
      ok = ok && o.consistent();
      rows.push_back(o.to_json());
      if (!opt.json) {
        std::cout << (o.consistent() ? "ok   " : "FAIL ") << c.slug
                  << (c.params.empty() ? "" : " [" + format_params(c.params) + "]") << ": "
                  << (c.claimed ? "stated quasi-trivial, " : "not in the list, ") << o.status << "\n";
        if (o.verdict.counterexample)
          std::cout << "  counterexample " << to_json(*o.verdict.counterexample).dump() << "\n";
      }
    }
    if (rows.empty()) throw std::invalid_argument("no quasi-triviality statement covers the selection");
    return emit({{"ok", ok}, {"results", rows}}, ok);
  }
  QuandlePredicate q(selected_rack());
  Verdict v = is_quasi_trivial(q, opt.samples, opt.seed, opt.eps);
  if (!opt.json) print_verdict("quasi-trivial", q.rack().label(), v);
  return emit({{"quandle", q.rack().label()}, {"quasi_trivial", v.to_json()}}, v.holds);
}

int quandle_medial(std::size_t budget) {
  if (auto fq = finite_quandle()) return finite_report(*fq, "medial");
  QuandlePredicate q(selected_rack());
  Verdict v = is_medial(q, opt.samples, opt.seed, opt.eps, budget);
  json out = {{"quandle", q.rack().label()}, {"medial", v.to_json()}};
  bool ok = v.holds;
  if (!opt.json) print_verdict("medial", q.rack().label(), v);
  if (q.rack().central_form()) {
    CheckOptions o = check_options();
    o.grid_budget = budget;
    AxiomReport a = check_absorption(q.rack(), o);
    out["absorption"] = a.to_json();
    ok = ok && a.ok();
    if (!opt.json) print_report(a);
  }
  return emit(out, ok);
}

int quandle_kei(std::size_t budget) {
  if (auto fq = finite_quandle()) return finite_report(*fq, "kei");
  QuandlePredicate q(selected_rack());
  Verdict v = is_kei(q, opt.samples, opt.seed, opt.eps, budget);
  if (!opt.json) print_verdict("kei", q.rack().label(), v);
  return emit({{"quandle", q.rack().label()}, {"kei", v.to_json()}}, v.holds);
}

// ---- tangent

int tangent_roundtrip_cmd() {
  json rows = json::array();
  bool ok = true;
  if (opt.mode == "conjugation") {
    const CatalogEntry& e = single_entry();
    ParamMap p = e.params.empty() ? ParamMap{} : single_params(e);
    RackStructure r = RackStructure::conjugation(make_group(e.group_id, p));
    TangentTable t = leibniz_from_rack(r);
    double tol = r.group().regime() == Regime::exact ? kDefaultEpsNum : kDefaultEpsFd;
    TableComparison c = compare_tables(t, lie_of(e, p).table(), tol);
    if (!opt.json)
      std::cout << r.label() << " vs bracket of " << e.lie_name << ": max deviation " << c.max_dev
                << (c.pass ? " (pass)" : " (FAIL)") << "\n";
    return emit({{"rack", r.label()}, {"max_dev", c.max_dev}, {"tol", tol}, {"pass", c.pass},
                 {"worst_triple", triple_json(c.worst)}},
                c.pass);
  }
  for (const auto* e : selected_entries())
    for (const auto& p : param_sets(*e)) {
      if (flagged_failure(*e, p)) continue;
      RoundTripReport rt = tangent_roundtrip(*e, p);
      ok = ok && rt.pass();
      json j = rt.to_json();
      j["variant"] = e->variant;
      rows.push_back(j);
      if (!opt.json)
        std::cout << (rt.pass() ? "pass " : "FAIL ") << label(*e, p) << ": max deviation " << rt.table.max_dev
                  << " (tol " << rt.table.tol << "), right Leibniz defect " << rt.leibniz_defect << "\n";
    }
  return emit({{"ok", ok}, {"results", rows}}, ok);
}

// ---- verify all

int verify_all_cmd(std::size_t grid_budget, std::size_t medial_budget) {
  RunConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.eps_num = opt.eps;
  cfg.grid_budget = grid_budget;
  cfg.medial_budget = medial_budget;
  auto progress = [](const CriterionResult& c) {
    if (opt.json) return;
    std::cout << "[" << c.status << "] " << c.id << ". " << c.title << ": " << c.summary << "\n" << std::flush;
  };
  SuiteReport rep = verify_all(cfg, progress);
  if (!opt.json)
    std::cout << "findings: " << rep.extras["printed_membership_sets"]["mismatches"].size()
              << " printed membership sets differ from the quadric; Ad identity holds with the Ad_y Ad_x Ad_y^-1 "
                 "ordering on "
              << rep.extras["ad_conjugation_ordering"]["Ad_y_Ad_x_Ad_y_inv_holds"] << " of "
              << rep.extras["ad_conjugation_ordering"]["racks"] << " racks\n"
              << (rep.ok() ? "overall: ok" : "overall: FAIL") << "\n";
  return emit(rep.to_json(cfg), rep.ok());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric Leibniz algebras, Lie racks and topological quandles"};
  app.require_subcommand(1);
  app.fallthrough();

  auto common = [](CLI::App* s) {
    s->add_option("--group", opt.group, "entry slug/name, or group id (with --variant)");
    s->add_option("--variant", opt.variant, "variant number within the group")->check(CLI::PositiveNumber);
    s->add_option_function<std::string>(
        "--params", [](const std::string& v) { opt.params = v, opt.has_params = true; }, "k=v,... (rationals p/q)");
    s->add_option("--seed", opt.seed, "random seed");
    s->add_option("--samples", opt.samples, "random samples per check");
    s->add_option("--eps", opt.eps, "numeric tolerance");
    s->add_flag("--json", opt.json, "emit one JSON document");
    s->add_option("--file", opt.file, "structure-constant JSON file");
    s->add_option("--mode", opt.mode, "rack: generic, display, conjugation, trivial");
    s->add_flag("--alternate", opt.alternate, "use the corrected reading of a flagged row");
  };

  std::size_t grid_budget = RunConfig{}.grid_budget, medial_budget = RunConfig{}.medial_budget;
  int rc = 0;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    common(s);
    s->callback([&rc, fn] { rc = fn(); });
    return s;
  };

  CLI::App* catalog = app.add_subcommand("catalog", "catalog of symmetric Leibniz algebras")->require_subcommand(1);
  sub(catalog, "list", "list entries with parameter constraints", catalog_list);
  sub(catalog, "verify", "check the Leibniz identities over the parameter grid", catalog_verify);
  sub(catalog, "export", "write an instantiated table as JSON", catalog_export);

  CLI::App* algebra = app.add_subcommand("algebra", "structure-constant tables")->require_subcommand(1);
  sub(algebra, "check", "left/right Leibniz identities", algebra_check);
  sub(algebra, "decompose", "bracket + omega split, centre, L.L, conditions (a)-(c)", algebra_decompose);
  sub(algebra, "omega-solve", "admissible symmetric forms for a Lie bracket", algebra_omega_solve);

  CLI::App* nf = app.add_subcommand("normalform", "normal forms")->require_subcommand(1);
  sub(nf, "g41", "classify w(e3,e3)=alpha e1, w(e4,e4)=beta e1, w(e3,e4)=gamma e1", normalform_g41);

  CLI::App* rack = app.add_subcommand("rack", "Lie racks on matrix groups")->require_subcommand(1);
  CLI::App* eval = sub(rack, "eval", "evaluate h |> g", rack_eval);
  eval->set_help_flag("--help", "print this help message and exit");  // -h would clash with --h
  eval->add_option("--h", opt.h, "coordinates of h, e.g. 0,1,0")->required();
  eval->add_option("--g", opt.g, "coordinates of g")->required();
  eval->add_flag("--inverse", opt.inverse, "evaluate the inverse right translation");
  CLI::App* rverify = sub(rack, "verify", "group, rack and chi identities", rack_verify);
  rverify->add_option("--grid-budget", grid_budget);
  sub(rack, "crosscheck", "display formulas against the generic rack", rack_crosscheck);

  CLI::App* quandle = app.add_subcommand("quandle", "quandles Q(G) and finite quandles")->require_subcommand(1);
  CLI::App* mem = sub(quandle, "membership", "is a point in Q(G); without --point, compare with the printed set",
                      quandle_membership);
  mem->add_option("--point", opt.point, "coordinates");
  for (auto* s : {sub(quandle, "verify", "quandle axioms on Q(G)", quandle_verify),
                  sub(quandle, "quasitrivial", "quasi-triviality statements or a single check", quandle_quasitrivial),
                  sub(quandle, "medial", "medial identity and absorption", [&] { return quandle_medial(medial_budget); }),
                  sub(quandle, "kei", "involutory check", [&] { return quandle_kei(medial_budget); })}) {
    s->add_option("--finite", opt.finite, "dihedral:N, alexander:N:T, trivial:N or file:PATH");
    s->add_option("--grid-budget", medial_budget, "max tuples for exhaustive grids");
  }

  CLI::App* tangent = app.add_subcommand("tangent", "tangent Leibniz algebras")->require_subcommand(1);
  sub(tangent, "roundtrip", "recover the table from the rack and compare", tangent_roundtrip_cmd);

  CLI::App* verify = app.add_subcommand("verify", "acceptance suite")->require_subcommand(1);
  CLI::App* all = sub(verify, "all", "run every criterion", [&] { return verify_all_cmd(grid_budget, medial_budget); });
  all->add_option("--grid-budget", grid_budget, "max tuples for rack-axiom grids");
  all->add_option("--medial-budget", medial_budget, "max tuples for mediality grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
