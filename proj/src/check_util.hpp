#pragma once
// Shared plumbing for sampled/exhaustive property checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "symleib/rack.hpp"

namespace symleib::detail {

inline bool vectors_agree(const Vector& a, const Vector& b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a[i], b[i], eps)) return false;
  return true;
}

class Recorder {
 public:
  Recorder(AxiomReport& rep, const CheckOptions& opt, std::initializer_list<const char*> names) : rep_(rep), opt_(opt) {
    for (const char* n : names) rep_.properties.push_back({n});
  }

  bool check(const std::string& name, std::vector<Vector> args, const Vector& lhs, const Vector& rhs) {
    auto it = std::find_if(rep_.properties.begin(), rep_.properties.end(),
                           [&](const PropertyTally& t) { return t.name == name; });
    if (it == rep_.properties.end()) throw std::logic_error("unregistered property " + name);
    ++it->checks;
    double dev = lhs.size() == rhs.size() ? max_deviation(lhs, rhs) : INFINITY;
    it->max_deviation = std::max(it->max_deviation, dev);
    if (vectors_agree(lhs, rhs, opt_.eps)) return true;
    it->holds = false;
    auto n = std::count_if(rep_.counterexamples.begin(), rep_.counterexamples.end(),
                           [&](const Counterexample& c) { return c.property == name; });
    if (static_cast<std::size_t>(n) < opt_.max_counterexamples)
      rep_.counterexamples.push_back({name, std::move(args), lhs, rhs, dev});
    return false;
  }

 private:
  AxiomReport& rep_;
  const CheckOptions& opt_;
};

using Tuple = std::vector<const Vector*>;
using Sampler = std::function<Vector(Rng&)>;

// Runs f over `samples` random tuples drawn with `sample`, then (exact groups
// only, if opt.grid) over the selected integer grid filtered by `keep`.
// Returns early when f returns false.
inline void sweep(AxiomReport& rep, const GroupSpec& g, const CheckOptions& opt, const std::string& tag, int arity,
                  const Sampler& sample, const std::function<bool(const Vector&)>& keep,
                  const std::function<bool(const Tuple&)>& f) {
  Rng rng = Rng::stream(opt.seed, tag);
  std::vector<Vector> buf(arity);
  Tuple ptr(arity);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (int i = 0; i < arity; ++i) {
      buf[i] = sample(rng);
      ptr[i] = &buf[i];
    }
    if (!f(ptr)) return;
  }
  if (opt.grid && g.regime() == Regime::exact) {
    GridSelection sel = select_grid(g.dim(), arity, opt.grid_budget, keep);
    rep.grids.push_back(tag + ": " + sel.spec.str(g.dim()) + ", " + std::to_string(sel.points.size()) +
                        " points, " + std::to_string(sel.tuples) + " " + std::to_string(arity) + "-tuples");
    for_each_tuple(sel.points, arity, f);
  }
}

inline void sweep(AxiomReport& rep, const GroupSpec& g, const CheckOptions& opt, const std::string& tag, int arity,
                  const std::function<void(const Tuple&)>& f) {
  sweep(rep, g, opt, tag, arity, [&g](Rng& r) { return random_coords(g, r); }, {}, [&](const Tuple& t) {
    f(t);
    return true;
  });
}

}  // namespace symleib::detail
