#include "symleib/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace symleib {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix(seed ^ splitmix(h)));
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t r;
  do r = eng_();
  while (limit != 0 && r >= limit);
  return lo + static_cast<std::int64_t>(span == 0 ? r : r % span);
}

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den) {
  std::int64_t p = integer(-max_num, max_num);
  std::int64_t q = integer(1, max_den);
  return Rational(p, q);
}

Vector random_coords(const GroupSpec& g, Rng& rng) {
  Vector v;
  v.reserve(g.dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (g.regime() == Regime::exact)
      v.emplace_back(rng.rational(6, 4));
    else
      v.emplace_back(rng.uniform(-2.0, 2.0));
  }
  return v;
}

std::string GridSpec::str(int dim) const {
  std::string s = "{" + std::to_string(-radius) + ".." + std::to_string(radius) + "}^" + std::to_string(dim);
  if (max_nonzero < dim) s += " (at most " + std::to_string(max_nonzero) + " nonzero)";
  return s;
}

std::vector<Vector> grid_points(int dim, const GridSpec& spec) {
  std::vector<Vector> out;
  std::vector<int> cur(dim, -spec.radius);
  while (true) {
    int nz = 0;
    for (int c : cur) nz += c != 0;
    if (nz <= spec.max_nonzero) {
      Vector v;
      for (int c : cur) v.emplace_back(Rational(c));
      out.push_back(std::move(v));
    }
    int i = dim - 1;
    while (i >= 0 && cur[i] == spec.radius) cur[i--] = -spec.radius;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

GridSelection select_grid(int dim, int arity, std::size_t budget, const std::function<bool(const Vector&)>& keep) {
  GridSelection best, smallest;
  bool have_best = false, have_smallest = false;
  for (int radius : {2, 1})
    for (int m = dim; m >= 1; --m) {
      GridSelection sel;
      sel.spec = {radius, m};
      for (auto& p : grid_points(dim, sel.spec))
        if (!keep || keep(p)) sel.points.push_back(std::move(p));
      double tuples = std::pow(static_cast<double>(sel.points.size()), arity);
      sel.tuples = static_cast<std::size_t>(tuples);
      if (tuples <= static_cast<double>(budget)) {
        if (!have_best || sel.points.size() > best.points.size()) best = sel, have_best = true;
      } else if (!have_smallest || sel.points.size() < smallest.points.size()) {
        smallest = std::move(sel);
        have_smallest = true;
      }
    }
  return have_best ? best : smallest;
}

void for_each_tuple(const std::vector<Vector>& points, int arity,
                    const std::function<bool(const std::vector<const Vector*>&)>& f) {
  if (points.empty() || arity <= 0) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<const Vector*> tup(arity, &points[0]);
  while (true) {
    for (int i = 0; i < arity; ++i) tup[i] = &points[idx[i]];
    if (!f(tup)) return;
    int i = arity - 1;
    while (i >= 0 && idx[i] + 1 == points.size()) idx[i--] = 0;
    if (i < 0) return;
    ++idx[i];
  }
}

}  // namespace symleib
