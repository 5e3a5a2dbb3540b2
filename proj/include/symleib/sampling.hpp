#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symleib/groups.hpp"
#include "symleib/linalg.hpp"

namespace symleib {

// Seeded stream generator. Independent streams are derived from (seed, tag),
// so a check's samples do not depend on which other checks ran before it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  static Rng stream(std::uint64_t seed, std::string_view tag);

  std::uint64_t next() { return eng_(); }
  double uniform(double lo, double hi);          // [lo, hi)
  std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive
  Rational rational(std::int64_t max_num, std::int64_t max_den);

 private:
  std::mt19937_64 eng_;
};

// Random coordinates: floating groups draw from [-2, 2]; exact groups draw
// rationals p/q with |p| <= 6, 1 <= q <= 4.
Vector random_coords(const GroupSpec& g, Rng& rng);

// Integer grid {-radius..radius}^dim with at most max_nonzero nonzero entries.
struct GridSpec {
  int radius = 2;
  int max_nonzero = 0;
  std::string str(int dim) const;
};

struct GridSelection {
  GridSpec spec;
  std::vector<Vector> points;  // exact coordinates, filtered
  std::size_t tuples = 0;      // points.size()^arity
};

std::vector<Vector> grid_points(int dim, const GridSpec& spec);

// Among the grids {-r..r}^dim (r = 2, 1) with at most m nonzero entries
// (m = dim..1), filtered by `keep`, the one with the most points whose
// tuple count points^arity fits the budget; ties go to the larger radius.
// If none fits, the smallest one.
GridSelection select_grid(int dim, int arity, std::size_t budget,
                          const std::function<bool(const Vector&)>& keep = {});

// Calls f on every arity-tuple of points (lexicographic), stopping when f returns false.
void for_each_tuple(const std::vector<Vector>& points, int arity,
                    const std::function<bool(const std::vector<const Vector*>&)>& f);

}  // namespace symleib
