#include <gtest/gtest.h>

#include "symleib/groups.hpp"
#include "symleib/rack.hpp"
#include "symleib/sampling.hpp"

using namespace symleib;

namespace {

Vector v(std::initializer_list<long long> xs) {
  Vector out;
  for (auto x : xs) out.emplace_back(Rational(x));
  return out;
}

ParamMap group_params(const std::string& id) {
  if (id == "G34_axR" || id == "G35_axR") return {{Symbol::alpha, Rational(2)}};
  return {};
}

}  // namespace

TEST(Groups, ThirteenRealisations) {
  EXPECT_EQ(group_ids().size(), 13u);
  for (const auto& id : group_ids()) {
    GroupPtr g = make_group(id, group_params(id));
    bool exact = id == "G31" || id == "G31xR" || id == "G41";
    EXPECT_EQ(g->regime() == Regime::exact, exact) << id;
    EXPECT_EQ(g->coord_names().size(), static_cast<std::size_t>(g->dim()));
  }
  EXPECT_THROW(make_group("G99"), std::invalid_argument);
}

TEST(Groups, HeisenbergProductByHand) {
  GroupPtr g = make_group("G31");
  // (x,y,z).(a,b,c) = (x+a+yc, y+b, z+c)
  EXPECT_EQ(g->mul(v({1, 2, 3}), v({4, 5, 6})), v({1 + 4 + 2 * 6, 7, 9}));
  EXPECT_EQ(g->mul(v({1, 2, 3}), g->identity()), v({1, 2, 3}));
  EXPECT_EQ(g->inv(v({1, 2, 3})), v({-1 + 6, -2, -3}));
}

TEST(Groups, CoordinatesAgreeWithMatrices) {
  for (const auto& id : group_ids()) {
    GroupPtr g = make_group(id, group_params(id));
    Rng rng = Rng::stream(7, id);
    for (int s = 0; s < 50; ++s) {
      Vector h = random_coords(*g, rng), k = random_coords(*g, rng);
      Matrix prod = g->to_matrix(h) * g->to_matrix(k);
      EXPECT_LT(max_deviation(g->to_matrix(g->mul(h, k)), prod), 1e-9) << id;
      EXPECT_LT(max_deviation(g->from_matrix(g->to_matrix(h)), h), 1e-9) << id;
    }
  }
}

TEST(Groups, AxiomReports) {
  CheckOptions opt;
  opt.samples = 200;
  for (const auto& id : group_ids()) {
    AxiomReport r = check_group_axioms(*make_group(id, group_params(id)), opt);
    EXPECT_TRUE(r.ok()) << r.to_json().dump();
  }
}

TEST(Groups, PointsAndJson) {
  GroupPtr g = make_group("G31");
  GroupPoint p = make_point(g, v({1, 0, -1}));
  GroupPoint e = mul(p, inv(p));
  EXPECT_EQ(e.coords, g->identity());
  EXPECT_EQ(point_from_json(point_to_json(p)).coords, p.coords);
  EXPECT_THROW(mul(p, make_point(make_group("G41"), v({0, 0, 0, 0}))), std::invalid_argument);
  EXPECT_THROW(parse_coords(*g, "0.5,0,0"), std::invalid_argument);  // exact group
  GroupPtr f = make_group("G33xR");
  EXPECT_NO_THROW(parse_coords(*f, "0.5,0,0,1"));
}

TEST(Groups, BasisIdentification) {
  // G41 identifies e1 with d/dw + d/dx; every other group uses the coordinate basis
  for (const auto& id : group_ids()) {
    GroupPtr g = make_group(id, group_params(id));
    const QMatrix& b = g->basis_identification();
    EXPECT_EQ(b * g->basis_identification_inverse(), QMatrix::identity(g->dim()));
    if (id != "G41") EXPECT_EQ(b, QMatrix::identity(g->dim())) << id;
  }
}

TEST(Sampling, GridSelection) {
  GridSelection s = select_grid(3, 2, 20000);
  EXPECT_EQ(s.points.size(), 125u);  // full {-2..2}^3, 15625 pairs
  GridSelection t = select_grid(4, 3, 300000);
  EXPECT_LE(t.tuples, 300000u);
  EXPECT_EQ(grid_points(2, GridSpec{1, 1}).size(), 5u);
  std::size_t n = 0;
  for_each_tuple(grid_points(1, GridSpec{1, 1}), 2, [&](const std::vector<const Vector*>&) { return ++n < 4; });
  EXPECT_EQ(n, 4u);
}

TEST(Sampling, StreamsAreDeterministic) {
  Rng a = Rng::stream(42, "x"), b = Rng::stream(42, "x"), c = Rng::stream(42, "y");
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Rng::stream(42, "x").next(), c.next());
}
