#include <gtest/gtest.h>

#include "symleib/algebra.hpp"
#include "symleib/catalog.hpp"
#include "symleib/table_io.hpp"

using namespace symleib;

namespace {

QVector e(int n, int i) { return basis_vector(n, i); }

QVector q(std::initializer_list<long long> xs) {
  QVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

StructureTable g31_1() { return instantiate(find_entry("g31-1"), {}); }

// Brute-force left Leibniz defect on basis triples, computed straight from coefficients.
bool left_leibniz_brute(const StructureTable& t) {
  int n = t.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m) {
          Rational lhs, rhs;
          for (int p = 1; p <= n; ++p) {
            lhs += t.at(j, k, p) * t.at(i, p, m);  // e_i.(e_j.e_k)
            rhs += t.at(i, j, p) * t.at(p, k, m);  // (e_i.e_j).e_k
            rhs += t.at(i, k, p) * t.at(j, p, m);  // e_j.(e_i.e_k)
          }
          if (lhs != rhs) return false;
        }
  return true;
}

}  // namespace

TEST(Product, CatalogExamples) {
  StructureTable t = g31_1();
  EXPECT_EQ(product(t, e(3, 2), e(3, 3)), q({2, 0, 0}));
  EXPECT_EQ(product(t, e(3, 3), e(3, 2)), q({0, 0, 0}));  // -e1 + e1
  EXPECT_EQ(product(t, q({0, 0, 0}), q({1, 5, -2})), q({0, 0, 0}));
}

TEST(Product, TranslationMatrices) {
  StructureTable t = g31_1();
  EXPECT_EQ(translation_matrix(t, q({0, 0, 0}), Side::left), QMatrix(3, 3));
  QVector u = q({1, 2, -1}), v = q({0, 3, 1});
  EXPECT_EQ(translation_matrix(t, u, Side::left) * v, product(t, u, v));
  EXPECT_EQ(translation_matrix(t, u, Side::right) * v, product(t, v, u));
  EXPECT_EQ(translation_matrix(StructureTable(3), u, Side::right), QMatrix(3, 3));
}

TEST(Leibniz, SmallExamples) {
  StructureTable zero(2);
  EXPECT_TRUE(is_left_leibniz(zero).holds);
  EXPECT_TRUE(is_right_leibniz(zero).holds);

  StructureTable idem(2);  // e1.e1 = e1
  idem.set(1, 1, 1, Rational(1));
  auto l = is_left_leibniz(idem);
  ASSERT_FALSE(l.holds);
  EXPECT_EQ(l.violations.front(), (Triple{1, 1, 1}));
  auto r = is_right_leibniz(idem);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.violations.front(), (Triple{1, 1, 1}));

  StructureTable nil(2);  // e1.e1 = e2
  nil.set(1, 1, 2, Rational(1));
  EXPECT_TRUE(is_right_leibniz(nil).holds);
  EXPECT_TRUE(is_left_leibniz(nil).holds);
}

TEST(Leibniz, AgreesWithBruteForce) {
  for (const auto& entry : entries())
    for (const auto& p : parameter_grid(entry)) {
      StructureTable t = instantiate(entry, p);
      EXPECT_EQ(is_left_leibniz(t).holds, left_leibniz_brute(t)) << entry.slug;
    }
  EXPECT_TRUE(is_right_leibniz(instantiate(find_entry("g41-1"), {{Symbol::epsilon, Rational(-1)}})).holds);
}

TEST(Split, SymmetricAndAntisymmetricParts) {
  StructureTable t = g31_1();
  Decomposition d = split(t);
  EXPECT_EQ(combine(d.lie, d.omega), t);
  EXPECT_EQ(d.lie.bracket(e(3, 2), e(3, 3)), q({1, 0, 0}));
  EXPECT_EQ(d.omega.at(2, 3), q({1, 0, 0}));

  Decomposition lie_only = split(d.lie.table());
  EXPECT_TRUE(lie_only.omega.is_zero());
  Decomposition sym_only = split(combine(LieTable(3), d.omega));
  EXPECT_EQ(sym_only.lie, LieTable(3));
}

TEST(Lie, JacobiChecks) {
  EXPECT_TRUE(is_lie(g41_lie()).holds);
  EXPECT_TRUE(is_lie(LieTable(3)).holds);

  // [e1,e2]=e3, [e1,e3]=e1: J(e1,e2,e3) = [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e1] + 0 = e3
  LieTable t(3);
  t.set_bracket(1, 2, e(3, 3));
  t.set_bracket(1, 3, e(3, 1));
  EXPECT_FALSE(is_lie(t).holds);

  StructureTable asym(2);
  asym.set(1, 2, 1, Rational(1));
  EXPECT_THROW(is_lie(asym), std::invalid_argument);
}

TEST(Lie, CenterAndDerived) {
  EXPECT_EQ(center(g41_lie()).vectors(), std::vector<QVector>{e(4, 1)});
  EXPECT_EQ(center(LieTable(3)).rank(), 3u);
  EXPECT_EQ(center(split(g31_1()).lie).vectors(), std::vector<QVector>{e(3, 1)});

  StructureTable g41 = instantiate(find_entry("g41-1"), {{Symbol::epsilon, Rational(1)}});
  EXPECT_EQ(derived_space(g41).vectors(), (std::vector<QVector>{e(4, 1), e(4, 2)}));
  EXPECT_EQ(derived_space(StructureTable(3)).rank(), 0u);
  EXPECT_EQ(derived_space(g31_1()).vectors(), std::vector<QVector>{e(3, 1)});
}

TEST(Prop31, Conditions) {
  EXPECT_TRUE(check_prop31(g41_lie(), g41_omega(Rational(2), Rational(-1), Rational(3))).holds);
  EXPECT_TRUE(check_prop31(g41_lie(), OmegaForm(4)).holds);

  const CatalogEntry& flagged = find_entry("g21+2g1-5");
  ParamMap p{{Symbol::epsilon, Rational(1)}, {Symbol::gamma, Rational(0)}};
  Prop31Report r = check_prop31(lie_of(flagged, p), omega_of(flagged, p));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.condition, 'c');
  EXPECT_NE(std::find(r.vanishing_violations.begin(), r.vanishing_violations.end(), Triple{3, 3, 3}),
            r.vanishing_violations.end());

  // omega with a non-central value
  OmegaForm w(4);
  w.set(3, 3, e(4, 2));
  Prop31Report nc = check_prop31(g41_lie(), w);
  EXPECT_EQ(nc.condition, 'b');
}

TEST(Compose, Examples) {
  StructureTable t = compose(g41_lie(), g41_omega(Rational(1), Rational(0), Rational(0)));
  EXPECT_EQ(t, instantiate(find_entry("g41-1"), {{Symbol::epsilon, Rational(0)}}));
  EXPECT_EQ(compose(g41_lie(), OmegaForm(4)), g41_lie().table());
  OmegaForm bad(4);
  bad.set(3, 3, e(4, 3));
  EXPECT_THROW(compose(g41_lie(), bad), std::invalid_argument);
}

TEST(Pullback, IdentityAndZero) {
  OmegaForm w = g41_omega(Rational(1), Rational(2), Rational(3));
  EXPECT_EQ(pullback_omega(w, g41_lie(), QMatrix::identity(4)), w);
  QMatrix a = g41_normal_form(Rational(0), Rational(5), Rational(2)).witness;
  EXPECT_TRUE(pullback_omega(OmegaForm(4), g41_lie(), a).is_zero());
  EXPECT_THROW(AutoMatrix::verify(g41_lie(), QMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
               std::invalid_argument);
}

TEST(OmegaSolve, G41Family) {
  OmegaFamily f = omega_parameter_space(g41_lie());
  EXPECT_TRUE(f.quadratic_ok);
  ASSERT_EQ(f.basis.size(), 3u);
  // every basis form is a combination of the three printed ones and vice versa
  for (const auto& w : f.basis) {
    OmegaForm rebuilt = g41_omega(w.at(3, 3)[0], w.at(4, 4)[0], w.at(3, 4)[0]);
    EXPECT_EQ(rebuilt, w);
  }
}

TEST(OmegaSolve, TrivialCenterGivesNothing) {
  LieTable aff(2);  // [e1,e2] = e2
  aff.set_bracket(1, 2, e(2, 2));
  EXPECT_TRUE(omega_parameter_space(aff).basis.empty());
}

TEST(OmegaSolve, AbelianPlaneByBruteForce) {
  // On the abelian plane (a),(b) are vacuous and (c) is w(w(x,y),z) = 0:
  // the admissible set is not a linear space, so quadratic_ok must be false.
  OmegaFamily f = omega_parameter_space(LieTable(2));
  EXPECT_EQ(f.basis.size(), 6u);
  EXPECT_FALSE(f.quadratic_ok);
  OmegaForm w1(2);
  w1.set(1, 1, e(2, 2));
  EXPECT_TRUE(check_prop31(LieTable(2), w1).holds);
  OmegaForm w2(2);
  w2.set(1, 1, e(2, 1));
  EXPECT_FALSE(check_prop31(LieTable(2), w2).holds);
}

TEST(TableIO, RoundTrip) {
  StructureTable t = instantiate(find_entry("g31-4"), {{Symbol::gamma, Rational(-1, 2)}});
  std::string s = dump_table(t);
  EXPECT_EQ(parse_table(s), t);
  EXPECT_EQ(dump_table(parse_table(s)), s);
  EXPECT_THROW(parse_table(R"({"dim":2,"products":[{"i":3,"j":1,"coeffs":{"1":"1"}}]})"), std::invalid_argument);
  EXPECT_THROW(parse_table(R"({"dim":2,"products":[{"i":1,"j":1,"coeffs":{"1":0.25}}]})"), std::invalid_argument);
  EXPECT_THROW(parse_table("not json"), std::invalid_argument);
}
