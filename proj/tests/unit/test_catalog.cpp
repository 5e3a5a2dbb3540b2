#include <gtest/gtest.h>

#include <set>

#include "symleib/catalog.hpp"

using namespace symleib;

namespace {

QVector q(std::initializer_list<long long> xs) {
  QVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

ParamMap eps(long long n, long long d = 1) { return {{Symbol::epsilon, Rational(n, d)}}; }

}  // namespace

TEST(Catalog, RowCounts) {
  EXPECT_EQ(entries_for_group("G31").size(), 4u);
  EXPECT_EQ(entries_for_group("G21xR2").size(), 5u);
  std::set<std::string> slugs;
  for (const auto& e : entries()) {
    EXPECT_TRUE(slugs.insert(e.slug).second) << "duplicate " << e.slug;
    EXPECT_TRUE(e.dim == 3 || e.dim == 4);
  }
  EXPECT_EQ(entries().size(), 27u);
}

TEST(Catalog, Lookup) {
  const CatalogEntry& e = find_entry("g_{4,3}^2");
  EXPECT_EQ(&e, &find_entry("g43-2"));
  EXPECT_EQ(&e, &find_entry("G43", 2));
  OmegaForm w = omega_of(e, eps(3));
  EXPECT_EQ(w.at(3, 3), q({0, 1, 0, 0}));
  EXPECT_EQ(w.at(4, 4), q({0, 3, 0, 0}));
  EXPECT_THROW(find_entry("g99"), std::invalid_argument);
  EXPECT_THROW(find_entry("G31", 9), std::invalid_argument);
}

TEST(Catalog, InstantiateExamples) {
  StructureTable t = instantiate(find_entry("g31-3"), eps(1));
  EXPECT_EQ(t.basis_product(2, 2), q({1, 0, 0}));
  EXPECT_EQ(t.basis_product(3, 3), q({1, 0, 0}));
  EXPECT_EQ(t.basis_product(2, 3), q({1, 0, 0}));
  EXPECT_EQ(t.basis_product(3, 2), q({-1, 0, 0}));

  StructureTable u = instantiate(find_entry("g31-4"), {{Symbol::gamma, Rational(1)}});
  EXPECT_EQ(u.basis_product(2, 3), q({2, 0, 0}));
  EXPECT_EQ(u.basis_product(3, 2), q({0, 0, 0}));
}

TEST(Catalog, ZeroParametersGiveTheBaseForm) {
  for (const auto& e : entries()) {
    ParamMap zero;
    bool ok = true;
    for (const auto& spec : e.params) {
      if (!spec.admits(Rational(0))) ok = false;
      zero[spec.symbol] = Rational(0);
    }
    if (!ok) continue;
    EXPECT_EQ(instantiate(e, zero), combine(lie_of(e, zero), omega_of(e, zero))) << e.slug;
  }
}

TEST(Catalog, Admissibility) {
  const CatalogEntry& g313 = find_entry("g31-3");
  EXPECT_THROW(check_admissible(g313, eps(2)), std::invalid_argument);  // eps in {0,1}
  EXPECT_THROW(check_admissible(g313, {}), std::invalid_argument);      // missing
  ParamMap extra = eps(1);
  extra[Symbol::gamma] = Rational(1);
  EXPECT_THROW(check_admissible(g313, extra), std::invalid_argument);  // unused
  EXPECT_NO_THROW(check_admissible(g313, eps(0)));
  EXPECT_THROW(check_admissible(find_entry("g31-4"), {{Symbol::gamma, Rational(0)}}), std::invalid_argument);
}

TEST(Catalog, ParamParsing) {
  ParamMap p = parse_params("eps=1,gamma=-1/2");
  EXPECT_EQ(p.at(Symbol::epsilon), Rational(1));
  EXPECT_EQ(p.at(Symbol::gamma), Rational(-1, 2));
  EXPECT_EQ(parse_params("epsilon=2").at(Symbol::epsilon), Rational(2));
  EXPECT_THROW(parse_params("eps=0.5"), std::invalid_argument);
  EXPECT_THROW(parse_params("delta=1"), std::invalid_argument);
  EXPECT_EQ(format_params(p), "eps=1,gamma=-1/2");
}

TEST(Catalog, GridRespectsConstraints) {
  for (const auto& e : entries())
    for (const auto& p : parameter_grid(e)) EXPECT_NO_THROW(check_admissible(e, p)) << e.slug;
  EXPECT_EQ(parameter_grid(find_entry("g31-3")).size(), 2u);
  EXPECT_EQ(parameter_grid(find_entry("g31-4")).size(), 6u);  // gamma != 0
}

TEST(Catalog, FlaggedRowOnlyForNonzeroEps) {
  const CatalogEntry& e = find_entry("g21+2g1-5");
  EXPECT_TRUE(e.flagged());
  for (const auto& p : parameter_grid(e)) {
    bool nonzero = !p.at(Symbol::epsilon).is_zero();
    auto f = flagged_failure(e, p);
    EXPECT_EQ(f.has_value(), nonzero);
    if (f) {
      EXPECT_EQ(f->condition, 'c');
      EXPECT_EQ(f->triple, (Triple{3, 3, 3}));
    }
  }
}

TEST(NormalForm, Examples) {
  G41NormalForm a = g41_normal_form(Rational(1), Rational(0), Rational(0));
  EXPECT_EQ(a.class_id, 1);
  EXPECT_EQ(a.canonical.at(Symbol::epsilon), Rational(0));

  G41NormalForm b = g41_normal_form(Rational(0), Rational(1), Rational(0));
  EXPECT_EQ(b.class_id, 2);
  EXPECT_EQ(b.canonical.at(Symbol::epsilon), Rational(1));

  G41NormalForm c = g41_normal_form(Rational(0), Rational(5), Rational(2));
  EXPECT_EQ(c.class_id, 3);
  // independent check of the witness: T^{-1} w(T., T.) is the class-3 form w(e3,e4) = e1
  OmegaForm expect(4);
  expect.set(3, 4, q({1, 0, 0, 0}));
  EXPECT_EQ(pullback_omega(g41_omega(Rational(0), Rational(5), Rational(2)), g41_lie(), c.witness), expect);

  EXPECT_THROW(g41_normal_form(Rational(0), Rational(0), Rational(0)), std::invalid_argument);
  EXPECT_THROW(g41_normal_form(Rational(1), Rational(2), Rational(0)), std::invalid_argument);  // 2 not a square
}

TEST(NormalForm, WitnessesMatchCatalogRows) {
  for (auto [a, b, g] : std::vector<std::array<long long, 3>>{{1, 1, 0}, {2, 2, 0}, {1, -1, 0}, {0, -3, 0}, {0, 4, 1}}) {
    G41NormalForm nf = g41_normal_form(Rational(a), Rational(b), Rational(g));
    OmegaForm pulled = pullback_omega(g41_omega(Rational(a), Rational(b), Rational(g)), g41_lie(), nf.witness);
    EXPECT_EQ(pulled, nf.canonical_omega);
    const CatalogEntry& row = find_entry("G41", nf.class_id);
    EXPECT_EQ(combine(g41_lie(), nf.canonical_omega), instantiate(row, nf.canonical)) << row.slug;
  }
}
