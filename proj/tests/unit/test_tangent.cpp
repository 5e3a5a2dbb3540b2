#include <gtest/gtest.h>

#include "symleib/tangent.hpp"

using namespace symleib;

TEST(Tangent, G31v1Table) {
  TangentTable t = leibniz_from_rack(RackStructure::generic(find_entry("g31-1"), {}));
  auto at = [&](int i, int j, int k) { return t.at(i, j, k).to_double(); };
  EXPECT_NEAR(at(2, 2, 1), 1.0, 1e-12);
  EXPECT_NEAR(at(3, 3, 1), 1.0, 1e-12);
  EXPECT_NEAR(at(2, 3, 1), 2.0, 1e-12);
  EXPECT_NEAR(at(3, 2, 1), 0.0, 1e-12);
  EXPECT_TRUE(compare_tables(t, instantiate(find_entry("g31-1"), {}), 1e-9).pass);
}

TEST(Tangent, ConjugationGivesTheBracket) {
  TangentTable t = leibniz_from_rack(RackStructure::conjugation(make_group("G31")));
  EXPECT_TRUE(compare_tables(t, lie_of(find_entry("g31-1"), {}).table(), 1e-9).pass);
  TangentTable f = leibniz_from_rack(RackStructure::conjugation(make_group("G33xR")));
  EXPECT_TRUE(compare_tables(f, lie_of(find_entry("g33+g1"), {}).table(), 1e-5).pass);
}

TEST(Tangent, TrivialRackGivesZero) {
  TangentTable t = leibniz_from_rack(RackStructure::trivial(make_group("G43")));
  TableComparison c = compare_tables(t, StructureTable(4), 1e-12);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.max_dev, 0.0);
}

TEST(Tangent, WrongVariantIsDetected) {
  TangentTable t = leibniz_from_rack(RackStructure::generic(find_entry("g31-1"), {}));
  TableComparison c = compare_tables(t, instantiate(find_entry("g31-2"), {}), 1e-5);
  EXPECT_FALSE(c.pass);
  EXPECT_NEAR(c.max_dev, 1.0, 1e-9);
  EXPECT_EQ(c.worst, (Triple{2, 2, 1}));
}

TEST(Tangent, RoundTrips) {
  RoundTripReport g41 = tangent_roundtrip(find_entry("g41-1"), {{Symbol::epsilon, Rational(1)}});
  EXPECT_TRUE(g41.pass()) << g41.to_json().dump();
  EXPECT_EQ(g41.table.max_dev, 0.0);
  for (const auto& e : entries()) {
    ParamMap p = parameter_grid(e).front();
    if (flagged_failure(e, p)) continue;
    RoundTripReport r = tangent_roundtrip(e, p);
    EXPECT_TRUE(r.pass()) << r.to_json().dump();
    EXPECT_LE(r.leibniz_defect, 1e-4);
  }
}

TEST(Tangent, RightLeibnizDefectOfAnExactTable) {
  TangentTable t(2, "e1.e1=e1", "by hand");
  t.set(1, 1, 1, Scalar(Rational(1)));
  EXPECT_EQ(right_leibniz_defect(t), 1.0);  // (e1.e1).e1 = e1 vs 2 e1
}
