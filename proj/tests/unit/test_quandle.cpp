#include <gtest/gtest.h>

#include "symleib/quandle.hpp"

using namespace symleib;

namespace {

Vector v(std::initializer_list<long long> xs) {
  Vector out;
  for (auto x : xs) out.emplace_back(Rational(x));
  return out;
}

QuandlePredicate q_of(const std::string& slug, ParamMap p = {}) {
  return QuandlePredicate(RackStructure::generic(find_entry(slug), p));
}

}  // namespace

TEST(Membership, Examples) {
  QuandlePredicate q1 = q_of("g31-1");
  EXPECT_TRUE(q1.contains(v({5, 2, -2})));   // b = -c
  EXPECT_FALSE(q1.contains(v({0, 1, 0})));
  EXPECT_TRUE(q1.contains(q1.group().identity()));

  QuandlePredicate q3 = q_of("g31-3", {{Symbol::epsilon, Rational(1)}});
  EXPECT_FALSE(q3.contains(v({0, 1, 0})));  // b^2 + c^2 = 1
  EXPECT_TRUE(q3.contains(v({7, 0, 0})));

  // membership agrees with the definition g |> g = g
  for (const auto& p : {v({1, 1, -1}), v({0, 2, 1}), v({3, 0, 0})})
    EXPECT_EQ(q1.contains(p), q1.rack().op(p, p) == p);
}

TEST(Membership, ConjugationIsWholeGroup) {
  QuandlePredicate c(RackStructure::conjugation(make_group("G31")));
  EXPECT_TRUE(c.whole_group());
  EXPECT_TRUE(c.contains(v({1, 2, 3})));
}

TEST(Sampling, MembersOnEveryBranch) {
  QuandlePredicate q4 = q_of("g31-4", {{Symbol::gamma, Rational(2)}});  // 2 gamma b c = 0
  EXPECT_EQ(q4.quadric().branches.size(), 2u);
  QSample s = sample_Q(q4, 200, 9);
  ASSERT_EQ(s.points.size(), 200u);
  bool b_zero = false, c_zero = false;
  for (const auto& p : s.points) {
    EXPECT_TRUE(q4.contains(p));
    EXPECT_EQ(p[0].is_exact(), true);
    b_zero = b_zero || (p[1].is_zero() && !p[2].is_zero());
    c_zero = c_zero || (p[2].is_zero() && !p[1].is_zero());
  }
  EXPECT_TRUE(b_zero && c_zero);

  QSample v1 = sample_Q(q_of("g31-1"), 50, 1);
  for (const auto& p : v1.points) EXPECT_EQ(p[1], -p[2]);
  EXPECT_TRUE(sample_Q(q_of("g31-1"), 0, 1).points.empty());
}

TEST(Sampling, FloatingGroupsMembersWithinTolerance) {
  for (const auto& e : entries()) {
    ParamMap p = parameter_grid(e).front();
    if (flagged_failure(e, p)) continue;
    QuandlePredicate q(RackStructure::generic(e, p));
    for (const auto& x : sample_Q(q, 30, 2).points) {
      Vector y = q.rack().op(x, x);
      EXPECT_LT(max_deviation(y, x), 1e-9) << e.slug;
    }
  }
}

TEST(QuandleAxioms, AllCatalogQuandles) {
  CheckOptions opt;
  opt.samples = 100;
  opt.grid_budget = 5000;
  for (const auto& e : entries()) {
    ParamMap p = parameter_grid(e).front();
    if (flagged_failure(e, p)) continue;
    AxiomReport r = check_quandle(QuandlePredicate(RackStructure::generic(e, p)), opt);
    EXPECT_TRUE(r.ok()) << r.to_json().dump();
  }
}

TEST(QuasiTrivial, Statements) {
  EXPECT_TRUE(is_quasi_trivial(q_of("g31-1"), 500, 1).holds);
  EXPECT_TRUE(is_quasi_trivial(q_of("g41-1", {{Symbol::epsilon, Rational(1)}}), 500, 1).holds);
  Verdict m = is_quasi_trivial(q_of("g41-1", {{Symbol::epsilon, Rational(-1)}}), 20000, 1);
  EXPECT_FALSE(m.holds);
  ASSERT_TRUE(m.counterexample);
  EXPECT_EQ(m.counterexample->args.size(), 2u);
}

TEST(QuasiTrivial, ClaimTableCoversTheFamilies) {
  std::size_t claimed = 0;
  for (const auto& c : quasi_trivial_claims()) {
    const CatalogEntry& e = find_entry(c.slug);
    EXPECT_NO_THROW(check_admissible(e, c.params)) << c.slug;
    claimed += c.claimed;
  }
  EXPECT_GT(claimed, 0u);
  ClaimOutcome o = evaluate_claim({"g31-1", {}, true}, 42, 500, 1000);
  EXPECT_EQ(o.status, "confirmed");
}

TEST(Medial, G31Family) {
  EXPECT_TRUE(is_medial(q_of("g31-1"), 200, 1, kDefaultEpsNum, 20000).holds);
  EXPECT_TRUE(is_medial(q_of("g31+g1-2"), 200, 1, kDefaultEpsNum, 20000).holds);
  Verdict k = is_kei(q_of("g31-1"), 100, 1, kDefaultEpsNum, 1000);
  EXPECT_FALSE(k.grid.empty());
}

TEST(PrintedSets, AgreementIsReported) {
  PrintedSetReport ok = compare_printed_set(find_entry("g31-1"), {});
  EXPECT_TRUE(ok.agree());
  EXPECT_GT(ok.points, 0u);
  PrintedSetReport bad = compare_printed_set(find_entry("g31-3"), {{Symbol::epsilon, Rational(1)}});
  EXPECT_FALSE(bad.agree());
  EXPECT_FALSE(bad.examples.empty());
}

TEST(Finite, DihedralAndOrbits) {
  FiniteQuandle r3 = FiniteQuandle::dihedral(3);
  EXPECT_EQ(r3.op(1, 2), 0);
  EXPECT_TRUE(r3.check_axioms().ok());
  EXPECT_TRUE(r3.is_kei().holds);
  EXPECT_EQ(r3.orbit(0), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(FiniteQuandle::dihedral(4).center().empty());
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(FiniteQuandle::dihedral(n).is_kei().holds) << n;
}

TEST(Finite, TrivialAndAlexander) {
  FiniteQuandle t2 = FiniteQuandle::trivial(2);
  EXPECT_EQ(t2.table(), (std::vector<std::vector<int>>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(FiniteQuandle::trivial(4).check_axioms().ok());
  EXPECT_TRUE(FiniteQuandle::trivial(4).is_kei().holds);

  FiniteQuandle a51 = FiniteQuandle::alexander(5, 1);
  EXPECT_EQ(a51.table(), FiniteQuandle::trivial(5).table());
  Verdict m = FiniteQuandle::alexander(5, 2).is_medial();
  EXPECT_TRUE(m.holds);
  EXPECT_EQ(m.checked, 625u);
  EXPECT_THROW(FiniteQuandle::alexander(6, 2), std::invalid_argument);
}

TEST(Finite, ConjugationControl) {
  FiniteQuandle s4 = FiniteQuandle::conjugation_closure({{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}, "S4 transpositions");
  EXPECT_EQ(s4.size(), 6);
  EXPECT_TRUE(s4.check_axioms().ok());
  EXPECT_TRUE(s4.is_kei().holds);
  Verdict m = s4.is_medial();
  EXPECT_FALSE(m.holds);
  EXPECT_TRUE(m.counterexample);
}

TEST(Finite, TableValidationAndJson) {
  EXPECT_THROW(FiniteQuandle({{0, 0}, {0, 1}}), std::invalid_argument);  // column 0 not a permutation
  FiniteQuandle r5 = FiniteQuandle::dihedral(5);
  FiniteQuandle back = FiniteQuandle::from_json(r5.to_json());
  EXPECT_EQ(back.table(), r5.table());
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) EXPECT_EQ(r5.op_inverse(r5.op(x, y), y), x);
}

TEST(Finite, QuasiTriviality) {
  EXPECT_TRUE(FiniteQuandle::trivial(3).is_quasi_trivial().holds);
  EXPECT_FALSE(FiniteQuandle::dihedral(3).is_quasi_trivial().holds);
  EXPECT_EQ(FiniteQuandle::dihedral(3).inner_group_order(), 6u);
}
