#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppl/ehrhart.hpp"

using namespace ppl;

namespace {

UniPoly P(std::initializer_list<Rational> c) { return UniPoly(c); }

UniPoly over120(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(Rational(x) / 120);
  return UniPoly(v);
}

BiPoly running_double() {
  // rows: u-degree, columns: v-degree, numerators over 120.
  const std::vector<std::vector<long>> num{
      {120, 274, 225, 85, 15, 1},
      {900, 1760, 1115, 280, 25},
      {2660, 4180, 1830, 230},
      {3860, 4350, 990},
      {2740, 1680},
      {760},
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : num) {
    rows.emplace_back();
    for (long x : r) rows.back().emplace_back(Rational(x) / 120);
  }
  return BiPoly(rows);
}

}  // namespace

TEST(Ehrhart, DualFormulaExamples) {
  EXPECT_EQ(ehrhart_dual_formula(antichain(2)), P({1, 2, 1}));
  EXPECT_EQ(ehrhart_dual_formula(antichain(1)), P({1, 1}));
  EXPECT_EQ(ehrhart_dual_formula(fixtures::running_example()), over120({120, 900, 2660, 3860, 2740, 760}));
}

TEST(Ehrhart, InterpolationExamples) {
  EXPECT_EQ(ehrhart_interpolation(fixtures::single_vertex(2), 1, 0), P({1, 3, 2}));
  EXPECT_EQ(ehrhart_interpolation(fixtures::running_example(), 1, 0), over120({120, 900, 2660, 3860, 2740, 760}));
  EXPECT_EQ(ehrhart_interpolation(fixtures::running_example(), 1, 1), over120({120, 1174, 4645, 9240, 9215, 3686}));
  for (const Preorder& t : enumerate_preorders(3)) EXPECT_EQ(ehrhart_interpolation(t, 0, 1), binom_shifted(3, 3));
}

TEST(Ehrhart, NormalizedVolume) {
  EXPECT_EQ(normalized_volume(fixtures::running_example()), 760);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(normalized_volume(antichain(n)), BigInt(factorial(static_cast<unsigned>(n))));
    BigInt nn = 1;
    for (int i = 0; i < n; ++i) nn *= n;
    EXPECT_EQ(normalized_volume(fixtures::single_vertex(n)), nn);
  }
}

TEST(Ehrhart, RecordInvariants) {
  auto rec = ehrhart_record(fixtures::running_example());
  EXPECT_EQ(rec.hstar.eval(1), 760);
  EXPECT_EQ(rec.ehr.eval(1), 92);
  EXPECT_EQ(rec.nvol, 760);
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta_polynomial(PointPoset(antichain(1), 1, 0)), P({0, 1}));
  PointPoset P1(fixtures::running_example(), 1, 0);
  EXPECT_EQ(zeta_polynomial(P1).eval(-1), -18);
}

TEST(QZeta, Examples) {
  PointPoset one(antichain(1), 1, 0);
  for (const auto& q : default_q_samples()) {
    auto s = qzeta_sides(one, q);
    EXPECT_EQ(s.lhs, -1 / q);
    EXPECT_EQ(s.rhs, -1 / q);
  }
  PointPoset sq(antichain(2), 1, 0);
  for (const auto& q : default_q_samples()) {
    auto s = qzeta_sides(sq, q);
    EXPECT_EQ(s.rhs, 1 / (q * q));
    EXPECT_EQ(s.lhs, s.rhs);
  }
  PointPoset P1(fixtures::running_example(), 1, 0);
  for (const auto& q : default_q_samples()) {
    auto s = qzeta_sides(P1, q);
    const Rational expected = -(2 * q + 1) * (q * q + 4 * q + 1) / pow(q, 5);
    EXPECT_EQ(s.lhs, expected) << to_string(q);
    EXPECT_EQ(s.rhs, expected) << to_string(q);
  }
  EXPECT_TRUE(qzeta_check(fixtures::running_example(), default_q_samples()));
  EXPECT_THROW(qzeta_sides(P1, Rational(1)), PrecondError);
}

TEST(QZeta, LeftSideMatchesPairwiseOracle) {
  // Rebuild the q-zeta evaluation from oracle multichain sums.
  Preorder t = fixtures::vee();
  PointPoset Pp(t, 1, 0);
  std::vector<std::vector<int>> pts;
  for (std::size_t i = 0; i < Pp.size(); ++i) pts.emplace_back(Pp.point(i).begin(), Pp.point(i).end());
  const Rational q(3);
  std::vector<std::pair<Rational, Rational>> nodes;
  for (int m = 2; m <= 5; ++m) nodes.emplace_back(q_integer(m, q), oracle::pairwise_weighted(pts, m - 1, q));
  EXPECT_EQ(interpolate(nodes).eval(Rational(-1) / q), qzeta_sides(Pp, q).lhs);
}

TEST(Nabla, RowsAndColumns) {
  Preorder t = fixtures::running_example();
  NablaBlock N = nabla_block(t, 2, 2);
  const UniPoly ehr = ehrhart_dual_formula(t);
  const UniPoly z = zeta_polynomial(PointPoset(t, 1, 0));
  for (int l = 0; l <= 2; ++l) EXPECT_EQ(Rational(N[1][static_cast<std::size_t>(l)]), ehr.eval(l));
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(Rational(N[static_cast<std::size_t>(k)][1]), z.eval(k + 1));
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(N[static_cast<std::size_t>(k)][0], 1);
  EXPECT_EQ(N[0][2], 1);
}

TEST(Double, RunningExample) {
  Preorder t = fixtures::running_example();
  BiPoly E = double_ehrhart(t);
  EXPECT_EQ(E, running_double());
  EXPECT_TRUE(double_reciprocity_check(E, 5));
  EXPECT_EQ(E.diagonal(), ehrhart_interpolation(t, 1, 1));
}

TEST(Double, SmallCases) {
  BiPoly one = double_ehrhart(antichain(1));
  EXPECT_EQ(one, BiPoly({{1, 1}, {1}}));
  EXPECT_TRUE(double_reciprocity_check(one, 1));
  EXPECT_TRUE(double_reciprocity_check(antichain(2)));
  // Brute-force point counts of Q(r, s) on a grid agree with the polynomial.
  for (const Preorder& t : enumerate_preorders(2)) {
    BiPoly E = double_ehrhart(t);
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s)
        EXPECT_EQ(E.eval(r, s), Rational(static_cast<long>(oracle::brute_points(t, r, s).size())));
  }
}

TEST(Properties, RoutesAndDualityUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (const Preorder& t : enumerate_preorders(n)) {
      const UniPoly ehr = ehrhart_dual_formula(t);
      EXPECT_EQ(ehr, ehrhart_interpolation(t, 1, 0));
      const UniPoly z = zeta_polynomial(PointPoset(t.dual(), 1, 0));
      EXPECT_EQ(ehr, z.compose_affine(1, 1));
      for (const auto& c : ehr.coeffs()) EXPECT_GE(c, 0);
      if (n <= 4) {
        const BiPoly E = double_ehrhart(t);
        EXPECT_EQ(E.restrict_y_zero(), ehr);
        EXPECT_EQ(E.restrict_x_zero(), binom_shifted(n, n));
        EXPECT_EQ(E.diagonal(), ehrhart_interpolation(t, 1, 1));
        // Reciprocity at -2 against the strict interior count.
        Rational lhs = ehr.eval(-2);
        if (n % 2 == 1) lhs = -lhs;
        EXPECT_EQ(lhs, Rational(static_cast<long>(upper_boundary_complement(PointPoset(t, 1, 0)).size())));
      }
    }
}
