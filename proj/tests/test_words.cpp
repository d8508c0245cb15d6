#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppl/ehrhart.hpp"
#include "ppl/words.hpp"

using namespace ppl;

namespace {

UniPoly from_counts(const std::vector<long>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return UniPoly(v);
}

// (1-t)^(|c|+1) sum_m prod_e C(m + c_e, c_e) t^m, cut at degree |c|.
UniPoly macmahon(const std::vector<int>& c) {
  int k = 0;
  for (int v : c) k += v;
  std::vector<Rational> series;
  for (int m = 0; m <= k; ++m) {
    BigInt p = 1;
    for (int v : c) p *= binomial(m + v, static_cast<unsigned long>(v));
    series.emplace_back(p);
  }
  const auto full = (UniPoly(series) * UniPoly{1, -1}.pow(static_cast<unsigned>(k + 1))).coeffs();
  return UniPoly(std::vector<Rational>(full.begin(), full.begin() + std::min<std::size_t>(full.size(), static_cast<std::size_t>(k) + 1)));
}

void all_contents(int len, int max_total, std::vector<int>& c, std::vector<std::vector<int>>& out, int used = 0) {
  if (static_cast<int>(c.size()) == len) {
    out.push_back(c);
    return;
  }
  for (int v = 0; used + v <= max_total; ++v) {
    c.push_back(v);
    all_contents(len, max_total, c, out, used + v);
    c.pop_back();
  }
}

UniPoly hstar(const Preorder& t) { return hstar_from_ehrhart(ehrhart_dual_formula(t), t.size()); }

}  // namespace

TEST(Words, SingleVertexOfSizeTwo) {
  Preorder t = fixtures::single_vertex(2);
  auto W = words_W(t);
  BigInt total = 0;
  for (const auto& wc : W) total += wc.count;
  EXPECT_EQ(total, 4);
  EXPECT_EQ(hstar_words_descent(t), UniPoly({1, 3}));
  EXPECT_EQ(hstar_asc_star(t), UniPoly({1, 3}));
  EXPECT_EQ(hstar(t), UniPoly({1, 3}));
}

TEST(Words, AntichainIsOneClass) {
  for (int n = 1; n <= 4; ++n) {
    auto W = words_W(antichain(n));
    ASSERT_EQ(W.size(), 1U);
    EXPECT_EQ(W[0].content, std::vector<int>(static_cast<std::size_t>(n), 1));
    EXPECT_EQ(W[0].count, BigInt(factorial(static_cast<unsigned>(n))));
  }
  EXPECT_EQ(hstar_words_descent(antichain(2)), UniPoly({1, 1}));
  EXPECT_EQ(hstar_filter_formula(antichain(2)), UniPoly({1, 1}));
}

TEST(Words, FilterFormulaSmallest) {
  EXPECT_EQ(hstar_filter_formula(antichain(1)), UniPoly({1}));
  EXPECT_EQ(hstar_asc_star(antichain(1)), UniPoly({1}));
  for (int n = 1; n <= 3; ++n)
    for (const Preorder& t : enumerate_preorders(n)) EXPECT_EQ(hstar_filter_formula(t), hstar(t)) << canonical_key(t);
}

TEST(Words, RunningExample) {
  Preorder t = fixtures::running_example();
  EXPECT_EQ(count_words(t), 760);
  EXPECT_EQ(hstar_words_descent(t), hstar(t));
  EXPECT_EQ(hstar_filter_formula(t), hstar(t));
  EXPECT_THROW(hstar_asc_star(t), NoMinimumVertex);
}

TEST(Words, AscStarOnChains) {
  EXPECT_EQ(hstar_asc_star(chain(2)), hstar(chain(2)));
  // minimum vertex holding the larger label
  Preorder t = Preorder::build({{0}, {1}}, {{1, 0}});
  EXPECT_EQ(asc_star_order(t), (std::vector<int>{1, 0}));
  EXPECT_EQ(hstar_asc_star(t), hstar(t));
}

TEST(Words, ClassesMatchBruteForceWords) {
  for (int n = 1; n <= 4; ++n)
    for (const Preorder& t : enumerate_preorders(n)) {
      const auto words = oracle::brute_words(t);
      EXPECT_EQ(count_words(t), BigInt(static_cast<long>(words.size())));
      std::vector<long> by_stat(static_cast<std::size_t>(n), 0);
      std::set<std::vector<int>> contents;
      for (const auto& w : words) {
        int des = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) des += w[i] > w[i + 1];
        ++by_stat[static_cast<std::size_t>(n - 1 - des)];
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (int x : w) ++c[static_cast<std::size_t>(x)];
        contents.insert(c);
      }
      EXPECT_EQ(hstar_words_descent(t), from_counts(by_stat)) << canonical_key(t);
      std::set<std::vector<int>> classes;
      for (const auto& wc : words_W(t)) classes.insert(wc.content);
      EXPECT_EQ(classes, contents);
    }
}

TEST(Descent, ThreeRoutesAgree) {
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<int>> cs;
    std::vector<int> c;
    all_contents(len, 6, c, cs);
    for (const auto& content : cs) {
      const UniPoly dp = descent_polynomial(content);
      EXPECT_EQ(dp, from_counts(oracle::permutation_descents(content)));
      EXPECT_EQ(dp, macmahon(content));
      EXPECT_EQ(dp.eval(1), Rational(multinomial(content)));
    }
  }
}

TEST(Descent, Eulerian) {
  EXPECT_EQ(descent_polynomial(std::vector<int>{1, 1, 1}), UniPoly({1, 4, 1}));
  EXPECT_EQ(descent_polynomial(std::vector<int>{1, 1, 1, 1}), UniPoly({1, 11, 11, 1}));
}

TEST(TotalOrder, Independence) {
  std::vector<std::vector<int>> two{{0, 1}, {1, 0}};
  EXPECT_TRUE(total_order_independence(antichain(2), two));
  std::vector<std::vector<int>> all{natural_order(3)};
  auto p = natural_order(3);
  while (std::next_permutation(p.begin(), p.end())) all.push_back(p);
  EXPECT_TRUE(total_order_independence(chain(3), all));
  std::mt19937 rng(7);
  std::vector<std::vector<int>> sample{natural_order(5)};
  for (int i = 0; i < 5; ++i) {
    auto o = natural_order(5);
    std::shuffle(o.begin(), o.end(), rng);
    sample.push_back(o);
  }
  EXPECT_TRUE(total_order_independence(fixtures::running_example(), sample));
  EXPECT_THROW(total_order_independence(chain(3), {natural_order(3)}), PrecondError);
}

TEST(Properties, WordFormulasUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const Preorder& t : enumerate_preorders(n)) {
      const UniPoly h = hstar(t);
      EXPECT_EQ(count_words(t), normalized_volume(t));
      EXPECT_EQ(hstar_words_descent(t), h) << canonical_key(t);
      if (n > 5) continue;
      EXPECT_EQ(hstar_filter_formula(t), h) << canonical_key(t);
      if (t.minimum_vertex()) {
        EXPECT_EQ(hstar_asc_star(t), h) << canonical_key(t);
      }
    }
}
