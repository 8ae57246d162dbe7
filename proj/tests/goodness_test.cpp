#include <gtest/gtest.h>

#include <random>

#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/goodness.hpp"
#include "sparse_ramsey/structure.hpp"
#include "support.hpp"

using namespace sparse_ramsey;
namespace fam = sparse_ramsey::families;
namespace ts = testing_support;

namespace {

BoundReport eval(std::string_view name, std::vector<Rational> args) { return evaluate_bound(name, args); }

}  // namespace

TEST(Classical, ChvatalAndBurr) {
  EXPECT_EQ(chvatal(5, 3), 9);
  EXPECT_EQ(chvatal(1, 7), 1);
  EXPECT_EQ(burr_lower(3, 1, 5), 9);
  EXPECT_EQ(burr_lower(2, 2, 5), 6);
  EXPECT_THROW(chvatal(0, 3), std::invalid_argument);
  EXPECT_THROW(burr_lower(2, 6, 5), std::invalid_argument);
}

TEST(ChromaticData, Examples) {
  auto c5 = chromatic_data(fam::cycle(5));
  EXPECT_EQ(c5.chi, 3);
  EXPECT_EQ(c5.s_min, 1);
  auto p6 = chromatic_data(fam::path(6));
  EXPECT_EQ(p6.chi, 2);
  EXPECT_EQ(p6.s_min, 3);
  auto k4 = chromatic_data(fam::complete(4));
  EXPECT_EQ(k4.chi, 4);
  EXPECT_EQ(k4.s_min, 1);
  auto e3 = chromatic_data(Graph(3));
  EXPECT_EQ(e3.chi, 1);
  EXPECT_EQ(chromatic_data(fam::petersen()).chi, 3);
  EXPECT_THROW(chromatic_data(Graph(kChromaticCap + 1)), std::invalid_argument);
}

TEST(ChromaticData, PathsAndOddCycles) {
  for (int k = 2; k <= 12; ++k) {
    auto d = chromatic_data(fam::path(k));
    EXPECT_EQ(d.chi, 2) << k;
    EXPECT_EQ(d.s_min, k / 2) << k;
  }
  for (int k = 3; k <= 11; k += 2) {
    auto d = chromatic_data(fam::cycle(k));
    EXPECT_EQ(d.chi, 3) << k;
    EXPECT_EQ(d.s_min, 1) << k;
  }
}

TEST(Predict, Examples) {
  GoodnessPrediction p = predict_path(fam::path(5), 4);
  EXPECT_EQ(p.value, 6);
  EXPECT_EQ(p.term_path_half, 6);
  EXPECT_EQ(p.alpha_prime, 1);
  EXPECT_FALSE(p.regime_met);

  GoodnessPrediction star = predict_path(fam::star(12), 4);
  EXPECT_EQ(star.alpha_prime, 0);
  EXPECT_EQ(star.gamma, 1);
  EXPECT_EQ(star.term_alpha, 13);
  EXPECT_EQ(star.value, 13);

  GoodnessPrediction c = predict_cycle(fam::cycle(7), 5);
  EXPECT_EQ(c.value, 13);
  EXPECT_TRUE(c.parity_met);
  GoodnessPrediction even = predict_cycle(fam::cycle(7), 4);
  EXPECT_EQ(even.value, 13);
  EXPECT_FALSE(even.parity_met);
  EXPECT_FALSE(even.warnings.empty());

  EXPECT_THROW(predict_path(fam::disjoint_union(fam::path(2), fam::path(2)), 3), PremiseError);
  EXPECT_THROW(predict_cycle(fam::path(4), 2), std::invalid_argument);
}

TEST(Predict, DominatesTheClassicalLowerBounds) {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const Graph g = ts::random_graph(n, 0.3, rng);
    if (!is_connected(g)) continue;
    for (int k = 2; k <= 8; ++k) {
      const GoodnessPrediction p = predict_path(g, k);
      if (k / 2 <= n) {
        ASSERT_GE(p.value, burr_lower(2, k / 2, n));
      }
      ASSERT_EQ(p.value, std::max(p.term_path_half, p.term_alpha));
    }
    for (int k = 3; k <= 9; k += 2) ASSERT_EQ(predict_cycle(g, k).value, burr_lower(3, 1, n));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(eval("general_cycle", {10, 10, 3}).value, Rational(68));
  BoundReport tp = eval("tree_path", {48, 4, Rational(3, 2)});
  EXPECT_EQ(tp.value, Rational(72));
  EXPECT_TRUE(tp.all_met());
  EXPECT_FALSE(eval("tree_path", {47, 4, Rational(3, 2)}).all_met());
  EXPECT_EQ(eval("sparse_path", {100, 3}).value, Rational(307));
  EXPECT_FALSE(eval("sparse_path", {100, 3}).all_met());
  EXPECT_TRUE(eval("sparse_path", {100, 3, 101}).all_met());
  EXPECT_FALSE(eval("sparse_path", {100, 3, 102}).all_met());
  EXPECT_EQ(eval("sparse_cycle", {36, 3}).value, Rational(279));
  EXPECT_EQ(eval("base", {36, 3}).value, Rational(54));
  EXPECT_EQ(eval("add_edge", {9, 4}).value, Rational(12));
  EXPECT_EQ(eval("findmatch", {20, 5}).value, Rational(21));
  EXPECT_EQ(eval("general_cycle", {3, 1, 3}).value, Rational(25, 3));
}

TEST(Bounds, RejectsUnknownNamesAndArity) {
  EXPECT_THROW(eval("nope", {1, 2}), std::invalid_argument);
  EXPECT_THROW(eval("base", {1}), std::invalid_argument);
  EXPECT_THROW(eval("findmatch", {20, Rational(5, 2)}), std::invalid_argument);
  EXPECT_EQ(bound_names().size(), 7U);
}
