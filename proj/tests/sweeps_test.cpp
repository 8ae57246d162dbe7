#include <gtest/gtest.h>

#include "sparse_ramsey/sweeps.hpp"

using namespace sparse_ramsey;

namespace {

SweepOptions small(int max_n, int threads = 1) {
  SweepOptions o;
  o.max_n = max_n;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(Sweeps, DichotomyPassesUpToSeven) {
  SweepReport r = dichotomy_sweep(small(7));
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 0U);
}

TEST(Sweeps, StrucfPassesUpToSeven) {
  SweepReport r = strucf_sweep(small(7), 5);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 0U);
}

TEST(Sweeps, FindpathPasses) {
  SweepReport r = findpath_sweep(small(7), 2, {4, 5});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 0U);
}

TEST(Sweeps, ErdosGallaiWitnessesEquality) {
  SweepReport r = erdos_gallai_sweep(small(6), 4);
  EXPECT_TRUE(r.passed());
  bool found = false;
  for (const auto& note : r.notes)
    if (note.find("n=6") != std::string::npos && note.find("k=4") != std::string::npos) found = true;
  EXPECT_TRUE(found);
}

TEST(Sweeps, AddEdgeOnTinyGraphs) {
  SweepReport r = addedge_sweep(small(9), 3, {3});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances, 0U);
}

TEST(Sweeps, ThreadCountDoesNotChangeRows) {
  SweepOptions one = small(7, 1);
  one.record_rows = true;
  SweepOptions three = small(7, 3);
  three.record_rows = true;
  SweepReport a = dichotomy_sweep(one, {3});
  SweepReport b = dichotomy_sweep(three, {3});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    ASSERT_EQ(a.rows[i].graph6, b.rows[i].graph6);
    ASSERT_EQ(a.rows[i].params, b.rows[i].params);
  }
  EXPECT_EQ(a.instances, b.instances);
}

TEST(Sweeps, UnknownName) {
  EXPECT_THROW(run_sweep("nope", small(5)), std::invalid_argument);
  EXPECT_EQ(sweep_names().size(), 5U);
}
