#include <gtest/gtest.h>

#include "sparse_ramsey/canonical.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/goodness.hpp"
#include "sparse_ramsey/ramsey.hpp"

using namespace sparse_ramsey;
namespace fam = sparse_ramsey::families;

namespace {

int exact(const Graph& g, const Target& t, RamseyMethod m = RamseyMethod::kHereditaryExtension, int n_max = 9) {
  RamseyOptions o;
  o.n_max = n_max;
  o.method = m;
  RamseyCertificate c = ramsey_number(g, t, o);
  EXPECT_TRUE(c.determined);
  return c.value;
}

}  // namespace

TEST(Arrows, Examples) {
  EXPECT_TRUE(arrows(fam::complete(6), fam::cycle(3), Target::clique(3)));
  EXPECT_FALSE(arrows(fam::cycle(5), fam::cycle(3), Target::clique(3)));
  EXPECT_TRUE(arrows(fam::cycle(5), fam::path(5), Target::path(2)));
  EXPECT_FALSE(arrows(fam::disjoint_union(fam::complete(4), fam::complete(4)), fam::cycle(5), Target::cycle(5)));
  EXPECT_TRUE(contains_pattern(fam::petersen(), fam::cycle(5)));
  EXPECT_TRUE(contains_pattern(fam::complete(4), fam::complete(4)));
  EXPECT_FALSE(contains_pattern(fam::complete_multipartite(std::vector<int>{3, 3}), fam::complete(3)));
}

TEST(Ramsey, ClassicalValues) {
  EXPECT_EQ(exact(fam::path(3), Target::path(3)), 3);
  EXPECT_EQ(exact(fam::path(4), Target::path(4)), 5);
  EXPECT_EQ(exact(fam::complete(3), Target::clique(3)), 6);
  EXPECT_EQ(exact(fam::cycle(4), Target::cycle(4)), 6);
  EXPECT_EQ(exact(fam::cycle(5), Target::cycle(5)), 9);
  EXPECT_EQ(exact(fam::path(2), Target::path(5)), 5);
}

TEST(Ramsey, TreesVersusTriangle) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t code : canonical_codes(n)) {
      const Graph g = decode_small_code(code, n);
      if (g.size() != n - 1 || !is_connected(g)) continue;
      EXPECT_EQ(exact(g, Target::clique(3)), chvatal(n, 3)) << n << " " << code;
    }
}

TEST(Ramsey, MethodsAgree) {
  const std::vector<Target> targets = {Target::path(3), Target::path(4), Target::cycle(3), Target::clique(3),
                                       Target::cycle(4)};
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t code : canonical_codes(n)) {
      const Graph g = decode_small_code(code, n);
      if (g.size() == 0) continue;
      for (const Target& t : targets) {
        RamseyOptions o;
        o.n_max = 7;
        RamseyCertificate a = ramsey_number(g, t, o);
        o.method = RamseyMethod::kAtlasScan;
        RamseyCertificate b = ramsey_number(g, t, o);
        ASSERT_EQ(a.determined, b.determined) << code << " " << t.to_string();
        ASSERT_EQ(a.lower_bound, b.lower_bound) << code << " " << t.to_string();
      }
    }
}

TEST(Ramsey, CertificatesVerify) {
  RamseyCertificate c = ramsey_number(fam::path(4), Target::path(4));
  ASSERT_TRUE(c.determined);
  EXPECT_EQ(c.lower_witness.order(), c.value - 1);
  CertificateCheck check = verify_certificate(c);
  EXPECT_TRUE(check.upper_checked);
  EXPECT_TRUE(check.passed()) << check.detail;

  // A tampered witness is caught.
  c.lower_witness = fam::complete(4);
  EXPECT_FALSE(verify_certificate(c).passed());
}

TEST(Ramsey, BudgetReportsLowerBound) {
  RamseyOptions o;
  o.n_max = 8;
  RamseyCertificate c = ramsey_number(fam::cycle(5), Target::cycle(5), o);
  EXPECT_FALSE(c.determined);
  EXPECT_EQ(c.lower_bound, 9);
  EXPECT_EQ(c.lower_witness.order(), 8);
  EXPECT_FALSE(arrows(c.lower_witness, fam::cycle(5), Target::cycle(5)));
  o.n_max = 11;
  EXPECT_THROW(ramsey_number(fam::path(2), Target::path(2), o), std::out_of_range);
}

TEST(Turan, Examples) {
  EXPECT_EQ(turan_number(5, 4).value, 4);
  EXPECT_EQ(turan_number(6, 4).value, 6);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(turan_number(n, 2).value, 0);
    EXPECT_EQ(turan_number(n, 3).value, n / 2);
  }
  TuranResult t = turan_number(7, 5);
  EXPECT_EQ(t.extremal.size(), t.value);
  EXPECT_THROW(turan_number(10, 3), std::out_of_range);
  EXPECT_THROW(turan_number(5, 1), std::invalid_argument);
}
