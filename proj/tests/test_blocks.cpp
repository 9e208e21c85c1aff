#include <gtest/gtest.h>

#include <map>

#include "spx/spx.hpp"

using namespace spx;

TEST(BlockMembers, BlockOfThreeOneContainsSixFiveTwo) {
  const auto members = block_members(13, 3, Partition({3, 1}));
  EXPECT_NE(std::find(members.begin(), members.end(), Partition({6, 5, 2})), members.end());
  for (const auto& mu : members) EXPECT_EQ(p_core_and_weight(mu, 3).core, Partition({3, 1}));
}

TEST(BlockMembers, CoreOfFullSize) {
  const auto members = block_members(4, 3, Partition({3, 1}));
  ASSERT_EQ(members.size(), 1u);
  EXPECT_EQ(members[0], Partition({3, 1}));
  EXPECT_EQ(block_report(4, 3, Partition({3, 1})).label.weight, 0);
}

TEST(BlockMembers, RejectsInadmissibleCores) {
  EXPECT_THROW(block_members(8, 3, Partition({3, 1})), invalid_input);
  EXPECT_THROW(block_members(6, 3, Partition({3})), invalid_input);
  EXPECT_THROW(block_members(2, 3, Partition({3, 1})), invalid_input);
}

TEST(BlockMembers, BlocksPartitionThePartitions) {
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 12; ++n) {
      std::map<Partition, int> seen;
      for (const auto& core : block_cores(n, p))
        for (const auto& mu : block_members(n, p, core)) ++seen[mu];
      EXPECT_EQ(seen.size(), partitions_of(n).size());
      for (const auto& [mu, count] : seen) EXPECT_EQ(count, 1) << to_string(mu);
    }
}

TEST(InitialDimension, Examples) {
  const auto r = verify_initial_dimension(Partition({2, 1}), 2, 2);
  EXPECT_EQ(r.initial, Partition({6, 1}));
  EXPECT_EQ(r.initial_exponent, 1);
  EXPECT_EQ(r.a, 4);
  EXPECT_EQ(r.b, 3);
  EXPECT_TRUE(r.equality);
  EXPECT_TRUE(r.minimality);
  const auto z = verify_initial_dimension(Partition({3, 1}), 0, 3);
  // A lone 3-core: dim S^(3,1) = 3, a = nu_3(4!) = 1, b = 0.
  EXPECT_EQ(z.a, 1);
  EXPECT_EQ(z.b, 0);
  EXPECT_EQ(z.initial_exponent, 1);
  EXPECT_TRUE(z.equality);
}

TEST(InitialDimension, MinimumAttainedAtInitialPartition) {
  for (int p : {2, 3})
    for (int n = 1; n <= 12; ++n)
      for (const auto& core : block_cores(n, p)) {
        const int w = (n - core.n()) / p;
        const auto r = verify_initial_dimension(core, w, p);
        int lowest = r.initial_exponent;
        for (const auto& [mu, e] : r.table) lowest = std::min(lowest, e);
        EXPECT_EQ(lowest, r.initial_exponent);
        EXPECT_TRUE(r.equality && r.minimality) << to_string(core) << " w=" << w;
      }
}

TEST(HeightZero, Examples) {
  for (const auto& b : height_zero_report(6, 3))
    if (b.core.n() == 0) {
      EXPECT_EQ(b.weight, 2);
      EXPECT_TRUE(b.all_heights_zero);
    }
  bool found = false;
  for (const auto& b : height_zero_report(4, 2))
    if (b.core.n() == 0) {
      found = true;
      EXPECT_FALSE(b.all_heights_zero);
      ASSERT_TRUE(b.witness.has_value());
      EXPECT_EQ(character_height(Partition({2, 2}), 2), 1);
      EXPECT_EQ(b.witness_height, character_height(*b.witness, 2));
    }
  EXPECT_TRUE(found);
}

TEST(HeightZero, AllBlocksConsistent) {
  for (int p : {2, 3})
    for (int n = 1; n <= 10; ++n)
      for (const auto& b : height_zero_report(n, p)) {
        EXPECT_TRUE(b.consistent) << "n=" << n << " p=" << p << " core " << to_string(b.core);
        EXPECT_EQ(b.witness.has_value(), b.weight >= p);
        if (b.weight == 0) { EXPECT_TRUE(b.all_heights_zero); }
      }
}

TEST(LocalStructure, TwoOneAtTwo) {
  const auto r = verify_local_structure(Partition({2, 1}), 1, 1, 2);
  EXPECT_EQ(r.lambda, Partition({4, 1}));
  EXPECT_EQ(r.y, (std::vector<int>{3, 4}));
  EXPECT_EQ(r.x, (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(r.quotient_dim, 2u);
  EXPECT_EQ(r.submodule_dim, 2u);
  EXPECT_TRUE(r.isomorphic);
  EXPECT_TRUE(r.normalizer_trivial);
  ASSERT_TRUE(r.sylow_dim_matches.has_value());
  EXPECT_TRUE(*r.sylow_dim_matches);
}

TEST(LocalStructure, OneOneAtThree) {
  const auto r = verify_local_structure(Partition({1, 1}), 1, 1, 3);
  EXPECT_EQ(r.lambda, Partition({4, 1}));
  EXPECT_EQ(r.quotient_dim, 1u);
  EXPECT_TRUE(r.ok());
}

TEST(LocalStructure, RZeroDegenerates) {
  const auto r = verify_local_structure(Partition({2, 1}), 1, 0, 2);
  EXPECT_EQ(r.q_order, 1u);
  EXPECT_EQ(r.quotient_dim, r.specht_dim);
  EXPECT_EQ(r.target, r.lambda);
  EXPECT_TRUE(r.ok());
}

TEST(LocalStructure, SweepOfSmallCases) {
  for (int p : {2, 3})
    for (int n = 1; n <= 8; ++n)
      for (const auto& core : block_cores(n, p)) {
        const int w = (n - core.n()) / p;
        for (int r = 0; r <= w; ++r) {
          const auto rep = verify_local_structure(core, w, r, p);
          EXPECT_TRUE(rep.ok()) << to_string(core) << " w=" << w << " r=" << r << " p=" << p;
        }
      }
}

TEST(TwoRow, CaseAnalysis) {
  const auto a = two_row_report(10, 5);
  EXPECT_EQ(a.case_name, "p|n");
  EXPECT_EQ(a.label.core, Partition({3, 2}));
  EXPECT_EQ(a.label.weight, 1);
  EXPECT_TRUE(a.case_matches);
  const auto b = two_row_report(9, 3);
  EXPECT_EQ(b.label.core, Partition({4, 2}));
  EXPECT_EQ(b.label.weight, 1);
  EXPECT_TRUE(b.case_matches);
  const auto c = two_row_report(8, 5);
  EXPECT_EQ(c.case_name, "p|n-3");
  EXPECT_EQ(c.label.core, Partition({6, 2}));
  EXPECT_EQ(c.label.weight, 0);
  EXPECT_TRUE(c.case_matches);
  EXPECT_THROW(two_row_report(8, 2), invalid_input);
  EXPECT_THROW(two_row_report(3, 3), invalid_input);
}

TEST(TwoRow, SweepAndLowerBound) {
  for (int p : {3, 5, 7})
    for (int n = 4; n <= 12; ++n) {
      const auto r = two_row_report(n, p);
      EXPECT_TRUE(r.dim_matches_formula);
      EXPECT_TRUE(r.case_matches) << "n=" << n << " p=" << p;
      ASSERT_TRUE(r.certificate_order.has_value());
      EXPECT_TRUE(*r.certificate_nonzero);
      EXPECT_LE(*r.certificate_order, r.defect_order);
      EXPECT_TRUE(r.lower_bound_consistent);
    }
}
