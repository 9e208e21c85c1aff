#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "spx/spx.hpp"

using namespace spx;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

std::set<Permutation> as_set(const PermGroup& g) { return {g.elements().begin(), g.elements().end()}; }

}  // namespace

TEST(Permutation, CycleNotationRoundTrip) {
  EXPECT_EQ(to_string(parse_cycles("(1,2,3)(4,5)")), "(1,2,3)(4,5)");
  EXPECT_EQ(to_string(parse_cycles("()", 4)), "()");
  EXPECT_EQ(parse_cycles("()", 4).degree(), 4);
  EXPECT_EQ(to_string(parse_cycles("(3,1,2)")), "(1,2,3)");
  EXPECT_EQ(parse_cycles("(1,2)", 5).degree(), 5);
  EXPECT_THROW(parse_cycles("(1,2", 3), invalid_input);
  EXPECT_THROW(parse_cycles("(1,1)", 3), invalid_input);
  EXPECT_THROW(parse_cycles("(1,7)", 3), invalid_input);
}

TEST(Permutation, ActsOnTheRight) {
  const auto a = parse_cycles("(1,2)", 3);
  const auto b = parse_cycles("(2,3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b.
  EXPECT_EQ((a * b)(1), 3);
  EXPECT_EQ(to_string(a * b), "(1,3,2)");
}

TEST(Permutation, GroupLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto g = random_perm(n, rng), h = random_perm(n, rng), k = random_perm(n, rng);
    EXPECT_EQ((g * h) * k, g * (h * k));
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_EQ(sign(g * h), sign(g) * sign(h));
    EXPECT_TRUE(g.pow(static_cast<long long>(g.order())).is_identity());
    EXPECT_EQ(parse_cycles(to_string(g), n), g);
    const Tableau t = greatest_tableau(partitions_of(n).back());
    EXPECT_EQ(act(act(t, g), h), act(t, g * h));
  }
}

TEST(PermGroup, SymmetricGroupOrders) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    EXPECT_EQ(PermGroup(n, symmetric_group_generators(n, pts)).order(), oracle::factorial(n));
  }
}

TEST(PermGroup, CapRaisesResourceError) {
  std::vector<int> pts{1, 2, 3, 4, 5, 6, 7, 8};
  const PermGroup g(8, symmetric_group_generators(8, pts), 1000);
  EXPECT_THROW(g.order(), resource_error);
}

TEST(PermGroup, MembershipAgreesWithClosure) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5;
    const PermGroup g(n, {random_perm(n, rng), random_perm(n, rng)});
    const auto ref = oracle::closure(n, g.generators());
    EXPECT_EQ(as_set(g), ref);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_perm(n, rng);
      EXPECT_EQ(g.contains(x), ref.count(x) == 1);
    }
  }
}

TEST(HGroup, EightFourOneClosure) {
  const Tableau t = greatest_tableau(Partition({8, 4, 1}));
  const PermGroup h = h_group(t);
  const std::vector<Permutation> expected{parse_cycles("(2,3,4)(10,11,12)", 13), parse_cycles("(2,3)(10,11)", 13),
                                          parse_cycles("(5,6,7,8)", 13), parse_cycles("(5,6)", 13)};
  EXPECT_EQ(as_set(h), oracle::closure(13, expected));
  EXPECT_EQ(h.order(), 144u);
  EXPECT_EQ(h_group_order(t), 144u);
}

TEST(HGroup, OrderFormulaAndStructure) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& la : partitions_of(n)) {
      const Tableau t = greatest_tableau(la);
      const PermGroup h = h_group(t);
      EXPECT_EQ(h.order(), h_group_order(t)) << to_string(la);
      const PermGroup rows = row_stabilizer(t);
      EXPECT_TRUE(h.is_subgroup_of(rows));
      // Each element maps columns onto columns of the same length.
      const PermGroup cols = column_group(t);
      for (const auto& g : h.generators())
        for (const auto& c : cols.generators()) EXPECT_TRUE(cols.contains(c.conjugate_by(g)));
    }
}

TEST(ColumnGroup, OrderIsProductOfFactorials) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& la : partitions_of(n)) {
      std::uint64_t expect = 1;
      for (int j = 0; j < la[0]; ++j) expect *= oracle::factorial(la.column_length(j));
      EXPECT_EQ(column_group(greatest_tableau(la)).order(), expect);
    }
}

TEST(Sylow, OrdersAndSubgroupProperty) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n) {
      std::vector<int> pts(static_cast<std::size_t>(n));
      std::iota(pts.begin(), pts.end(), 1);
      const PermGroup s = sylow_p(n, pts, p);
      EXPECT_EQ(s.order(), ipow(static_cast<std::uint64_t>(p), nu_p_factorial(static_cast<std::uint64_t>(n), p)));
      EXPECT_TRUE(s.is_p_group(p));
    }
  for (int p : {2, 3})
    for (int n = 1; n <= 8; ++n)
      for (const auto& la : partitions_of(n)) {
        const Tableau t = greatest_tableau(la);
        const PermGroup s = sylow_of_h_group(t, p);
        const std::uint64_t h = h_group_order(t);
        EXPECT_EQ(s.order(), ipow(static_cast<std::uint64_t>(p), nu_p(h, p))) << to_string(la);
        EXPECT_TRUE(s.is_subgroup_of(h_group(t)));
      }
}

TEST(Normalizer, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  std::vector<PermGroup> cases;
  for (int p : {2, 3}) {
    std::vector<int> pts{1, 2, 3, 4, 5, 6};
    cases.push_back(sylow_p(7, pts, p));
    cases.push_back(PermGroup(7, {parse_cycles("(1,2)(3,4)", 7)}));
    cases.push_back(PermGroup(7, {parse_cycles("(1,2,3)(4,5,6)", 7)}));
  }
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = random_perm(6, rng);
    std::vector<int> img = g.images();
    img.push_back(7);
    cases.push_back(PermGroup(7, {Permutation::from_images(img)}));
  }
  for (const auto& q : cases) {
    const auto ref = oracle::brute_normalizer_on_support(q);
    EXPECT_EQ(as_set(support_normalizer(q)), ref);
    const PermGroup full = normalizer(7, q);
    for (const auto& x : full.generators())
      for (const auto& y : q.generators()) EXPECT_TRUE(q.contains(y.conjugate_by(x)));
    std::uint64_t fixed = 1;
    for (int k = 2; k <= 7 - static_cast<int>(q.support().size()); ++k) fixed *= static_cast<std::uint64_t>(k);
    EXPECT_EQ(full.order(), fixed * ref.size());
  }
}

TEST(Transversal, PartitionsQIntoCosets) {
  std::mt19937_64 rng(4);
  std::vector<int> pts{1, 2, 3, 4, 5, 6, 7, 8};
  const PermGroup q = sylow_p(8, pts, 2);
  for (const auto& r : maximal_subgroups(q)) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto reps = random_right_transversal(r, q, rng);
      EXPECT_EQ(reps.size() * r.order(), q.order());
      std::set<Permutation> all;
      for (const auto& g : reps)
        for (const auto& x : r.elements()) all.insert(x * g);
      EXPECT_EQ(all.size(), q.order());
    }
  }
}

TEST(MaximalSubgroups, MatchIndexPSubgroupsOfOracle) {
  std::vector<PermGroup> cases;
  for (int n : {4, 5, 6}) {
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    cases.push_back(sylow_p(n, pts, 2));
  }
  std::vector<int> six{1, 2, 3, 4, 5, 6};
  cases.push_back(sylow_p(6, six, 3));
  cases.push_back(PermGroup(6, {parse_cycles("(1,2)", 6), parse_cycles("(3,4)", 6), parse_cycles("(5,6)", 6)}));
  cases.push_back(PermGroup(8, {parse_cycles("(1,2,3,4,5,6,7,8)", 8)}));
  cases.push_back(sylow_of_h_group(greatest_tableau(Partition({4, 4})), 2));
  for (const auto& q : cases) {
    ASSERT_LE(q.order(), 64u);
    const int p = static_cast<int>(spx::detail::prime_of_p_group(q.order()));
    std::set<oracle::ElementSet> expect;
    for (const auto& s : oracle::all_subgroups(q))
      if (s.size() * static_cast<std::size_t>(p) == q.order()) expect.insert(s);
    std::set<oracle::ElementSet> got;
    for (const auto& r : maximal_subgroups(q)) got.insert(as_set(r));
    EXPECT_EQ(got, expect) << "order " << q.order();
    // Frattini subgroup = intersection of the maximal subgroups.
    oracle::ElementSet inter = as_set(q);
    for (const auto& s : expect) {
      oracle::ElementSet next;
      std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(), std::inserter(next, next.begin()));
      inter = std::move(next);
    }
    EXPECT_EQ(as_set(frattini_subgroup(q)), inter);
  }
}

TEST(CyclicPSubgroups, AreCyclicOfPrimePowerOrder) {
  const PermGroup h = h_group(greatest_tableau(Partition({3, 3, 1})));
  for (int p : {2, 3}) {
    const auto cs = cyclic_p_subgroups(h, p);
    EXPECT_EQ(cs.front().order(), 1u);
    std::set<oracle::ElementSet> distinct;
    for (const auto& c : cs) {
      EXPECT_LE(c.generators().size(), 1u);
      EXPECT_TRUE(c.order() == 1 || c.is_p_group(p));
      EXPECT_TRUE(c.is_subgroup_of(h));
      distinct.insert(as_set(c));
    }
    EXPECT_EQ(distinct.size(), cs.size());
    std::size_t cyclic = 0;
    for (const auto& s : oracle::all_subgroups(h)) {
      bool is_cyclic = false;
      for (const auto& x : s)
        if (x.order() == s.size()) is_cyclic = true;
      std::size_t o = s.size();
      while (o % static_cast<std::size_t>(p) == 0) o /= static_cast<std::size_t>(p);
      if (is_cyclic && o == 1) ++cyclic;
    }
    EXPECT_EQ(cs.size(), cyclic);
  }
}
