#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spx/spx.hpp"

using namespace spx;

namespace {

PermGroup group_of(int n, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, n));
  return PermGroup(n, gens);
}

}  // namespace

TEST(FixedSubspace, Examples) {
  const auto m = young_module(Partition({1, 1}), 2, {parse_cycles("(1,2)", 2)});
  EXPECT_EQ(fixed_subspace(m, PermGroup::trivial(2)).dim(), 2u);
  const Subspace f = fixed_subspace(m, group_of(2, {"(1,2)"}));
  ASSERT_EQ(f.dim(), 1u);
  EXPECT_TRUE(f.contains(FpVector(2, {1, 1})));
  EXPECT_THROW(fixed_subspace(m, PermGroup::trivial(3)), invalid_input);
}

TEST(FixedSubspace, GreatestPolytabloidIsFixedByH) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& la : partitions_of(n))
      for (std::uint32_t p : {2u, 3u, 5u}) {
        if (hook_dimension(la) > 200) continue;  // larger cases run in the acceptance suite
        const Tableau t = greatest_tableau(la);
        const PermGroup h = h_group(t);
        const auto s = specht_module(la, p, h.generators());
        EXPECT_TRUE(fixed_subspace(s.rep, h).contains(s.greatest_polytabloid())) << to_string(la) << " p=" << p;
      }
}

TEST(RelativeTrace, Examples) {
  const auto m = young_module(Partition({1, 1}), 2, {parse_cycles("(1,2)", 2)});
  const PermGroup q = group_of(2, {"(1,2)"});
  EXPECT_EQ(relative_trace_image(m, q, q), fixed_subspace(m, q));
  const Subspace t = relative_trace_image(m, PermGroup::trivial(2), q);
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_TRUE(t.contains(FpVector(2, {1, 1})));
  EXPECT_THROW(relative_trace_image(m, q, PermGroup::trivial(2)), invalid_input);
}

TEST(RelativeTrace, IndependentOfTransversal) {
  std::mt19937_64 rng(123);
  const Partition la({3, 2, 1});
  std::vector<int> pts{1, 2, 3, 4, 5, 6};
  for (std::uint32_t p : {2u, 3u}) {
    const PermGroup q = sylow_p(6, pts, static_cast<int>(p));
    const auto s = specht_module(la, p, q.generators());
    for (const auto& r : oracle::all_subgroups(q)) {
      const PermGroup rg = oracle::as_group(6, r);
      const Subspace ref = relative_trace_image(s.rep, rg, q);
      for (int k = 0; k < 3; ++k) EXPECT_EQ(relative_trace_image(s.rep, rg, q, random_right_transversal(rg, q, rng)), ref);
    }
  }
}

TEST(RelativeTrace, Transitivity) {
  const Partition la({4, 2});
  std::vector<int> pts{1, 2, 3, 4};
  const PermGroup q(6, sylow_generators(6, pts, 2));
  const auto s = specht_module(la, 2, q.generators());
  for (const auto& r : maximal_subgroups(q))
    for (const auto& r2 : maximal_subgroups(r)) {
      // Tr_{R'}^Q = Tr_R^Q o Tr_{R'}^R.
      const Subspace inner = relative_trace_image(s.rep, r2, r);
      const FpMatrix outer = element_sum(s.rep, right_transversal(r, q));
      const Subspace composed = inner.dim() ? Subspace::from_matrix(inner.basis() * outer) : Subspace(2, s.rep.dim());
      EXPECT_EQ(composed, relative_trace_image(s.rep, r2, q));
    }
}

TEST(BrauerQuotient, Examples) {
  const auto s41 = specht_module(Partition({4, 1}), 2, {parse_cycles("(3,4)", 5)});
  EXPECT_EQ(brauer_quotient(s41.rep, PermGroup::trivial(5)).dim(), s41.rep.dim());
  EXPECT_EQ(brauer_quotient(s41.rep, group_of(5, {"(3,4)"})).dim(), 2u);
  const auto s41_3 = specht_module(Partition({4, 1}), 3, {parse_cycles("(2,3,4)", 5)});
  EXPECT_EQ(brauer_quotient(s41_3.rep, group_of(5, {"(2,3,4)"})).dim(), 1u);
  EXPECT_THROW(brauer_quotient(s41.rep, group_of(5, {"(1,2,3)"})), invalid_input);
}

TEST(BrauerQuotient, MatchesEnumerationOracle) {
  struct Case {
    Partition la;
    std::uint32_t p;
    std::vector<const char*> q;
  };
  const std::vector<Case> cases{
      {Partition({4, 1}), 2, {"(3,4)"}},
      {Partition({4, 1}), 3, {"(2,3,4)"}},
      {Partition({3, 1}), 2, {"(1,2)", "(3,4)"}},
      {Partition({3, 1}), 2, {"(1,2,3,4)", "(1,3)"}},
      {Partition({2, 2}), 2, {"(1,2)(3,4)"}},
      {Partition({3, 2}), 2, {"(1,2)", "(4,5)"}},
      {Partition({3, 1, 1}), 3, {"(1,2,3)"}},
      {Partition({5}), 2, {"(1,2)(3,4)", "(1,3)(2,4)"}},
  };
  for (const auto& c : cases) {
    const int n = c.la.n();
    std::vector<Permutation> gens;
    for (const char* g : c.q) gens.push_back(parse_cycles(g, n));
    const PermGroup q(n, gens);
    const auto s = specht_module(c.la, c.p, gens);
    const auto bq = brauer_quotient(s.rep, q);
    const auto ref = oracle::brauer_by_enumeration(s.rep, q);
    EXPECT_EQ(bq.fixed().dim(), ref.fixed_dim) << to_string(c.la);
    EXPECT_EQ(bq.radical().dim(), ref.radical_dim) << to_string(c.la);
    EXPECT_EQ(bq.dim(), ref.quotient_dim());
  }
}

TEST(BrauerQuotient, MaximalSubgroupsSuffice) {
  std::vector<std::pair<Partition, std::uint32_t>> cases{{Partition({3, 2, 1}), 2}, {Partition({4, 2}), 2},
                                                          {Partition({3, 3}), 3},    {Partition({2, 2, 2}), 3},
                                                          {Partition({4, 1, 1}), 2}, {Partition({3, 2}), 2}};
  for (const auto& [la, p] : cases) {
    const int n = la.n();
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    const PermGroup q = sylow_p(n, pts, static_cast<int>(p));
    ASSERT_LE(q.order(), 64u);
    const auto s = specht_module(la, p, q.generators());
    std::vector<PermGroup> proper;
    for (const auto& r : oracle::all_subgroups(q))
      if (r.size() < q.order()) proper.push_back(oracle::as_group(n, r));
    EXPECT_EQ(trace_radical(s.rep, q, maximal_subgroups(q)), trace_radical(s.rep, q, proper)) << to_string(la);
  }
}

TEST(BrauerImage, Basics) {
  const auto s = specht_module(Partition({4, 1}), 2, {parse_cycles("(3,4)", 5)});
  const PermGroup q = group_of(5, {"(3,4)"});
  const auto bq = brauer_quotient(s.rep, q);
  EXPECT_FALSE(brauer_image_nonzero(bq, FpVector(2, s.rep.dim())));
  EXPECT_TRUE(brauer_image_nonzero(bq, s.greatest_polytabloid()));
  for (const auto& r : maximal_subgroups(q)) {
    const Subspace t = relative_trace_image(s.rep, r, q);
    for (std::size_t i = 0; i < t.dim(); ++i) EXPECT_FALSE(brauer_image_nonzero(bq, t.vector(i)));
  }
  // A vector moved by Q is rejected.
  bool rejected = false;
  for (std::size_t i = 0; i < s.rep.dim() && !rejected; ++i) {
    const auto v = FpVector::unit(2, s.rep.dim(), i);
    if (!bq.fixed().contains(v)) {
      EXPECT_THROW(brauer_image_nonzero(bq, v), invalid_input);
      rejected = true;
    }
  }
  EXPECT_TRUE(rejected);
}

TEST(BrauerImage, GreatestPolytabloidSurvivesSmallCases) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& la : partitions_of(n))
      for (int p : {2, 3}) {
        const Tableau t = greatest_tableau(la);
        const PermGroup h = h_group(t);
        for (const auto& q : cyclic_p_subgroups(h, p)) {
          const auto s = specht_module(la, static_cast<std::uint32_t>(p), q.generators());
          EXPECT_TRUE(brauer_image_nonzero(s.rep, s.greatest_polytabloid(), q)) << to_string(la) << " p=" << p;
        }
      }
}

TEST(VertexCertificate, Trivial) {
  const auto c = vertex_certificate(Partition({6}), 2);
  EXPECT_EQ(c.sylow_order, 16u);
  EXPECT_EQ(c.specht_dim, 1u);
  EXPECT_EQ(c.quotient_dim, 1u);
  EXPECT_TRUE(c.e_t_nonzero);
}

TEST(VertexCertificate, InitialPartitionContainsSylowOfSwp) {
  // gamma = (1), w = 2, p = 2: lambda = (5), and gamma = (2,1), w = 1, p = 3: lambda = (5,1).
  const auto a = vertex_certificate(Partition({5}), 2);
  EXPECT_EQ(a.sylow_order, 8u);
  EXPECT_TRUE(a.e_t_nonzero);
  const auto b = vertex_certificate(Partition({5, 1}), 3);
  EXPECT_EQ(b.sylow_order, 3u);
  EXPECT_TRUE(b.e_t_nonzero);
}

TEST(QuotientModule, QActsTriviallyAndExampleIsomorphism) {
  const PermGroup q = group_of(5, {"(3,4)"});
  const std::vector<Permutation> sx{parse_cycles("(1,2)", 5), parse_cycles("(1,2,5)", 5)};
  std::vector<Permutation> extra = q.generators();
  extra.insert(extra.end(), sx.begin(), sx.end());
  const auto s = specht_module(Partition({4, 1}), 2, extra);
  const auto bq = brauer_quotient(s.rep, q);
  const auto onq = quotient_module(bq, q.generators());
  for (const auto& a : onq.matrices()) EXPECT_EQ(a, FpMatrix::identity(2, bq.dim()));

  const auto onx = quotient_module(bq, sx);
  ASSERT_EQ(onx.dim(), 2u);
  const ModuleRep relabelled = onx.relabelled({parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)}, 3);
  const auto target = specht_module(Partition({2, 1}), 2);
  EXPECT_TRUE(is_isomorphic(relabelled, target.rep));

  EXPECT_THROW(quotient_module(bq, {parse_cycles("(1,3)", 5)}), invalid_input);
}

TEST(QuotientModule, Functoriality) {
  const PermGroup q = group_of(6, {"(5,6)"});
  const std::vector<Permutation> gens{parse_cycles("(1,2)", 6), parse_cycles("(1,2,3,4)", 6), parse_cycles("(5,6)", 6)};
  const auto s = specht_module(Partition({4, 2}), 2, gens);
  const auto bq = brauer_quotient(s.rep, q);
  std::vector<Permutation> words;
  for (const auto& a : gens)
    for (const auto& b : gens) words.push_back(a * b);
  auto all = gens;
  all.insert(all.end(), words.begin(), words.end());
  const auto m = quotient_module(bq, all);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      EXPECT_EQ(m.matrix_of(gens[i] * gens[j]), m.matrix_of(gens[i]) * m.matrix_of(gens[j]));
}
