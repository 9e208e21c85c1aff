#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spx/arith.hpp"
#include "spx/brauer.hpp"
#include "spx/errors.hpp"
#include "spx/hooks.hpp"
#include "spx/partition.hpp"
#include "spx/perm_group.hpp"
#include "spx/specht.hpp"

namespace spx {

/// All partitions of n with p-core `core`, in partitions_of order.
inline std::vector<Partition> block_members(int n, int p, const Partition& core) {
  require_prime(p);
  require(n >= 0, "n must be nonnegative");
  require(is_p_core(core, p), to_string(core) + " is not a " + std::to_string(p) + "-core");
  require(core.n() <= n && (n - core.n()) % p == 0,
          "core " + to_string(core) + " is not admissible for n = " + std::to_string(n));
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(n))
    if (p_core_and_weight(mu, p).core == core) out.push_back(mu);
  return out;
}

/// The p-cores of the blocks of S_n, in order of first appearance.
inline std::vector<Partition> block_cores(int n, int p) {
  require_prime(p);
  std::vector<Partition> cores;
  for (const auto& mu : partitions_of(n)) {
    auto c = p_core_and_weight(mu, p).core;
    if (std::find(cores.begin(), cores.end(), c) == cores.end()) cores.push_back(std::move(c));
  }
  return cores;
}

struct BlockReport {
  BlockLabel label;
  int n = 0;
  int a = 0;  // nu_p(n!)
  int b = 0;  // nu_p((wp)!)
  std::vector<Partition> partitions;
  std::vector<int> heights;  // parallel to partitions
  bool all_heights_zero = true;
  std::optional<Partition> witness;  // first member of nonzero height
  int witness_height = 0;
};

inline BlockReport block_report(int n, int p, const Partition& core) {
  BlockReport r;
  r.partitions = block_members(n, p, core);
  const int w = (n - core.n()) / p;
  r.n = n;
  r.a = nu_p_factorial(static_cast<std::uint64_t>(n), p);
  r.b = nu_p_factorial(static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(p), p);
  r.label = BlockLabel{p, core, w, r.b};
  for (const auto& mu : r.partitions) {
    const int h = character_height(mu, p);
    r.heights.push_back(h);
    if (h != 0 && !r.witness) {
      r.all_heights_zero = false;
      r.witness = mu;
      r.witness_height = h;
    }
  }
  return r;
}

struct InitialDimensionReport {
  Partition core;
  int w = 0;
  int p = 2;
  Partition initial;
  int a = 0;
  int b = 0;
  int initial_exponent = 0;                       // nu_p(dim S^{core + wp})
  std::vector<std::pair<Partition, int>> table;  // nu_p(dim S^mu) over the block
  bool equality = false;                          // initial_exponent == a - b
  bool minimality = false;                        // every entry >= a - b
};

/// nu_p of dim S^{gamma+wp} against a - b, and its minimality over the block.
/// With `with_table` false only the initial partition is examined.
inline InitialDimensionReport verify_initial_dimension(const Partition& core, int w, int p, bool with_table = true) {
  InitialDimensionReport r;
  r.core = core;
  r.w = w;
  r.p = p;
  r.initial = initial_partition(core, w, p);
  const int n = r.initial.n();
  r.a = nu_p_factorial(static_cast<std::uint64_t>(n), p);
  r.b = nu_p_factorial(static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(p), p);
  r.initial_exponent = nu_p(hook_dimension(r.initial), p);
  r.equality = r.initial_exponent == r.a - r.b;
  r.minimality = true;
  if (with_table) {
    for (const auto& mu : block_members(n, p, core)) {
      const int e = nu_p(hook_dimension(mu), p);
      r.table.emplace_back(mu, e);
      if (e < r.a - r.b) r.minimality = false;
    }
  }
  return r;
}

struct BlockHeightSummary {
  Partition core;
  int weight = 0;
  bool all_heights_zero = true;
  std::optional<Partition> witness;
  int witness_height = 0;
  bool consistent = false;  // all_heights_zero == (weight < p)
};

inline std::vector<BlockHeightSummary> height_zero_report(int n, int p) {
  std::vector<BlockHeightSummary> out;
  for (const auto& core : block_cores(n, p)) {
    const auto r = block_report(n, p, core);
    BlockHeightSummary s;
    s.core = core;
    s.weight = r.label.weight;
    s.all_heights_zero = r.all_heights_zero;
    s.witness = r.witness;
    s.witness_height = r.witness_height;
    s.consistent = s.all_heights_zero == (s.weight < p);
    out.push_back(std::move(s));
  }
  return out;
}

struct LocalStructureReport {
  Partition core;
  int w = 0;
  int r = 0;
  int p = 2;
  Partition lambda;  // core + wp
  Partition target;  // core + (w - r)p
  std::vector<int> y;
  std::vector<int> x;
  std::vector<Permutation> q_generators;
  std::uint64_t q_order = 1;
  std::size_t specht_dim = 0;
  std::size_t quotient_dim = 0;
  std::size_t submodule_dim = 0;
  std::size_t target_dim = 0;
  bool isomorphic = false;          // W ~ S^{target} after relabelling X
  bool normalizer_trivial = false;  // N_{S_Y}(Q) acts trivially on W
  std::optional<bool> sylow_dim_matches;  // r == w: dim M(Q) == dim S^core
  bool ok() const { return isomorphic && normalizer_trivial && sylow_dim_matches.value_or(true); }
};

/// Builds Q = Sylow_p(S_Y) on the last rp points Y of the first row of
/// t (the greatest tableau of core + wp), computes S^lambda(Q), and checks
/// the S_X-submodule W generated by the image of e_t.
inline LocalStructureReport verify_local_structure(const Partition& core, int w, int r, int p,
                                                   std::size_t max_dim = kDefaultMaxDim,
                                                   std::size_t max_group_order = kDefaultGroupCap) {
  require(r >= 0 && r <= w, "r must satisfy 0 <= r <= w");
  LocalStructureReport rep;
  rep.core = core;
  rep.w = w;
  rep.r = r;
  rep.p = p;
  rep.lambda = initial_partition(core, w, p);
  rep.target = initial_partition(core, w - r, p);
  const int n = rep.lambda.n();
  const int first = rep.lambda.length() ? rep.lambda[0] : 0;
  for (int i = first - r * p + 1; i <= first; ++i) rep.y.push_back(i);
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(rep.y.begin(), rep.y.end(), i)) rep.x.push_back(i);

  const PermGroup q(n, sylow_generators(n, rep.y, p), max_group_order);
  rep.q_generators = q.generators();
  rep.q_order = q.order();
  const auto sx_gens = symmetric_group_generators(n, rep.x);
  const auto ny_gens = r > 0 ? support_normalizer(q, max_group_order).generators() : std::vector<Permutation>{};

  std::vector<Permutation> extra = q.generators();
  extra.insert(extra.end(), sx_gens.begin(), sx_gens.end());
  extra.insert(extra.end(), ny_gens.begin(), ny_gens.end());
  const SpechtModule s = specht_module(rep.lambda, static_cast<std::uint32_t>(p), extra, max_dim);
  rep.specht_dim = s.rep.dim();
  const BrauerQuotient bq = brauer_quotient(s.rep, q);
  rep.quotient_dim = bq.dim();

  const ModuleRep on_x = quotient_module(bq, sx_gens);
  const ModuleRep on_y = quotient_module(bq, ny_gens);
  const FpVector seed = bq.project(s.greatest_polytabloid());
  const Subspace wsub = spin({seed}, on_x.matrices(), on_x.p(), on_x.dim());
  rep.submodule_dim = wsub.dim();

  // Relabel X -> 1..m; symmetric_group_generators on the sorted X maps onto
  // the default generators of S_m.
  const int m = static_cast<int>(rep.x.size());
  std::vector<int> rank_of(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < m; ++i) rank_of[static_cast<std::size_t>(rep.x[static_cast<std::size_t>(i)])] = i + 1;
  std::vector<Permutation> relabelled;
  for (const auto& g : on_x.generators()) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = rank_of[static_cast<std::size_t>(g(rep.x[static_cast<std::size_t>(i)]))];
    relabelled.push_back(Permutation::from_images(std::move(img)));
  }
  const ModuleRep w_mod = submodule(on_x, wsub).relabelled(relabelled, m);
  rep.target_dim = static_cast<std::size_t>(hook_dimension(rep.target));
  if (m <= 1) {
    rep.isomorphic = w_mod.dim() == rep.target_dim;
  } else {
    const SpechtModule t = specht_module(rep.target, static_cast<std::uint32_t>(p), {}, max_dim);
    std::vector<FpMatrix> mats;
    for (const auto& g : relabelled) mats.push_back(t.rep.matrix_of(g));
    const ModuleRep target(t.rep.p(), m, t.rep.labels(), relabelled, std::move(mats));
    rep.isomorphic = is_isomorphic(w_mod, target);
  }

  rep.normalizer_trivial = true;
  for (const auto& a : on_y.matrices())
    for (std::size_t i = 0; i < wsub.dim(); ++i) {
      const FpVector v = wsub.vector(i);
      if (!(v * a - v).is_zero()) rep.normalizer_trivial = false;
    }

  if (r == w) rep.sylow_dim_matches = rep.quotient_dim == static_cast<std::size_t>(hook_dimension(core));
  return rep;
}

struct TwoRowReport {
  int n = 0;
  int p = 3;
  Partition lambda;
  std::uint64_t dim = 0;
  bool dim_matches_formula = false;  // hook dimension == n(n-3)/2
  int dim_exponent = 0;              // nu_p(dim)
  BlockLabel label;
  std::string case_name;  // "coprime", "p|n", "p=3", "p|n-3"
  std::optional<Partition> expected_core;  // unset in the coprime case
  int expected_weight = 0;
  bool case_matches = false;
  int a = 0;
  int b = 0;
  std::uint64_t defect_order = 1;  // p^b
  std::optional<std::uint64_t> certificate_order;
  std::optional<bool> certificate_nonzero;
  bool lower_bound_consistent = false;  // certificate order <= p^b
};

/// The (n-2,2) case analysis for odd p.
inline TwoRowReport two_row_report(int n, int p, std::size_t max_dim = kDefaultMaxDim,
                                   std::size_t max_group_order = kDefaultGroupCap) {
  require_prime(p);
  require(p != 2, "two-row analysis covers odd primes only");
  require(n >= 4, "two-row analysis needs n >= 4");
  TwoRowReport r;
  r.n = n;
  r.p = p;
  r.lambda = Partition({n - 2, 2});
  r.dim = hook_dimension(r.lambda);
  r.dim_matches_formula = r.dim == static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 3) / 2;
  r.dim_exponent = nu_p(r.dim, p);
  r.label = p_core_and_weight(r.lambda, p);
  if (n % p == 0 && p > 3) {
    r.case_name = "p|n";
    r.expected_core = Partition({p - 2, 2});
    r.expected_weight = (n - p) / p;
  } else if (n % p == 0 && p == 3) {
    r.case_name = "p=3";
    r.expected_core = Partition({4, 2});
    r.expected_weight = (n - 6) / 3;
  } else if ((n - 3) % p == 0) {
    r.case_name = "p|n-3";
    r.expected_core = Partition({p + 1, 2});
    r.expected_weight = (n - 3) / p - 1;
  } else {
    // Dimension prime to p: the block's defect group is a Sylow p-subgroup
    // of S_n, so the core has n mod p boxes.
    r.case_name = "coprime";
    r.expected_weight = n / p;
  }
  if (r.expected_core)
    r.case_matches = r.label.core == *r.expected_core && r.label.weight == r.expected_weight;
  else
    r.case_matches = r.label.core.n() == n % p && r.label.weight == r.expected_weight && r.dim_exponent == 0;
  r.a = nu_p_factorial(static_cast<std::uint64_t>(n), p);
  r.b = r.label.defect_exponent;
  r.defect_order = ipow(static_cast<std::uint64_t>(p), r.b);
  try {
    const auto c = vertex_certificate(r.lambda, static_cast<std::uint32_t>(p), max_dim, max_group_order);
    r.certificate_order = c.sylow_order;
    r.certificate_nonzero = c.e_t_nonzero;
    r.lower_bound_consistent = c.e_t_nonzero && c.sylow_order <= r.defect_order;
  } catch (const resource_error&) {
    r.lower_bound_consistent = false;
  }
  return r;
}

}  // namespace spx
