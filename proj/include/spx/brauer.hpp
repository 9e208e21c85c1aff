#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spx/errors.hpp"
#include "spx/fp_linalg.hpp"
#include "spx/module_rep.hpp"
#include "spx/perm_group.hpp"
#include "spx/specht.hpp"
#include "spx/tableau.hpp"

namespace spx {

/// M^Q: vectors v with v A(g) = v for every generator g of Q.
inline Subspace fixed_subspace(const ModuleRep& m, const PermGroup& q) {
  require(q.degree() == m.degree(), "fixed_subspace: degree mismatch");
  const std::size_t d = m.dim();
  if (q.generators().empty()) return Subspace::full(m.p(), d);
  // Stack (A(g) - I)^T so that the nullspace is the common fixed space.
  FpMatrix stacked(m.p(), d * q.generators().size(), d);
  const Fp f(m.p());
  std::size_t block = 0;
  for (const auto& g : q.generators()) {
    const FpMatrix a = m.matrix_of(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(block + j, i) = f.sub(a(i, j), i == j ? 1u : 0u);
    block += d;
  }
  return Subspace::from_matrix(nullspace(stacked));
}

/// Sum of A(g) over the given elements.
inline FpMatrix element_sum(const ModuleRep& m, const std::vector<Permutation>& elements) {
  FpMatrix s(m.p(), m.dim(), m.dim());
  for (const auto& g : elements) s = s + m.matrix_of(g);
  return s;
}

/// Tr_R^Q(M^R): the image of M^R under the sum over a right transversal of R in Q.
inline Subspace relative_trace_image(const ModuleRep& m, const PermGroup& r, const PermGroup& q,
                                     std::optional<std::vector<Permutation>> transversal = std::nullopt) {
  require(r.degree() == m.degree() && q.degree() == m.degree(), "relative_trace_image: degree mismatch");
  require(r.is_subgroup_of(q), "relative_trace_image: R is not a subgroup of Q");
  const auto reps = transversal ? *transversal : right_transversal(r, q);
  require(reps.size() * r.order() == q.order(), "relative_trace_image: wrong transversal size");
  const Subspace fixed = fixed_subspace(m, r);
  if (fixed.dim() == 0) return fixed;
  const FpMatrix image = fixed.basis() * element_sum(m, reps);
  return Subspace::from_matrix(image);
}

/// M(Q) = M^Q / sum of Tr_R^Q(M^R) over the maximal subgroups R of Q.
class BrauerQuotient {
 public:
  BrauerQuotient(ModuleRep source, PermGroup q, Subspace fixed, Subspace radical)
      : source_(std::move(source)), q_(std::move(q)), fixed_(std::move(fixed)), radical_(std::move(radical)),
        quotient_(fixed_, radical_) {}

  const ModuleRep& source() const { return source_; }
  const PermGroup& q() const { return q_; }
  const Subspace& fixed() const { return fixed_; }
  const Subspace& radical() const { return radical_; }
  const QuotientSpace& quotient() const { return quotient_; }
  std::size_t dim() const { return quotient_.dim(); }

  /// Quotient coordinates of a vector of M^Q.
  FpVector project(const FpVector& v) const {
    require(fixed_.contains(v), "vector is not fixed by Q");
    return quotient_.project(v);
  }

 private:
  ModuleRep source_;
  PermGroup q_;
  Subspace fixed_;
  Subspace radical_;
  QuotientSpace quotient_;
};

/// Sum of the trace images from the given subgroups of Q.
inline Subspace trace_radical(const ModuleRep& m, const PermGroup& q, const std::vector<PermGroup>& subgroups) {
  Subspace radical(m.p(), m.dim());
  for (const auto& r : subgroups) radical = subspace_sum(radical, relative_trace_image(m, r, q));
  return radical;
}

inline void require_p_group(const PermGroup& q, std::uint32_t p) {
  std::uint64_t o = q.order();
  while (o % p == 0) o /= p;
  require(o == 1, "Q (order " + std::to_string(q.order()) + ") is not a " + std::to_string(p) + "-group");
}

inline BrauerQuotient brauer_quotient(const ModuleRep& m, const PermGroup& q) {
  require(q.degree() == m.degree(), "brauer_quotient: degree mismatch");
  require_p_group(q, m.p());
  Subspace fixed = fixed_subspace(m, q);
  Subspace radical = trace_radical(m, q, maximal_subgroups(q));
  return BrauerQuotient(m, q, std::move(fixed), std::move(radical));
}

/// True iff v (which must lie in M^Q) survives the Brauer homomorphism.
inline bool brauer_image_nonzero(const BrauerQuotient& bq, const FpVector& v) {
  require(bq.fixed().contains(v), "brauer_image_nonzero: vector is not fixed by Q");
  return !bq.radical().contains(v);
}

inline bool brauer_image_nonzero(const ModuleRep& m, const FpVector& v, const PermGroup& q) {
  return brauer_image_nonzero(brauer_quotient(m, q), v);
}

struct VertexCertificate {
  Partition lambda;
  std::uint32_t p = 2;
  std::vector<Permutation> h_generators;
  std::uint64_t h_order = 0;
  std::vector<Permutation> sylow_generators;
  std::uint64_t sylow_order = 0;
  std::size_t specht_dim = 0;
  std::size_t quotient_dim = 0;
  bool e_t_nonzero = false;
};

/// Builds the greatest tableau t, a Sylow p-subgroup P of H(t) and S^lambda
/// over F_p, and checks that e_t has nonzero image in S^lambda(P).
inline VertexCertificate vertex_certificate(const Partition& shape, std::uint32_t p,
                                            std::size_t max_dim = kDefaultMaxDim,
                                            std::size_t max_group_order = kDefaultGroupCap) {
  require_prime(p);
  const Tableau t = greatest_tableau(shape);
  const PermGroup h = h_group(t);
  const PermGroup sylow(shape.n(), sylow_of_h_group(t, static_cast<int>(p)).generators(), max_group_order);
  const SpechtModule s = specht_module(shape, p, sylow.generators(), max_dim);
  const BrauerQuotient bq = brauer_quotient(s.rep, sylow);
  VertexCertificate c;
  c.lambda = shape;
  c.p = p;
  c.h_generators = h.generators();
  c.h_order = h_group_order(t);
  c.sylow_generators = sylow.generators();
  c.sylow_order = sylow.order();
  c.specht_dim = s.rep.dim();
  c.quotient_dim = bq.dim();
  c.e_t_nonzero = brauer_image_nonzero(bq, s.greatest_polytabloid());
  return c;
}

/// The action of normalizer elements on M(Q), in quotient coordinates.
inline ModuleRep quotient_module(const BrauerQuotient& bq, const std::vector<Permutation>& acting_gens) {
  const auto& q = bq.q();
  std::vector<Permutation> gens;
  std::vector<FpMatrix> mats;
  for (const auto& g : acting_gens) {
    require(g.degree() == q.degree(), "quotient_module: degree mismatch");
    for (const auto& x : q.generators())
      require(q.contains(x.conjugate_by(g)), "quotient_module: " + to_string(g) + " does not normalize Q");
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    const FpMatrix a = bq.source().matrix_of(g);
    FpMatrix m(bq.source().p(), bq.dim(), bq.dim());
    for (std::size_t i = 0; i < bq.dim(); ++i) {
      const FpVector img = bq.quotient().project(bq.quotient().lift(FpVector::unit(m.p(), bq.dim(), i)) * a);
      for (std::size_t j = 0; j < bq.dim(); ++j) m(i, j) = img[j];
    }
    gens.push_back(g);
    mats.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < bq.dim(); ++i) labels.push_back("q" + std::to_string(i + 1));
  return ModuleRep(bq.source().p(), bq.source().degree(), std::move(labels), std::move(gens), std::move(mats));
}

}  // namespace spx
