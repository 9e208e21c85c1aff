#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spx/errors.hpp"
#include "spx/fp_linalg.hpp"
#include "spx/hooks.hpp"
#include "spx/module_rep.hpp"
#include "spx/partition.hpp"
#include "spx/perm_group.hpp"
#include "spx/permutation.hpp"
#include "spx/tableau.hpp"

namespace spx {

inline constexpr std::size_t kDefaultMaxDim = 5000;

// ---------------------------------------------------------------------------
// Tabloids
// ---------------------------------------------------------------------------

/// A tabloid packed as its row function: 4 bits per entry (n <= 16).
using TabloidKey = std::uint64_t;

inline constexpr int kMaxTabloidDegree = 16;

inline TabloidKey tabloid_key(const Tableau& t) {
  require(t.n() <= kMaxTabloidDegree, "tabloids are limited to n <= 16");
  TabloidKey k = 0;
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int x : t.row(r)) k |= static_cast<TabloidKey>(r) << (4 * (x - 1));
  return k;
}

/// Canonical representative: the row-standard tableau of the tabloid.
inline Tableau tabloid_from_key(TabloidKey k, const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  for (int x = 1; x <= shape.n(); ++x) rows[static_cast<std::size_t>((k >> (4 * (x - 1))) & 0xf)].push_back(x);
  return Tableau(std::move(rows));
}

/// The image of a tabloid under g: entry x moves to x.g.
inline TabloidKey act_on_key(TabloidKey k, const Permutation& g) {
  TabloidKey out = 0;
  for (int x = 1; x <= g.degree(); ++x) out |= ((k >> (4 * (x - 1))) & 0xf) << (4 * (g(x) - 1));
  return out;
}

// "[1,3|2]": the canonical row-standard representative, rows split by '|'.
inline std::string tabloid_label(const Tableau& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) os << '|';
    auto r = t.row(i);
    std::sort(r.begin(), r.end());
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
  }
  os << ']';
  return os.str();
}

/// All tabloids of a shape, lexicographic on the row-reading word of the
/// canonical representative, with an index lookup.
class TabloidBasis {
 public:
  explicit TabloidBasis(const Partition& shape, std::size_t cap = 1'000'000) : shape_(shape) {
    require(shape.n() <= kMaxTabloidDegree, "tabloids are limited to n <= 16");
    // n! / prod(lambda_i!) computed incrementally to check the cap first.
    long double count = 1;
    int used = 0;
    for (int part : shape.parts())
      for (int k = 1; k <= part; ++k) count = count * static_cast<long double>(++used) / k;
    if (count > static_cast<long double>(cap)) throw resource_error("too many tabloids for shape " + to_string(shape));
    for (const auto& t : row_standard_tableaux(shape)) {
      index_.emplace(tabloid_key(t), keys_.size());
      keys_.push_back(tabloid_key(t));
    }
  }

  const Partition& shape() const { return shape_; }
  std::size_t size() const { return keys_.size(); }
  TabloidKey key(std::size_t i) const { return keys_[i]; }
  std::size_t index(TabloidKey k) const { return index_.at(k); }
  Tableau tabloid(std::size_t i) const { return tabloid_from_key(keys_[i], shape_); }

 private:
  Partition shape_;
  std::vector<TabloidKey> keys_;
  std::unordered_map<TabloidKey, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Coefficient rings for straightening: the integers and F_p.
// ---------------------------------------------------------------------------

struct IntegerRing {
  using value_type = long long;
  value_type from_int(long long x) const { return x; }
  value_type add(value_type a, value_type b) const { return a + b; }
  value_type sub(value_type a, value_type b) const { return a - b; }
  value_type mul(value_type a, value_type b) const { return a * b; }
};

struct PrimeField {
  Fp f;
  using value_type = std::uint32_t;
  explicit PrimeField(std::uint32_t p) : f(p) {}
  value_type from_int(long long x) const { return f.from_int(x); }
  value_type add(value_type a, value_type b) const { return f.add(a, b); }
  value_type sub(value_type a, value_type b) const { return f.sub(a, b); }
  value_type mul(value_type a, value_type b) const { return f.mul(a, b); }
};

/// Sparse vector in the tabloid basis.
template <class Ring>
using TabloidVector = std::unordered_map<TabloidKey, typename Ring::value_type>;

/// Polytabloid terms: each tabloid of t g, g in C(t), with sign sgn(g).
inline std::vector<std::pair<TabloidKey, int>> polytabloid_terms(const Tableau& t, std::size_t cap = 1'000'000) {
  require(t.n() <= kMaxTabloidDegree, "tabloids are limited to n <= 16");
  const int ncols = t.shape()[0];
  std::uint64_t size = 1;
  for (int j = 0; j < ncols; ++j)
    for (std::uint64_t k = 2; k <= static_cast<std::uint64_t>(t.shape().column_length(j)); ++k) {
      size *= k;
      if (size > cap) throw resource_error("column group of " + to_string(t.shape()) + " exceeds cap");
    }
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < ncols; ++j) cols.push_back(t.column(j));

  // Column arrangements and their signs, per column.
  std::vector<std::vector<std::pair<TabloidKey, int>>> per_col;
  for (const auto& col : cols) {
    std::vector<std::pair<TabloidKey, int>> opts;
    std::vector<int> perm(col.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) ++inv;
      TabloidKey part = 0;
      for (std::size_t r = 0; r < perm.size(); ++r)
        part |= static_cast<TabloidKey>(r) << (4 * (col[static_cast<std::size_t>(perm[r])] - 1));
      opts.emplace_back(part, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    per_col.push_back(std::move(opts));
  }
  std::vector<std::pair<TabloidKey, int>> terms{{0, 1}};
  for (const auto& opts : per_col) {
    std::vector<std::pair<TabloidKey, int>> next;
    next.reserve(terms.size() * opts.size());
    for (const auto& [k, s] : terms)
      for (const auto& [k2, s2] : opts) next.emplace_back(k | k2, s * s2);
    terms = std::move(next);
  }
  return terms;
}

template <class Ring>
TabloidVector<Ring> polytabloid_vector(const Tableau& t, const Ring& ring) {
  TabloidVector<Ring> v;
  for (const auto& [k, s] : polytabloid_terms(t)) v[k] = ring.add(v[k], ring.from_int(s));
  return v;
}

/// e_t as a dense vector in the tabloid basis.
inline FpVector polytabloid(const Tableau& t, std::uint32_t p, const TabloidBasis& tabloids) {
  require(t.shape() == tabloids.shape(), "polytabloid: shape mismatch");
  const Fp f(p);
  FpVector v(p, tabloids.size());
  for (const auto& [k, s] : polytabloid_terms(t)) v[tabloids.index(k)] = f.add(v[tabloids.index(k)], f.from_int(s));
  return v;
}

/// Formal sum of basis labels with signed coefficients, e.g. "[1,3|2] - [2,3|1]".
inline std::string format_formal_sum(const std::vector<std::pair<std::string, long long>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, c] : terms) {
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag;
    os << label;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

inline std::string format_tabloid_vector(const FpVector& v, const TabloidBasis& tabloids) {
  const Fp f(v.p());
  std::vector<std::pair<std::string, long long>> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) terms.emplace_back(tabloid_label(tabloids.tabloid(i)), f.signed_rep(v[i]));
  return format_formal_sum(terms);
}

// ---------------------------------------------------------------------------
// Standard polytabloid basis and straightening
// ---------------------------------------------------------------------------

/// The standard basis of S^lambda: standard tableaux in basis order with their
/// polytabloids. Coordinates are found by elimination against the leading
/// tabloid of each standard polytabloid, greatest tableau first.
class SpechtBasis {
 public:
  explicit SpechtBasis(const Partition& shape, std::size_t max_dim = kDefaultMaxDim) : shape_(shape) {
    require(shape.n() <= kMaxTabloidDegree, "Specht modules are limited to n <= 16");
    if (hook_dimension(shape) > max_dim)
      throw resource_error("dim S^(" + to_string(shape) + ") exceeds cap " + std::to_string(max_dim));
    tableaux_ = standard_tableaux(shape);
    if (tableaux_.size() > max_dim)
      throw resource_error("dim S^(" + to_string(shape) + ") = " + std::to_string(tableaux_.size()) + " exceeds cap");
    for (std::size_t i = 0; i < tableaux_.size(); ++i) {
      leading_.emplace(tabloid_key(tableaux_[i]), i);
      terms_.push_back(polytabloid_terms(tableaux_[i]));
    }
  }

  const Partition& shape() const { return shape_; }
  std::size_t dim() const { return tableaux_.size(); }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }
  const Tableau& tableau(std::size_t i) const { return tableaux_[i]; }
  const std::vector<std::pair<TabloidKey, int>>& terms(std::size_t i) const { return terms_[i]; }

  std::size_t index_of(const Tableau& standard) const {
    auto it = leading_.find(tabloid_key(standard));
    require(it != leading_.end() && tableaux_[it->second] == standard, "index_of: not a standard tableau of this shape");
    return it->second;
  }

  /// Coordinates of v with respect to the standard polytabloids, over the
  /// integers or F_p. Throws not_in_span if v is outside the Specht module.
  template <class Ring>
  std::vector<typename Ring::value_type> straighten(TabloidVector<Ring> v, const Ring& ring) const {
    using T = typename Ring::value_type;
    std::vector<T> coords(dim(), ring.from_int(0));
    const T zero = ring.from_int(0);
    for (std::size_t i = 0; i < dim() && !v.empty(); ++i) {
      auto it = v.find(tabloid_key(tableaux_[i]));
      if (it == v.end() || it->second == zero) continue;
      const T c = it->second;
      coords[i] = c;
      for (const auto& [k, s] : terms_[i]) {
        auto& slot = v[k];
        slot = ring.sub(slot, ring.mul(c, ring.from_int(s)));
        if (slot == zero) v.erase(k);
      }
    }
    for (const auto& [k, c] : v)
      if (c != zero) throw not_in_span("vector is not in the span of the polytabloids of " + to_string(shape_));
    return coords;
  }

  /// Coordinates of e_u for any tableau u of this shape.
  template <class Ring>
  std::vector<typename Ring::value_type> polytabloid_coordinates(const Tableau& u, const Ring& ring) const {
    require(u.shape() == shape_, "polytabloid_coordinates: shape mismatch");
    return straighten(polytabloid_vector(u, ring), ring);
  }

  /// Matrix of g on the standard basis: row i holds the coordinates of e_{s_i g}.
  FpMatrix action_matrix(const Permutation& g, std::uint32_t p) const {
    require(g.degree() == shape_.n(), "action_matrix: degree mismatch");
    const PrimeField ring(p);
    FpMatrix m(p, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto c = polytabloid_coordinates(act(tableaux_[i], g), ring);
      for (std::size_t j = 0; j < dim(); ++j) m(i, j) = c[j];
    }
    return m;
  }

  /// Rows: standard polytabloids expanded in the tabloid basis.
  FpMatrix embedding_matrix(std::uint32_t p, const TabloidBasis& tabloids) const {
    FpMatrix m(p, dim(), tabloids.size());
    const Fp f(p);
    for (std::size_t i = 0; i < dim(); ++i)
      for (const auto& [k, s] : terms_[i]) {
        auto& x = m(i, tabloids.index(k));
        x = f.add(x, f.from_int(s));
      }
    return m;
  }

 private:
  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::vector<std::vector<std::pair<TabloidKey, int>>> terms_;
  std::unordered_map<TabloidKey, std::size_t> leading_;
};

/// Coordinates of a dense tabloid-basis vector in the standard basis.
inline FpVector straighten_vector(const FpVector& v, const SpechtBasis& basis, const TabloidBasis& tabloids) {
  require(v.size() == tabloids.size(), "straighten_vector: length mismatch");
  const PrimeField ring(v.p());
  TabloidVector<PrimeField> sparse;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) sparse[tabloids.key(i)] = v[i];
  return FpVector(v.p(), basis.straighten(std::move(sparse), ring));
}

inline std::string format_specht_vector(const FpVector& coords, const SpechtBasis& basis) {
  const Fp f(coords.p());
  std::vector<std::pair<std::string, long long>> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) terms.emplace_back("e(" + to_string(basis.tableau(i)) + ")", f.signed_rep(coords[i]));
  return format_formal_sum(terms);
}

/// {(1,2), (1,2,...,n)}.
inline std::vector<Permutation> default_generators(int n) {
  std::vector<int> pts(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(pts.begin(), pts.end(), 1);
  return symmetric_group_generators(n, pts);
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

/// M^lambda on the tabloid basis. Empty `gens` means the default generators.
inline ModuleRep young_module(const Partition& shape, std::uint32_t p, std::vector<Permutation> gens = {}) {
  const int n = shape.n();
  if (gens.empty()) gens = default_generators(n);
  auto tabloids = std::make_shared<const TabloidBasis>(shape);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tabloids->size(); ++i) labels.push_back(tabloid_label(tabloids->tabloid(i)));
  auto actor = [tabloids, p](const Permutation& g) {
    FpMatrix m(p, tabloids->size(), tabloids->size());
    for (std::size_t i = 0; i < tabloids->size(); ++i) m(i, tabloids->index(act_on_key(tabloids->key(i), g))) = 1;
    return m;
  };
  std::vector<FpMatrix> mats;
  for (const auto& g : gens) {
    require(g.degree() == n, "young_module: generator degree mismatch");
    mats.push_back(actor(g));
  }
  return ModuleRep(p, n, std::move(labels), std::move(gens), std::move(mats), actor);
}

struct SpechtModule {
  std::shared_ptr<const SpechtBasis> basis;
  ModuleRep rep;

  FpMatrix embedding(const TabloidBasis& tabloids) const { return basis->embedding_matrix(rep.p(), tabloids); }
  /// e_t for the greatest tableau t; it is the first basis vector.
  FpVector greatest_polytabloid() const { return FpVector::unit(rep.p(), rep.dim(), 0); }
};

/// S^lambda on the standard polytabloid basis. The stored generators are the
/// default generators of S_n followed by `extra`.
inline SpechtModule specht_module(const Partition& shape, std::uint32_t p, const std::vector<Permutation>& extra = {},
                                  std::size_t max_dim = kDefaultMaxDim) {
  require_prime(p);
  auto basis = std::make_shared<const SpechtBasis>(shape, max_dim);
  std::vector<std::string> labels;
  for (const auto& t : basis->tableaux()) labels.push_back(to_string(t));
  auto actor = [basis, p](const Permutation& g) { return basis->action_matrix(g, p); };
  std::vector<Permutation> gens = default_generators(shape.n());
  for (const auto& g : extra)
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  std::vector<FpMatrix> mats;
  for (const auto& g : gens) mats.push_back(actor(g));
  return SpechtModule{basis, ModuleRep(p, shape.n(), std::move(labels), std::move(gens), std::move(mats), actor)};
}

// ---------------------------------------------------------------------------
// Endomorphisms, homomorphisms, indecomposability
// ---------------------------------------------------------------------------

inline Subspace endomorphism_algebra(const ModuleRep& m) { return commutant(m.matrices(), m.p(), m.dim()); }

inline std::size_t endomorphism_dimension(const ModuleRep& m) { return endomorphism_algebra(m).dim(); }

namespace detail {

inline bool is_nilpotent(const FpMatrix& x) {
  FpMatrix pw = x;
  std::size_t r = rank(pw);
  while (r > 0) {
    pw = pw * x;
    const std::size_t next = rank(pw);
    if (next == r) return false;
    r = next;
  }
  return true;
}

inline FpMatrix combination(const Subspace& alg, const std::vector<std::uint32_t>& c, std::size_t d) {
  FpVector v(alg.p(), alg.ambient());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) v.axpy(c[i], alg.vector(i));
  return unflatten(v, d, d);
}

}  // namespace detail

enum class Decomposability { indecomposable, decomposable, undetermined };

struct IndecomposabilityReport {
  std::size_t endomorphism_dim = 0;
  Decomposability verdict = Decomposability::undetermined;
};

inline constexpr std::uint64_t kExhaustiveLocalityBudget = 1u << 20;

/// The module is indecomposable iff its endomorphism algebra is local, i.e.
/// every endomorphism is nilpotent or invertible. Exhaustive when
/// p^dim End <= 2^20; otherwise random elements are searched for one that is
/// neither, and the verdict stays undetermined if none turns up.
inline IndecomposabilityReport decide_indecomposable(const ModuleRep& m, std::size_t random_trials = 4000) {
  const Subspace alg = endomorphism_algebra(m);
  IndecomposabilityReport rep{alg.dim(), Decomposability::undetermined};
  const std::size_t e = alg.dim();
  const std::size_t d = m.dim();
  if (e <= 1) {
    rep.verdict = Decomposability::indecomposable;
    return rep;
  }
  const auto splits = [&](const FpMatrix& x) { return rank(x) != d && !detail::is_nilpotent(x); };
  long double total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= m.p();
  if (total <= static_cast<long double>(kExhaustiveLocalityBudget)) {
    std::vector<std::uint32_t> c(e, 0);
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 1; code < count; ++code) {
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < e; ++i) {
        c[i] = static_cast<std::uint32_t>(rest % m.p());
        rest /= m.p();
      }
      if (splits(detail::combination(alg, c, d))) {
        rep.verdict = Decomposability::decomposable;
        return rep;
      }
    }
    rep.verdict = Decomposability::indecomposable;
    return rep;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint32_t> coef(0, m.p() - 1);
  std::vector<std::uint32_t> c(e);
  for (std::size_t trial = 0; trial < random_trials; ++trial) {
    for (auto& x : c) x = coef(rng);
    if (splits(detail::combination(alg, c, d))) {
      rep.verdict = Decomposability::decomposable;
      return rep;
    }
  }
  return rep;
}

inline bool is_indecomposable(const ModuleRep& m) {
  const auto r = decide_indecomposable(m);
  if (r.verdict == Decomposability::undetermined)
    throw resource_error("locality test infeasible: endomorphism dimension " + std::to_string(r.endomorphism_dim));
  return r.verdict == Decomposability::indecomposable;
}

/// Module homomorphisms m -> n (flattened dim_m x dim_n matrices X with
/// A_m(g) X = X A_n(g) for every generator g).
inline Subspace hom_space(const ModuleRep& m, const ModuleRep& n) {
  require(m.p() == n.p(), "hom_space: characteristic mismatch");
  require(m.generators() == n.generators(), "hom_space: modules must carry the same generators");
  return intertwiners(m.matrices(), n.matrices(), m.p(), m.dim(), n.dim());
}

/// True iff some homomorphism m -> n is invertible. Searches basis elements,
/// then all combinations when p^dim Hom is small, then random combinations.
inline bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::size_t random_trials = 2000) {
  if (m.dim() != n.dim()) return false;
  const Subspace hom = hom_space(m, n);
  const std::size_t d = m.dim();
  if (d == 0) return true;
  if (hom.dim() == 0) return false;
  const auto invertible = [&](const std::vector<std::uint32_t>& c) {
    return rank(detail::combination(hom, c, d)) == d;
  };
  std::vector<std::uint32_t> c(hom.dim(), 0);
  for (std::size_t i = 0; i < hom.dim(); ++i) {
    std::fill(c.begin(), c.end(), 0);
    c[i] = 1;
    if (invertible(c)) return true;
  }
  long double total = 1;
  for (std::size_t i = 0; i < hom.dim(); ++i) total *= m.p();
  if (total <= static_cast<long double>(1u << 16)) {
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 1; code < count; ++code) {
      std::uint64_t rest = code;
      for (auto& x : c) {
        x = static_cast<std::uint32_t>(rest % m.p());
        rest /= m.p();
      }
      if (invertible(c)) return true;
    }
    return false;
  }
  std::mt19937_64 rng(0x150);
  std::uniform_int_distribution<std::uint32_t> coef(0, m.p() - 1);
  for (std::size_t t = 0; t < random_trials; ++t) {
    for (auto& x : c) x = coef(rng);
    if (invertible(c)) return true;
  }
  return false;
}

}  // namespace spx
