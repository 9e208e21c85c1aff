#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spx/arith.hpp"
#include "spx/errors.hpp"
#include "spx/permutation.hpp"
#include "spx/tableau.hpp"

namespace spx {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// A permutation group given by generators. The element list is produced by
/// closure on first use and is immutable afterwards; copies share it.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap = kDefaultGroupCap)
      : degree_(degree), cap_(cap), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      require(g.degree() == degree, "generator degree mismatch");
      if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
    }
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  /// `elements` must already be closed under multiplication.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    std::vector<Permutation> gens;
    PermGroup current = trivial(degree);
    for (const auto& x : elements) {
      if (current.contains(x)) continue;
      gens.push_back(x);
      current = PermGroup(degree, gens);
    }
    require(current.order() == elements.size(), "from_elements: element set is not a group");
    return current;
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const& { return gens_; }
  std::vector<Permutation> generators() && { return gens_; }
  std::size_t cap() const { return cap_; }

  /// All elements, identity first, in breadth-first order over the generators.
  const std::vector<Permutation>& elements() const& {
    enumerate();
    return cache_->elements;
  }
  // A temporary's cache may die with it, so hand back a copy.
  std::vector<Permutation> elements() && {
    enumerate();
    return cache_->elements;
  }

  std::uint64_t order() const { return elements().size(); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    enumerate();
    return cache_->index.count(g) > 0;
  }

  std::size_t index_of(const Permutation& g) const {
    enumerate();
    auto it = cache_->index.find(g);
    require(it != cache_->index.end(), "element not in group");
    return it->second;
  }

  /// For element k > 0: elements()[k] = elements()[parent(k)] * generators()[via(k)].
  std::size_t parent(std::size_t k) const {
    enumerate();
    return cache_->parent[k];
  }
  std::size_t via(std::size_t k) const {
    enumerate();
    return cache_->via[k];
  }

  bool is_subgroup_of(const PermGroup& other) const {
    if (degree_ != other.degree_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& g) { return other.contains(g); });
  }

  bool same_elements(const PermGroup& other) const {
    return order() == other.order() && is_subgroup_of(other);
  }

  /// Points moved by some element, increasing.
  std::vector<int> support() const {
    std::set<int> s;
    for (const auto& g : gens_)
      for (int x : g.support()) s.insert(x);
    return {s.begin(), s.end()};
  }

  bool is_p_group(int p) const {
    std::uint64_t o = order();
    while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
    return o == 1;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
    std::vector<std::size_t> parent, via;
    std::unordered_map<Permutation, std::size_t> index;
  };

  void enumerate() const {
    std::call_once(cache_->once, [this] {
      Cache& c = *cache_;
      c.elements.push_back(Permutation(degree_));
      c.parent.push_back(0);
      c.via.push_back(0);
      c.index.emplace(c.elements.front(), 0);
      for (std::size_t k = 0; k < c.elements.size(); ++k) {
        for (std::size_t j = 0; j < gens_.size(); ++j) {
          Permutation y = c.elements[k] * gens_[j];
          if (c.index.count(y)) continue;
          if (c.elements.size() >= cap_) {
            c.elements.clear();
            c.index.clear();
            c.parent.clear();
            c.via.clear();
            throw resource_error("group closure exceeds cap of " + std::to_string(cap_) + " elements");
          }
          c.index.emplace(y, c.elements.size());
          c.elements.push_back(std::move(y));
          c.parent.push_back(k);
          c.via.push_back(j);
        }
      }
    });
  }

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::size_t cap_ = kDefaultGroupCap;
  std::shared_ptr<Cache> cache_;
};

/// Closure of the generators with eager enumeration.
inline PermGroup generate(int degree, std::vector<Permutation> gens, std::size_t cap = kDefaultGroupCap) {
  PermGroup g(degree, std::move(gens), cap);
  (void)g.elements();
  return g;
}

/// {transposition of the first two points, cycle through all of them}.
inline std::vector<Permutation> symmetric_group_generators(int degree, const std::vector<int>& points) {
  std::vector<Permutation> gens;
  if (points.size() < 2) return gens;
  gens.push_back(Permutation::from_cycles(degree, {{points[0], points[1]}}));
  if (points.size() > 2) gens.push_back(Permutation::from_cycles(degree, {points}));
  return gens;
}

/// The group of permutations fixing every column of t setwise.
inline PermGroup column_group(const Tableau& t) {
  std::vector<Permutation> gens;
  for (int j = 0; j < t.shape()[0]; ++j) {
    const auto col = t.column(j);
    for (std::size_t i = 0; i + 1 < col.size(); ++i)
      gens.push_back(Permutation::from_cycles(t.n(), {{col[i], col[i + 1]}}));
  }
  return PermGroup(t.n(), std::move(gens));
}

/// The Young subgroup fixing every row of t setwise.
inline PermGroup row_stabilizer(const Tableau& t) {
  std::vector<Permutation> gens;
  for (const auto& row : t.rows())
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      gens.push_back(Permutation::from_cycles(t.n(), {{row[i], row[i + 1]}}));
  return PermGroup(t.n(), std::move(gens));
}

/// Maximal runs of equal-length columns of a shape, as 0-based column indices.
inline std::vector<std::vector<int>> equal_column_classes(const Partition& shape) {
  std::vector<std::vector<int>> classes;
  for (int j = 0; j < shape[0]; ++j) {
    if (j > 0 && shape.column_length(j) == shape.column_length(j - 1))
      classes.back().push_back(j);
    else
      classes.push_back({j});
  }
  return classes;
}

/// Lift a permutation of the columns in `cls` (given on 1..|cls|) to the
/// permutation of entries of t moving each column as a block, row by row.
inline Permutation lift_column_permutation(const Tableau& t, const std::vector<int>& cls, const Permutation& sigma) {
  std::vector<int> img(static_cast<std::size_t>(t.n()));
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t a = 0; a < cls.size(); ++a) {
    const auto from = t.column(cls[a]);
    const auto to = t.column(cls[static_cast<std::size_t>(sigma(static_cast<int>(a) + 1) - 1)]);
    for (std::size_t r = 0; r < from.size(); ++r) img[static_cast<std::size_t>(from[r] - 1)] = to[r];
  }
  return Permutation::from_images(std::move(img));
}

/// H(t): permutes, as blocks, the columns of t of equal length. Generated per
/// class by the cycle through its columns and the swap of its first two.
inline PermGroup h_group(const Tableau& t) {
  std::vector<Permutation> gens;
  for (const auto& cls : equal_column_classes(t.shape())) {
    const int k = static_cast<int>(cls.size());
    std::vector<int> pts(static_cast<std::size_t>(k));
    std::iota(pts.begin(), pts.end(), 1);
    auto abstract = symmetric_group_generators(k, pts);
    std::reverse(abstract.begin(), abstract.end());  // cycle first, then the swap
    for (const auto& s : abstract) gens.push_back(lift_column_permutation(t, cls, s));
  }
  return PermGroup(t.n(), std::move(gens));
}

/// |H(t)| = product over column classes of (class size)!.
inline std::uint64_t h_group_order(const Tableau& t) {
  std::uint64_t o = 1;
  for (const auto& cls : equal_column_classes(t.shape()))
    for (std::uint64_t i = 2; i <= cls.size(); ++i) o *= i;
  return o;
}

/// Generators of a Sylow p-subgroup of the symmetric group on `support`:
/// one iterated wreath product of C_p per base-p digit of |support|.
inline std::vector<Permutation> sylow_generators(int degree, const std::vector<int>& support, int p) {
  require_prime(p);
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  std::size_t remaining = support.size();
  // Largest blocks first.
  std::size_t block = 1;
  int top = 0;
  while (block * static_cast<std::size_t>(p) <= remaining) {
    block *= static_cast<std::size_t>(p);
    ++top;
  }
  for (int k = top; k >= 1; --k, block /= static_cast<std::size_t>(p)) {
    while (remaining >= block) {
      // Generator j cycles the p consecutive sub-blocks of size p^j inside
      // the first p^{j+1} points of this block.
      std::size_t sub = 1;
      for (int j = 0; j < k; ++j, sub *= static_cast<std::size_t>(p)) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        std::iota(img.begin(), img.end(), 1);
        const std::size_t span = sub * static_cast<std::size_t>(p);
        for (std::size_t i = 0; i < span; ++i)
          img[static_cast<std::size_t>(support[offset + i] - 1)] = support[offset + (i + sub) % span];
        gens.push_back(Permutation::from_images(std::move(img)));
      }
      offset += block;
      remaining -= block;
    }
  }
  return gens;
}

inline PermGroup sylow_p(int degree, const std::vector<int>& support, int p) {
  return PermGroup(degree, sylow_generators(degree, support, p));
}

/// A Sylow p-subgroup of H(t), one Sylow subgroup of S_k per column class of size k.
inline PermGroup sylow_of_h_group(const Tableau& t, int p) {
  std::vector<Permutation> gens;
  for (const auto& cls : equal_column_classes(t.shape())) {
    const int k = static_cast<int>(cls.size());
    std::vector<int> pts(static_cast<std::size_t>(k));
    std::iota(pts.begin(), pts.end(), 1);
    for (const auto& s : sylow_generators(k, pts, p)) gens.push_back(lift_column_permutation(t, cls, s));
  }
  return PermGroup(t.n(), std::move(gens));
}

/// Elements of N_{Sym(support)}(Q), found by backtracking over images of the
/// support points with the constraint that each generator conjugates into Q.
inline std::vector<Permutation> support_normalizer_elements(const PermGroup& q, std::size_t cap = kDefaultGroupCap) {
  const int n = q.degree();
  const std::vector<int> supp = q.support();
  const auto& elems = q.elements();
  const auto& gens = q.generators();
  const std::size_t m = supp.size();
  std::vector<int> phi(static_cast<std::size_t>(n) + 1, 0);  // phi[a] = a.g, 0 if unassigned
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Permutation> found;
  std::vector<Permutation> inverses;
  for (const auto& x : gens) inverses.push_back(x.inverse());

  // candidates[j] = indices of elements of Q still consistent with g^{-1} x_j g
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (auto& c : candidates) {
    c.resize(elems.size());
    std::iota(c.begin(), c.end(), 0);
  }

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == m) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 1);
      for (int a : supp) img[static_cast<std::size_t>(a - 1)] = phi[static_cast<std::size_t>(a)];
      found.push_back(Permutation::from_images(std::move(img)));
      if (found.size() > cap) throw resource_error("normalizer exceeds cap");
      return;
    }
    const int a = supp[depth];
    for (int b : supp) {
      if (used[static_cast<std::size_t>(b)]) continue;
      phi[static_cast<std::size_t>(a)] = b;
      used[static_cast<std::size_t>(b)] = 1;
      // The conjugate c = g^{-1} x g sends a.g to (a.x).g.
      std::vector<std::vector<std::size_t>> saved;
      saved.reserve(gens.size());
      bool ok = true;
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        saved.push_back(candidates[j]);
        auto& cand = candidates[j];
        const auto keep = [&](std::size_t e) {
          const Permutation& c = elems[e];
          const int xa = gens[j](a);
          if (phi[static_cast<std::size_t>(xa)] && c(b) != phi[static_cast<std::size_t>(xa)]) return false;
          const int pre = inverses[j](a);
          return !(phi[static_cast<std::size_t>(pre)] && c(phi[static_cast<std::size_t>(pre)]) != b);
        };
        cand.erase(std::remove_if(cand.begin(), cand.end(), [&](std::size_t e) { return !keep(e); }), cand.end());
        ok = !cand.empty();
      }
      if (ok) rec(depth + 1);
      for (std::size_t j = 0; j < saved.size(); ++j) candidates[j] = std::move(saved[j]);
      used[static_cast<std::size_t>(b)] = 0;
      phi[static_cast<std::size_t>(a)] = 0;
    }
  };
  rec(0);
  return found;
}

/// N_{Sym(support)}(Q) as a group on the full degree.
inline PermGroup support_normalizer(const PermGroup& q, std::size_t cap = kDefaultGroupCap) {
  return PermGroup::from_elements(q.degree(), support_normalizer_elements(q, cap));
}

/// N_{S_n}(Q) = S_{fixed points} x N_{Sym(support)}(Q).
inline PermGroup normalizer(int n, const PermGroup& q, std::size_t cap = kDefaultGroupCap) {
  require(q.degree() == n, "normalizer: degree mismatch");
  const auto supp = q.support();
  std::vector<int> fixed;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(supp.begin(), supp.end(), i)) fixed.push_back(i);
  auto gens = symmetric_group_generators(n, fixed);
  const auto local = support_normalizer(q, cap);
  for (const auto& g : local.generators()) gens.push_back(g);
  return PermGroup(n, std::move(gens), cap);
}

namespace detail {

inline std::vector<std::vector<Permutation>> right_cosets(const PermGroup& r, const PermGroup& q) {
  require(r.degree() == q.degree(), "right_transversal: degree mismatch");
  for (const auto& x : r.elements()) require(q.contains(x), "right_transversal: R is not a subgroup of Q");
  std::unordered_set<Permutation> covered;
  std::vector<std::vector<Permutation>> cosets;
  for (const auto& g : q.elements()) {
    if (covered.count(g)) continue;
    std::vector<Permutation> coset;
    for (const auto& x : r.elements()) {
      Permutation y = x * g;
      covered.insert(y);
      coset.push_back(std::move(y));
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace detail

/// One representative per right coset Rg of R in Q.
inline std::vector<Permutation> right_transversal(const PermGroup& r, const PermGroup& q) {
  std::vector<Permutation> out;
  for (auto& c : detail::right_cosets(r, q)) out.push_back(c.front());
  return out;
}

template <class Rng>
std::vector<Permutation> random_right_transversal(const PermGroup& r, const PermGroup& q, Rng& rng) {
  std::vector<Permutation> out;
  for (auto& c : detail::right_cosets(r, q)) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    out.push_back(c[pick(rng)]);
  }
  return out;
}

namespace detail {

// The smallest subgroup of the enumerated group containing `seed` and
// normalised by `normalising`.
inline PermGroup normal_closure(int degree, std::vector<Permutation> seed, const std::vector<Permutation>& normalising) {
  PermGroup n(degree, std::move(seed));
  while (true) {
    std::vector<Permutation> extra;
    for (const auto& x : n.generators())
      for (const auto& g : normalising) {
        Permutation y = x.conjugate_by(g);
        if (!n.contains(y)) extra.push_back(std::move(y));
      }
    if (extra.empty()) return n;
    auto gens = n.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    n = PermGroup(degree, std::move(gens));
  }
}

inline int prime_of_p_group(std::uint64_t order) {
  if (order == 1) return 0;
  int p = 2;
  while (order % static_cast<std::uint64_t>(p) != 0) ++p;
  std::uint64_t o = order;
  while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
  require(o == 1, "maximal_subgroups: Q is not a p-group");
  return p;
}

}  // namespace detail

/// Frattini subgroup of a p-group: generated by p-th powers and commutators.
inline PermGroup frattini_subgroup(const PermGroup& q) {
  const int p = detail::prime_of_p_group(q.order());
  if (p == 0) return q;
  std::vector<Permutation> seed;
  for (const auto& x : q.elements()) seed.push_back(x.pow(p));
  const auto& g = q.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) seed.push_back(g[i].inverse() * g[j].inverse() * g[i] * g[j]);
  return detail::normal_closure(q.degree(), std::move(seed), g);
}

/// All index-p subgroups of the p-group Q: preimages of the hyperplanes of
/// the elementary abelian quotient Q / Phi(Q).
inline std::vector<PermGroup> maximal_subgroups(const PermGroup& q) {
  const int p = detail::prime_of_p_group(q.order());
  if (p == 0) return {};
  const PermGroup phi = frattini_subgroup(q);

  // Basis of Q/Phi from the generators of Q.
  std::vector<Permutation> basis;
  std::vector<Permutation> acc = phi.generators();
  std::uint64_t current = phi.order();
  for (const auto& g : q.generators()) {
    auto trial = acc;
    trial.push_back(g);
    PermGroup k(q.degree(), trial);
    if (k.order() > current) {
      basis.push_back(g);
      acc = std::move(trial);
      current = k.order();
    }
  }
  const int d = static_cast<int>(basis.size());
  require(current == q.order(), "maximal_subgroups: generators do not span Q/Phi");

  // Coordinates of each element of Q in F_p^d.
  std::unordered_map<Permutation, std::vector<int>> coord;
  std::vector<int> c(static_cast<std::size_t>(d), 0);
  const std::uint64_t cosets = ipow(static_cast<std::uint64_t>(p), d);
  for (std::uint64_t code = 0; code < cosets; ++code) {
    std::uint64_t rest = code;
    Permutation rep(q.degree());
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
      rep = rep * basis[static_cast<std::size_t>(i)].pow(c[static_cast<std::size_t>(i)]);
    }
    for (const auto& f : phi.elements()) coord[f * rep] = c;
  }

  // Normalised functionals: first nonzero coefficient is 1.
  std::vector<PermGroup> out;
  for (std::uint64_t code = 1; code < cosets; ++code) {
    std::vector<int> f(static_cast<std::size_t>(d));
    std::uint64_t rest = code;
    for (int i = 0; i < d; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    const auto lead = std::find_if(f.begin(), f.end(), [](int x) { return x != 0; });
    if (*lead != 1) continue;
    std::vector<Permutation> members;
    for (const auto& x : q.elements()) {
      const auto& cx = coord.at(x);
      long long s = 0;
      for (int i = 0; i < d; ++i) s += static_cast<long long>(f[static_cast<std::size_t>(i)]) * cx[static_cast<std::size_t>(i)];
      if (s % p == 0) members.push_back(x);
    }
    out.push_back(PermGroup::from_elements(q.degree(), std::move(members)));
  }
  return out;
}

/// All cyclic subgroups of prime-power order (including the trivial group).
inline std::vector<PermGroup> cyclic_p_subgroups(const PermGroup& g, int p) {
  require_prime(p);
  std::vector<PermGroup> out{PermGroup::trivial(g.degree())};
  std::set<std::vector<Permutation>> seen;
  for (const auto& x : g.elements()) {
    std::uint64_t o = x.order();
    if (o == 1) continue;
    while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
    if (o != 1) continue;
    PermGroup c(g.degree(), {x});
    auto key = c.elements();
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace spx
