#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spx/errors.hpp"
#include "spx/fp_linalg.hpp"
#include "spx/perm_group.hpp"
#include "spx/permutation.hpp"

namespace spx {

/// A matrix representation over F_p: labelled basis and one matrix per
/// generator, acting on row vectors from the right (v -> v A(g)).
class ModuleRep {
 public:
  using Actor = std::function<FpMatrix(const Permutation&)>;

  ModuleRep() = default;
  ModuleRep(std::uint32_t p, int degree, std::vector<std::string> labels, std::vector<Permutation> gens,
            std::vector<FpMatrix> mats, Actor actor = {})
      : p_(p), degree_(degree), labels_(std::move(labels)), gens_(std::move(gens)), mats_(std::move(mats)),
        actor_(std::move(actor)) {
    require(gens_.size() == mats_.size(), "ModuleRep: one matrix per generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      require(gens_[i].degree() == degree_, "ModuleRep: generator degree mismatch");
      require(mats_[i].rows() == labels_.size() && mats_[i].cols() == labels_.size() && mats_[i].p() == p_,
              "ModuleRep: matrix shape mismatch");
      require(rank(mats_[i]) == labels_.size(), "ModuleRep: action matrix is not invertible");
    }
  }

  std::uint32_t p() const { return p_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Permutation>& generators() const& { return gens_; }
  std::vector<Permutation> generators() && { return gens_; }
  const std::vector<FpMatrix>& matrices() const& { return mats_; }
  std::vector<FpMatrix> matrices() && { return mats_; }
  bool has_actor() const { return static_cast<bool>(actor_); }

  /// Matrix of any permutation: stored generator, the direct action, or a
  /// product along a word in the stored generators.
  FpMatrix matrix_of(const Permutation& g) const {
    require(g.degree() == degree_, "matrix_of: degree mismatch");
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == g) return mats_[i];
    if (g.is_identity()) return FpMatrix::identity(p_, dim());
    if (actor_) return actor_(g);
    const PermGroup closure(degree_, gens_);
    require(closure.contains(g), "matrix_of: permutation is not generated by the module's generators");
    std::vector<std::size_t> word;
    for (std::size_t k = closure.index_of(g); k != 0; k = closure.parent(k)) word.push_back(closure.via(k));
    FpMatrix m = FpMatrix::identity(p_, dim());
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * mats_[*it];
    return m;
  }

  /// Same module with additional generators (deduplicated, order kept).
  ModuleRep with_generators(const std::vector<Permutation>& extra) const {
    auto gens = gens_;
    auto mats = mats_;
    for (const auto& g : extra) {
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
      mats.push_back(matrix_of(g));
      gens.push_back(g);
    }
    return ModuleRep(p_, degree_, labels_, std::move(gens), std::move(mats), actor_);
  }

  /// Same matrices, generator labels replaced (e.g. after renaming points).
  ModuleRep relabelled(std::vector<Permutation> gens, int degree) const {
    require(gens.size() == gens_.size(), "relabelled: generator count mismatch");
    return ModuleRep(p_, degree, labels_, std::move(gens), mats_);
  }

 private:
  std::uint32_t p_ = 2;
  int degree_ = 0;
  std::vector<std::string> labels_;
  std::vector<Permutation> gens_;
  std::vector<FpMatrix> mats_;
  Actor actor_;
};

/// The smallest subspace containing `seeds` and invariant under all matrices.
inline Subspace spin(const std::vector<FpVector>& seeds, const std::vector<FpMatrix>& mats, std::uint32_t p, std::size_t d) {
  Subspace s(p, d);
  std::vector<FpVector> queue;
  auto add = [&](const FpVector& v) {
    if (s.contains(v)) return;
    auto rows = s.basis().row_vectors();
    rows.push_back(v);
    s = Subspace::span(p, d, rows);
    queue.push_back(v);
  };
  for (const auto& v : seeds) add(v);
  while (!queue.empty()) {
    FpVector v = queue.back();
    queue.pop_back();
    for (const auto& m : mats) add(v * m);
  }
  return s;
}

/// Matrices of the action restricted to an invariant subspace, in its
/// echelon basis.
inline std::vector<FpMatrix> restrict_action(const std::vector<FpMatrix>& mats, const Subspace& w) {
  std::vector<FpMatrix> out;
  for (const auto& m : mats) {
    FpMatrix r(w.p(), w.dim(), w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) {
      const FpVector img = w.vector(i) * m;
      require(w.contains(img), "restrict_action: subspace is not invariant");
      for (std::size_t k = 0; k < w.dim(); ++k) r(i, k) = img[w.pivots()[k]];
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline ModuleRep submodule(const ModuleRep& m, const Subspace& w) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < w.dim(); ++i) labels.push_back("w" + std::to_string(i + 1));
  return ModuleRep(m.p(), m.degree(), std::move(labels), m.generators(), restrict_action(m.matrices(), w));
}

}  // namespace spx
