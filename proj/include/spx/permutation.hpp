#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spx/errors.hpp"
#include "spx/partition.hpp"
#include "spx/tableau.hpp"

namespace spx {

/// A bijection of {1, ..., n}. Permutations act on the right: the image of
/// i under g is written i.g, and i.(gh) = (i.g).h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
    std::iota(images_.begin(), images_.end(), 1);
  }
  // images[i - 1] = i.g
  static Permutation from_images(std::vector<int> images) {
    Permutation g;
    g.images_ = std::move(images);
    std::vector<char> hit(g.images_.size() + 1, 0);
    for (int x : g.images_) {
      require(x >= 1 && static_cast<std::size_t>(x) <= g.images_.size(), "permutation image out of range");
      require(!hit[static_cast<std::size_t>(x)], "images do not form a bijection");
      hit[static_cast<std::size_t>(x)] = 1;
    }
    return g;
  }

  /// Build from disjoint-or-not cycles, composed left to right.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation g(degree);
    for (const auto& c : cycles) {
      Permutation cyc(degree);
      std::vector<char> seen(static_cast<std::size_t>(degree) + 1, 0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        require(c[k] >= 1 && c[k] <= degree, "cycle entry out of range");
        require(!seen[static_cast<std::size_t>(c[k])], "repeated point in a cycle");
        seen[static_cast<std::size_t>(c[k])] = 1;
        cyc.images_[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
      }
      g = g * cyc;
    }
    return g;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Right-action product: first *this, then h.
  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    require(g.degree() == h.degree(), "degree mismatch in product");
    Permutation r;
    r.images_.resize(g.images_.size());
    for (std::size_t i = 0; i < g.images_.size(); ++i) r.images_[i] = h(g.images_[i]);
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
  }

  Permutation pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Permutation r(degree());
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// g^{-1} * this * g
  Permutation conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size() + 1, 0);
    for (int i = 1; i <= degree(); ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      std::vector<int> c;
      for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = 1;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    return o;
  }

  /// Moved points, increasing.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 1; i <= degree(); ++i)
      if ((*this)(i) != i) s.push_back(i);
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Parity as +1 / -1.
inline int sign(const Permutation& g) {
  int transpositions = 0;
  for (const auto& c : g.cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

/// t.g: replace every entry x by x.g.
inline Tableau act(const Tableau& t, const Permutation& g) {
  require(t.n() == g.degree(), "tableau/permutation degree mismatch");
  return t.relabel([&](int x) { return g(x); });
}

/// The permutation sending each entry of `from` to the entry in the same cell of `to`.
inline Permutation permutation_between(const Tableau& from, const Tableau& to) {
  require(from.shape() == to.shape(), "permutation_between: shape mismatch");
  std::vector<int> img(static_cast<std::size_t>(from.n()));
  for (std::size_t i = 0; i < from.rows().size(); ++i)
    for (std::size_t j = 0; j < from.row(i).size(); ++j)
      img[static_cast<std::size_t>(from.row(i)[j] - 1)] = to.row(i)[j];
  return Permutation::from_images(std::move(img));
}

// Cycle notation "(1,2,3)(4,5)"; the identity prints as "()".
inline std::string to_string(const Permutation& g) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : g.cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& g) { return os << to_string(g); }

/// Parse cycle notation. With degree <= 0 the degree is the largest point named.
inline Permutation parse_cycles(std::string_view text, int degree = 0) {
  text = detail::trim(text);
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_point = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    require(text[pos] == '(', "cycle notation must start with '('");
    const std::size_t close = text.find(')', pos);
    require(close != std::string_view::npos, "unterminated cycle");
    auto body = detail::trim(text.substr(pos + 1, close - pos - 1));
    if (!body.empty()) {
      auto c = detail::parse_int_list(body);
      for (int x : c) max_point = std::max(max_point, x);
      cycles.push_back(std::move(c));
    }
    pos = close + 1;
  }
  if (degree <= 0) degree = max_point;
  require(max_point <= degree, "cycle point exceeds degree");
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace spx

template <>
struct std::hash<spx::Permutation> {
  std::size_t operator()(const spx::Permutation& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : g.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
