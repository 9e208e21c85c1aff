#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "spx/arith.hpp"
#include "spx/errors.hpp"
#include "spx/partition.hpp"

namespace spx {

/// Hook lengths of every cell of a Young diagram.
class HookData {
 public:
  explicit HookData(Partition shape) : shape_(std::move(shape)) {
    for (std::size_t i = 0; i < shape_.length(); ++i) {
      std::vector<int> row;
      for (int j = 1; j <= shape_[i]; ++j) {
        const int arm = shape_[i] - j;
        const int leg = shape_.column_length(j - 1) - static_cast<int>(i) - 1;
        row.push_back(arm + leg + 1);
      }
      table_.push_back(std::move(row));
    }
  }

  const Partition& shape() const { return shape_; }
  // 1-based (row, column).
  int hook_length(int row, int col) const {
    return table_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::vector<int> all_lengths() const {
    std::vector<int> out;
    for (const auto& r : table_) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> table_;
};

/// n! / (product of hook lengths).
inline std::uint64_t hook_dimension(const Partition& shape) {
  const HookData hooks(shape);
  uint128 num = factorial128(shape.n());
  uint128 den = 1;
  for (const auto& r : hooks.table())
    for (int h : r) den *= static_cast<uint128>(h);
  const uint128 d = num / den;
  if (d > std::numeric_limits<std::uint64_t>::max()) throw resource_error("hook dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(d);
}

/// Sum of nu_p over all hook lengths.
inline int hook_product_valuation(const Partition& shape, int p) {
  int v = 0;
  for (const auto& r : HookData(shape).table())
    for (int h : r) v += nu_p(static_cast<std::uint64_t>(h), p);
  return v;
}

/// Remove the rim hook whose corner cell is (row, col), 1-based.
inline Partition remove_rim_hook(const Partition& shape, int row, int col) {
  require(row >= 1 && static_cast<std::size_t>(row) <= shape.length() && col >= 1 && col <= shape[row - 1],
          "remove_rim_hook: cell outside diagram");
  const int leg = shape.column_length(col - 1) - row;
  std::vector<int> parts = shape.parts();
  const auto i0 = static_cast<std::size_t>(row - 1);
  const auto last = i0 + static_cast<std::size_t>(leg);
  for (std::size_t r = i0; r < last; ++r) parts[r] = shape[r + 1] - 1;
  parts[last] = col - 1;
  return Partition(std::move(parts));
}

/// Cells (1-based) whose hook has length exactly p, i.e. the removable rim p-hooks.
inline std::vector<std::pair<int, int>> removable_rim_hooks(const Partition& shape, int p) {
  std::vector<std::pair<int, int>> out;
  const HookData hooks(shape);
  for (std::size_t i = 0; i < shape.length(); ++i)
    for (int j = 1; j <= shape[i]; ++j)
      if (hooks.hook_length(static_cast<int>(i) + 1, j) == p) out.emplace_back(static_cast<int>(i) + 1, j);
  return out;
}

inline bool is_p_core(const Partition& shape, int p) {
  require_prime(p);
  return removable_rim_hooks(shape, p).empty();
}

/// Nakayama label of a partition: its p-core, weight and b = nu_p((wp)!).
struct BlockLabel {
  int p = 0;
  Partition core;
  int weight = 0;
  int defect_exponent = 0;

  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// Strip rim p-hooks until none remain. `choose(k)` picks which of the k
/// currently removable hooks to take; any choice gives the same core.
template <class Chooser>
BlockLabel strip_p_hooks(const Partition& shape, int p, Chooser&& choose) {
  require_prime(p);
  Partition cur = shape;
  int w = 0;
  while (true) {
    const auto cells = removable_rim_hooks(cur, p);
    if (cells.empty()) break;
    const std::size_t k = choose(cells.size());
    cur = remove_rim_hook(cur, cells[k].first, cells[k].second);
    ++w;
  }
  return BlockLabel{p, cur, w, nu_p_factorial(static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(p), p)};
}

inline BlockLabel p_core_and_weight(const Partition& shape, int p) {
  return strip_p_hooks(shape, p, [](std::size_t) { return std::size_t{0}; });
}

namespace detail {

// First-column hook lengths with the bead count rounded up to a multiple of p.
inline std::vector<int> beta_numbers(const Partition& shape, int p) {
  int beads = static_cast<int>(shape.length());
  beads = ((beads + p - 1) / p) * p;
  std::vector<int> beta;
  for (int i = 0; i < beads; ++i) beta.push_back(shape[static_cast<std::size_t>(i)] + beads - 1 - i);
  return beta;  // strictly decreasing
}

inline Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  const int k = static_cast<int>(beta.size());
  for (int i = 0; i < k; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (k - 1 - i));
  return Partition(std::move(parts));
}

}  // namespace detail

/// p-quotient read off the abacus with bead count a multiple of p. Component
/// i collects the beads on runner i.
inline std::vector<Partition> p_quotient(const Partition& shape, int p) {
  require_prime(p);
  const auto beta = detail::beta_numbers(shape, p);
  std::vector<std::vector<int>> runners(static_cast<std::size_t>(p));
  for (int b : beta) runners[static_cast<std::size_t>(b % p)].push_back(b / p);
  std::vector<Partition> out;
  for (auto& r : runners) out.push_back(detail::from_beta(r));
  return out;
}

/// Core and weight by sliding beads up each abacus runner.
inline BlockLabel abacus_core_and_weight(const Partition& shape, int p) {
  require_prime(p);
  const auto beta = detail::beta_numbers(shape, p);
  std::vector<std::vector<int>> runners(static_cast<std::size_t>(p));
  for (int b : beta) runners[static_cast<std::size_t>(b % p)].push_back(b / p);
  int w = 0;
  std::vector<int> slid;
  for (int r = 0; r < p; ++r) {
    auto& levels = runners[static_cast<std::size_t>(r)];
    std::sort(levels.begin(), levels.end());
    for (std::size_t k = 0; k < levels.size(); ++k) {
      w += levels[k] - static_cast<int>(k);
      slid.push_back(static_cast<int>(k) * p + r);
    }
  }
  return BlockLabel{p, detail::from_beta(slid), w,
                    nu_p_factorial(static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(p), p)};
}

/// gamma + wp = (gamma_1 + wp, gamma_2, ..., gamma_k).
inline Partition initial_partition(const Partition& core, int w, int p) {
  require_prime(p);
  require(w >= 0, "weight must be nonnegative");
  require(is_p_core(core, p), "initial_partition: " + to_string(core) + " is not a p-core");
  std::vector<int> parts = core.parts();
  if (parts.empty()) {
    if (w > 0) parts.push_back(w * p);
  } else {
    parts[0] += w * p;
  }
  return Partition(std::move(parts));
}

/// Height of the ordinary character labelled by `shape`, taking the defect
/// exponent of its block to be nu_p((wp)!).
inline int character_height(const Partition& shape, int p) {
  const BlockLabel label = p_core_and_weight(shape, p);
  const int a = nu_p_factorial(static_cast<std::uint64_t>(shape.n()), p);
  return nu_p(hook_dimension(shape), p) - (a - label.defect_exponent);
}

/// The same height through the p-quotient: nu_p of the multinomial
/// (w; c_0, ..., c_{p-1}) plus the nu_p of the component dimensions.
inline int character_height_from_quotient(const Partition& shape, int p) {
  const auto quotient = p_quotient(shape, p);
  std::vector<int> sizes;
  int h = 0;
  for (const auto& mu : quotient) {
    sizes.push_back(mu.n());
    h += nu_p(hook_dimension(mu), p);
  }
  return h + nu_p_multinomial(sizes, p);
}

}  // namespace spx
