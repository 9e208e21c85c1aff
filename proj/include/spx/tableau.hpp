#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spx/errors.hpp"
#include "spx/partition.hpp"

namespace spx {

/// A bijective filling of a Young diagram by 1..n. Rows are stored top to
/// bottom; cells are addressed 1-based as (row, column) in the public API.
class Tableau {
 public:
  Tableau() = default;

  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    for (std::size_t i = 1; i < lens.size(); ++i)
      require(lens[i - 1] >= lens[i] && lens[i] >= 1, "tableau row lengths must form a partition");
    if (!lens.empty()) require(lens.back() >= 1, "tableau rows must be nonempty");
    shape_ = Partition(lens);
    const int n = shape_.n();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& r : rows_)
      for (int x : r) {
        require(x >= 1 && x <= n, "tableau entries must lie in 1..n");
        require(!seen[static_cast<std::size_t>(x)], "tableau entries must be distinct");
        seen[static_cast<std::size_t>(x)] = 1;
      }
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
  // 1-based cell access.
  int at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  }

  std::vector<int> column(int j) const {  // 0-based column index
    std::vector<int> c;
    for (const auto& r : rows_)
      if (static_cast<int>(r.size()) > j) c.push_back(r[static_cast<std::size_t>(j)]);
    return c;
  }

  // row_of()[x] = 0-based row containing entry x (index 0 unused).
  std::vector<int> row_of() const {
    std::vector<int> out(static_cast<std::size_t>(n()) + 1, -1);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (int x : rows_[i]) out[static_cast<std::size_t>(x)] = static_cast<int>(i);
    return out;
  }

  template <class F>
  Tableau relabel(F&& f) const {
    auto rows = rows_;
    for (auto& r : rows)
      for (int& x : r) x = f(x);
    return Tableau(std::move(rows));
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

struct TableauFlags {
  bool row_standard = false;
  bool column_standard = false;
  bool standard = false;
};

inline bool is_row_standard(const Tableau& t) {
  for (const auto& r : t.rows())
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

inline bool is_column_standard(const Tableau& t) {
  for (std::size_t i = 1; i < t.rows().size(); ++i)
    for (std::size_t j = 0; j < t.row(i).size(); ++j)
      if (t.row(i - 1)[j] > t.row(i)[j]) return false;
  return true;
}

inline TableauFlags classify_tableau(const Tableau& t) {
  TableauFlags f;
  f.row_standard = is_row_standard(t);
  f.column_standard = is_column_standard(t);
  f.standard = f.row_standard && f.column_standard;
  return f;
}

/// sh(t^{<=i}): number of entries <= i in each row.
inline Composition shape_leq(const Tableau& t, int i) {
  require(is_row_standard(t), "shape_leq needs a row-standard tableau");
  require(i >= 1 && i <= t.n(), "shape_leq: i out of range");
  std::vector<int> counts;
  for (const auto& r : t.rows())
    counts.push_back(static_cast<int>(std::count_if(r.begin(), r.end(), [i](int x) { return x <= i; })));
  return Composition(std::move(counts));
}

namespace detail {

// Partial sums of sh(t^{<=i}) for all i, computed in one pass: sums[i-1][r].
inline std::vector<std::vector<int>> shape_leq_table(const Tableau& t) {
  const auto row_of = t.row_of();
  const std::size_t rows = t.rows().size();
  std::vector<std::vector<int>> out;
  std::vector<int> counts(rows, 0);
  for (int i = 1; i <= t.n(); ++i) {
    ++counts[static_cast<std::size_t>(row_of[static_cast<std::size_t>(i)])];
    out.push_back(counts);
  }
  return out;
}

}  // namespace detail

/// s dominates t iff sh(s^{<=i}) dominates sh(t^{<=i}) for every i.
inline bool tableau_dominates(const Tableau& s, const Tableau& t) {
  require(s.shape() == t.shape(), "tableau_dominates: shape mismatch");
  require(is_row_standard(s) && is_row_standard(t), "tableau_dominates needs row-standard tableaux");
  const auto a = detail::shape_leq_table(s);
  const auto b = detail::shape_leq_table(t);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int sa = 0, sb = 0;
    for (std::size_t r = 0; r < a[i].size(); ++r) {
      sa += a[i][r];
      sb += b[i][r];
      if (sa < sb) return false;
    }
  }
  return true;
}

/// Sort each row increasingly.
inline Tableau row_straighten(const Tableau& u) {
  auto rows = u.rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  return Tableau(std::move(rows));
}

/// Sort each column increasingly. Returns the column-standard tableau u' and
/// the sign of the column permutation h with u' = u h.
inline std::pair<Tableau, int> column_standardize(const Tableau& u) {
  auto rows = u.rows();
  int sign = 1;
  for (int j = 0; j < u.shape()[0]; ++j) {
    auto col = u.column(j);
    for (std::size_t a = 0; a < col.size(); ++a)
      for (std::size_t b = a + 1; b < col.size(); ++b)
        if (col[a] > col[b]) sign = -sign;
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < col.size(); ++i) rows[i][static_cast<std::size_t>(j)] = col[i];
  }
  return {Tableau(std::move(rows)), sign};
}

/// The greatest tableau in the dominance order: row j holds
/// lambda_1 + ... + lambda_{j-1} + 1, ..., lambda_1 + ... + lambda_j.
inline Tableau greatest_tableau(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> r(static_cast<std::size_t>(len));
    std::iota(r.begin(), r.end(), next);
    next += len;
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

namespace detail {

// Key for the basis order: concatenation of sh(t^{<=1}), ..., sh(t^{<=n}).
inline std::vector<int> basis_order_key(const Tableau& t) {
  std::vector<int> key;
  for (const auto& row : shape_leq_table(t)) key.insert(key.end(), row.begin(), row.end());
  return key;
}

}  // namespace detail

/// Sort standard tableaux into the basis order: lexicographically descending
/// on the concatenated sh(t^{<=i}) sequence. This is a linear extension of
/// dominance with greater tableaux first.
inline void sort_basis_order(std::vector<Tableau>& ts) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  keyed.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) keyed.emplace_back(detail::basis_order_key(ts[i]), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Tableau> out;
  out.reserve(ts.size());
  for (const auto& [k, i] : keyed) out.push_back(std::move(ts[i]));
  ts = std::move(out);
}

/// All standard tableaux of the shape, in basis order.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  const int n = shape.n();
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<Tableau> out;
  std::function<void(int)> place = [&](int x) {
    if (x > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int len = static_cast<int>(rows[r].size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(x);
      place(x + 1);
      rows[r].pop_back();
    }
  };
  if (n == 0) return {Tableau()};
  place(1);
  sort_basis_order(out);
  return out;
}

/// All row-standard tableaux of the shape (one per tabloid), lexicographic on
/// the row-reading word.
inline std::vector<Tableau> row_standard_tableaux(const Partition& shape) {
  const int n = shape.n();
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  // Fill row by row, each row an increasing subset of the unused entries.
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int min_next) {
    if (r == rows.size()) {
      out.emplace_back(rows);
      return;
    }
    if (static_cast<int>(rows[r].size()) == shape[r]) {
      fill(r + 1, 1);
      return;
    }
    for (int x = min_next; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      rows[r].push_back(x);
      fill(r, x + 1);
      rows[r].pop_back();
      used[static_cast<std::size_t>(x)] = 0;
    }
  };
  if (n == 0) return {Tableau()};
  fill(0, 1);
  return out;
}

inline Tableau transpose(const Tableau& t) {
  std::vector<std::vector<int>> rows;
  for (int j = 0; j < t.shape()[0]; ++j) rows.push_back(t.column(j));
  return Tableau(std::move(rows));
}

/// All column-standard tableaux of the shape.
inline std::vector<Tableau> column_standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  for (const auto& t : row_standard_tableaux(shape.conjugate())) out.push_back(transpose(t));
  return out;
}

// Text format: rows separated by ';', entries by ',', e.g. "1,4,6,7;2,3,5;8".
inline std::string to_string(const Tableau& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < t.row(i).size(); ++j) os << (j ? "," : "") << t.row(i)[j];
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << to_string(t); }

inline Tableau parse_tableau(std::string_view text) {
  text = detail::trim(text);
  std::vector<std::vector<int>> rows;
  if (text.empty()) return Tableau();
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(';', start);
    rows.push_back(detail::parse_int_list(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return Tableau(std::move(rows));
}

}  // namespace spx
