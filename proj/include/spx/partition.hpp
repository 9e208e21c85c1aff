#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spx/errors.hpp"

namespace spx {

/// A finite sequence of nonnegative integers. Dominance is defined on these.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_) require(x >= 0, "composition parts must be nonnegative");
    for (int x : parts_) n_ += x;
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Weakly decreasing positive parts. The empty sequence is the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 1, "partition parts must be positive");
      require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
      n_ += parts_[i];
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  // Row length, 0 past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Length of column j (0-based).
  int column_length(int j) const {
    int c = 0;
    for (int r : parts_)
      if (r > j) ++c;
    return c;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < (*this)[0]; ++j) c.push_back(column_length(j));
    return Partition(std::move(c));
  }

  bool has_distinct_parts() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  }

  Composition as_composition() const { return Composition(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// a dominates b: every partial sum of a is at least that of b.
inline bool dominates(const Composition& a, const Composition& b) {
  require(a.n() == b.n(), "dominance needs compositions of the same n");
  const std::size_t len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (std::size_t r = 0; r < len; ++r) {
    sa += a[r];
    sb += b[r];
    if (sa < sb) return false;
  }
  return true;
}

inline bool dominates(const Partition& a, const Partition& b) {
  return dominates(a.as_composition(), b.as_composition());
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All compositions of n with exactly len parts (parts may be 0).
inline std::vector<Composition> compositions_of(int n, int len) {
  std::vector<Composition> out;
  std::vector<int> cur(static_cast<std::size_t>(len), 0);
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == len - 1) {
      cur[static_cast<std::size_t>(pos)] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, rest - k);
    }
  };
  if (len == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(0, n);
  return out;
}

// Text format: "6,5,2"; the empty partition is "-".
inline std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
  return os.str();
}

inline std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.length(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  require(!s.empty(), "expected an integer");
  int v = 0;
  for (char ch : s) {
    require(ch >= '0' && ch <= '9', "bad integer '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
    require(v <= 1000000, "integer out of range");
  }
  return v;
}

inline std::vector<int> parse_int_list(std::string_view s, char sep = ',') {
  std::vector<int> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(parse_int(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw invalid_input("empty partition text (use \"-\" for the empty partition)");
  if (text == "-") return Partition{};
  return Partition(detail::parse_int_list(text));
}

}  // namespace spx

template <>
struct std::hash<spx::Partition> {
  std::size_t operator()(const spx::Partition& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.parts()) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};
