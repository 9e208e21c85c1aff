#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "spx/arith.hpp"
#include "spx/errors.hpp"

namespace spx {

/// Arithmetic in the prime field F_p (p < 2^16 so products fit in 32 bits).
struct Fp {
  std::uint32_t p;

  explicit Fp(std::uint32_t prime) : p(prime) {
    require(prime < 65536, "prime too large for the dense F_p engine");
    require_prime(prime);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const {
    require(a % p != 0, "inverse of zero in F_p");
    std::uint32_t r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t from_int(long long x) const {
    const long long m = x % static_cast<long long>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
  }
  // Representative in (-p/2, p/2].
  long long signed_rep(std::uint32_t a) const {
    return a > p / 2 ? static_cast<long long>(a) - static_cast<long long>(p) : static_cast<long long>(a);
  }
};

/// A vector over F_p.
class FpVector {
 public:
  FpVector() = default;
  FpVector(std::uint32_t p, std::size_t size) : p_(p), entries_(size, 0) {}
  FpVector(std::uint32_t p, std::vector<std::uint32_t> entries) : p_(p), entries_(std::move(entries)) {
    for (auto& x : entries_) require(x < p_, "vector entry not reduced mod p");
  }

  static FpVector unit(std::uint32_t p, std::size_t size, std::size_t k) {
    FpVector v(p, size);
    v.entries_[k] = 1;
    return v;
  }

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint32_t& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::span<const std::uint32_t> span() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t x) { return x == 0; });
  }

  FpVector& axpy(std::uint32_t c, const FpVector& x) {
    require(x.size() == size() && x.p_ == p_, "axpy: shape mismatch");
    const Fp f(p_);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = f.add(entries_[i], f.mul(c, x.entries_[i]));
    return *this;
  }

  friend FpVector operator+(FpVector a, const FpVector& b) { return a.axpy(1, b); }
  friend FpVector operator-(FpVector a, const FpVector& b) { return a.axpy(b.p_ - 1, b); }
  friend bool operator==(const FpVector&, const FpVector&) = default;

 private:
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> entries_;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static FpMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<FpVector>& rows) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, "from_rows: row length mismatch");
      std::copy(rows[i].entries().begin(), rows[i].entries().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const std::uint32_t> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<std::uint32_t> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  FpVector row(std::size_t i) const {
    return FpVector(p_, std::vector<std::uint32_t>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }
  std::vector<FpVector> row_vectors() const {
    std::vector<FpVector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  FpMatrix transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    require(a.cols_ == b.rows_ && a.p_ == b.p_, "matrix product: shape mismatch");
    FpMatrix c(a.p_, a.rows_, b.cols_);
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t x = a(i, k);
        if (!x) continue;
        const auto brow = b.row_span(k);
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
        if ((k & 0xff) == 0xff)
          for (auto& v : acc) v %= p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<std::uint32_t>(acc[j] % p);
    }
    return c;
  }

  friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_, "matrix sum: shape mismatch");
    const Fp f(a.p_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = f.add(a.data_[i], b.data_[i]);
    return a;
  }

  friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_, "matrix difference: shape mismatch");
    const Fp f(a.p_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = f.sub(a.data_[i], b.data_[i]);
    return a;
  }

  FpMatrix scaled(std::uint32_t c) const {
    FpMatrix r = *this;
    const Fp f(p_);
    for (auto& x : r.data_) x = f.mul(x, c);
    return r;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Row vector times matrix.
inline FpVector operator*(const FpVector& v, const FpMatrix& m) {
  require(v.size() == m.rows() && v.p() == m.p(), "vector-matrix product: shape mismatch");
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::uint64_t x = v[k];
    if (!x) continue;
    const auto row = m.row_span(k);
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += x * row[j];
    if ((k & 0xff) == 0xff)
      for (auto& a : acc) a %= m.p();
  }
  std::vector<std::uint32_t> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) out[j] = static_cast<std::uint32_t>(acc[j] % m.p());
  return FpVector(m.p(), std::move(out));
}

/// Bring `m` to reduced row echelon form in place, taking the first nonzero
/// entry in each column as pivot. Returns the pivot columns.
inline std::vector<std::size_t> rref(FpMatrix& m) {
  const Fp f(m.p());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row_span(piv);
      auto b = m.row_span(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const std::uint32_t inv = f.inv(m(r, c));
    auto prow = m.row_span(r);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const std::uint32_t factor = m(i, c);
      if (!factor) continue;
      auto row = m.row_span(i);
      const std::uint32_t nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (prow[j]) row[j] = f.add(row[j], f.mul(nf, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(FpMatrix m) { return rref(m).size(); }

/// Basis (as rows) of {x : A x = 0}.
inline FpMatrix nullspace(const FpMatrix& a) {
  FpMatrix m = a;
  const auto pivots = rref(m);
  const Fp f(a.p());
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.p(), a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return FpMatrix::from_rows(a.p(), a.cols(), basis);
}

struct Solution {
  FpVector particular;
  FpMatrix nullspace;
};

/// Solve A x = b. Returns nullopt when the system is inconsistent.
inline std::optional<Solution> solve(const FpMatrix& a, const FpVector& b) {
  require(b.size() == a.rows() && b.p() == a.p(), "solve: dimension mismatch");
  FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  FpVector x(a.p(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return Solution{std::move(x), nullspace(a)};
}

/// A subspace of F_p^dim held as a basis in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t ambient) : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

  static Subspace span(std::uint32_t p, std::size_t ambient, const std::vector<FpVector>& vectors) {
    FpMatrix m = FpMatrix::from_rows(p, ambient, vectors);
    return from_matrix(std::move(m));
  }

  static Subspace from_matrix(FpMatrix m) {
    Subspace s;
    s.p_ = m.p();
    s.ambient_ = m.cols();
    s.pivots_ = rref(m);
    FpMatrix b(m.p(), s.pivots_.size(), m.cols());
    for (std::size_t i = 0; i < s.pivots_.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace full(std::uint32_t p, std::size_t ambient) { return from_matrix(FpMatrix::identity(p, ambient)); }

  std::uint32_t p() const { return p_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpVector vector(std::size_t i) const { return basis_.row(i); }

  /// v minus its reduction against the echelon basis.
  FpVector reduce(FpVector v) const {
    require(v.size() == ambient_, "subspace: ambient dimension mismatch");
    const Fp f(p_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const std::uint32_t c = v[pivots_[i]];
      if (c) v.axpy(f.neg(c), basis_.row(i));
    }
    return v;
  }

  bool contains(const FpVector& v) const { return reduce(v).is_zero(); }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.p_ == b.p_ && a.basis_ == b.basis_;
  }

 private:
  std::uint32_t p_ = 2;
  std::size_t ambient_ = 0;
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient() && u.p() == v.p(), "subspace_sum: mismatch");
  auto rows = u.basis().row_vectors();
  auto more = v.basis().row_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(u.p(), u.ambient(), rows);
}

inline Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient() && u.p() == v.p(), "subspace_intersection: mismatch");
  // x in U with x in V: x = a B_U, and a B_U lies in V iff a B_U K = 0 where
  // the columns of K span the annihilator of V.
  const FpMatrix ann = nullspace(v.basis());  // rows y with B_V y = 0
  if (u.dim() == 0) return Subspace(u.p(), u.ambient());
  if (ann.rows() == 0) return u;
  const FpMatrix coeffs = nullspace((u.basis() * ann.transpose()).transpose());
  return Subspace::from_matrix(coeffs * u.basis());
}

/// The quotient W / U with coset representatives and a coordinate map.
class QuotientSpace {
 public:
  QuotientSpace(const Subspace& w, const Subspace& u) : w_(w), u_(u) {
    require(w.ambient() == u.ambient() && w.p() == u.p(), "subspace_quotient: mismatch");
    require(w.contains(u), "subspace_quotient: U is not contained in W");
    const Fp f(w.p());
    std::vector<FpVector> reps;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      FpVector v = u.reduce(w.vector(i));
      for (std::size_t k = 0; k < reps.size(); ++k) {
        const std::uint32_t c = v[rep_pivots_[k]];
        if (c) v.axpy(f.neg(c), reps[k]);
      }
      const auto lead = std::find_if(v.entries().begin(), v.entries().end(), [](std::uint32_t x) { return x != 0; });
      if (lead == v.entries().end()) continue;
      const std::size_t piv = static_cast<std::size_t>(lead - v.entries().begin());
      const std::uint32_t inv = f.inv(v[piv]);
      FpVector n(w.p(), v.size());
      n.axpy(inv, v);
      for (auto& r : reps)
        if (r[piv]) r.axpy(f.neg(r[piv]), n);
      reps.push_back(std::move(n));
      rep_pivots_.push_back(piv);
    }
    reps_ = FpMatrix::from_rows(w.p(), w.ambient(), reps);
  }

  std::size_t dim() const { return reps_.rows(); }
  const FpMatrix& representatives() const { return reps_; }
  const Subspace& numerator() const { return w_; }
  const Subspace& denominator() const { return u_; }

  /// Coordinates of w + U in the basis of representatives.
  FpVector project(const FpVector& v) const {
    FpVector r = u_.reduce(v);
    const Fp f(w_.p());
    FpVector coords(w_.p(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      const std::uint32_t c = r[rep_pivots_[k]];
      coords[k] = c;
      if (c) r.axpy(f.neg(c), reps_.row(k));
    }
    if (!r.is_zero()) throw invalid_input("project: vector does not lie in the numerator subspace");
    return coords;
  }

  FpVector lift(const FpVector& coords) const { return coords * reps_; }

 private:
  Subspace w_, u_;
  FpMatrix reps_;
  std::vector<std::size_t> rep_pivots_;
};

inline QuotientSpace subspace_quotient(const Subspace& w, const Subspace& u) { return QuotientSpace(w, u); }

/// Matrices X (flattened row-major, dim_a x dim_b) with A_k X = X B_k for all k.
inline Subspace intertwiners(const std::vector<FpMatrix>& as, const std::vector<FpMatrix>& bs, std::uint32_t p,
                             std::size_t da, std::size_t db) {
  require(as.size() == bs.size(), "intertwiners: generator count mismatch");
  require_prime(p);
  const std::size_t unknowns = da * db;
  // Impose one generator at a time, restricting to the solution space so far.
  FpMatrix basis = FpMatrix::identity(p, unknowns);
  for (std::size_t g = 0; g < as.size(); ++g) {
    const FpMatrix& a = as[g];
    const FpMatrix& b = bs[g];
    require(a.rows() == da && a.cols() == da && b.rows() == db && b.cols() == db, "intertwiners: bad matrix size");
    // Linear map X -> A X - X B applied to each current basis element.
    FpMatrix images(p, basis.rows(), unknowns);
    for (std::size_t k = 0; k < basis.rows(); ++k) {
      FpMatrix x(p, da, db);
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) x(i, j) = basis(k, i * db + j);
      const FpMatrix d = a * x - x * b;
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) images(k, i * db + j) = d(i, j);
    }
    // Combinations c with c * images = 0.
    const FpMatrix kernel = nullspace(images.transpose());
    basis = kernel * basis;
    if (basis.rows() == 0) break;
  }
  return Subspace::from_matrix(std::move(basis));
}

/// {X : X A = A X for every A}.
inline Subspace commutant(const std::vector<FpMatrix>& mats, std::uint32_t p, std::size_t d) {
  for (const auto& m : mats) require(m.rows() == d && m.cols() == d, "commutant: matrices must be square of equal size");
  return intertwiners(mats, mats, p, d, d);
}

inline FpMatrix unflatten(const FpVector& v, std::size_t rows, std::size_t cols) {
  FpMatrix m(v.p(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

/// Structured text: header "p rows cols" then one line of residues per row.
inline std::string export_matrix(const FpMatrix& m) {
  std::ostringstream os;
  os << m.p() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

inline FpMatrix import_matrix(const std::string& text) {
  std::istringstream is(text);
  std::uint32_t p = 0;
  std::size_t r = 0, c = 0;
  require(static_cast<bool>(is >> p >> r >> c), "import_matrix: bad header");
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      require(static_cast<bool>(is >> m(i, j)) && m(i, j) < p, "import_matrix: bad entry");
    }
  return m;
}

}  // namespace spx
