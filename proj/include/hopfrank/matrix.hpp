#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfrank/error.hpp"
#include "hopfrank/field.hpp"

namespace hopfrank {

using Vector = std::vector<scalar>;

/// Dense matrix over a prime field, row-major. Entries are always canonical.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(PrimeField f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(errc::dimension_mismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (auto v : row) m(i, j++) = f.from_int(v);
      ++i;
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(PrimeField f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(errc::dimension_mismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const PrimeField& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  scalar& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  scalar operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

  std::span<scalar> row(std::size_t i) noexcept { return {a_.data() + i * cols_, cols_}; }
  std::span<const scalar> row(std::size_t i) const noexcept { return {a_.data() + i * cols_, cols_}; }
  const std::vector<scalar>& data() const noexcept { return a_; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  bool is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](scalar v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(scalar c) const {
    Matrix m = *this;
    for (auto& v : m.a_) v = f_.mul(v, c);
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  Matrix& operator+=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = f_.add(a_[k], b.a_[k]);
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    check_same_shape(b);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = f_.sub(a_[k], b.a_[k]);
    return *this;
  }
  /// this += c * b
  void add_scaled(const Matrix& b, scalar c) {
    check_same_shape(b);
    if (c == 0) return;
    const std::uint32_t p = f_.p();
    for (std::size_t k = 0; k < a_.size(); ++k)
      a_[k] = static_cast<scalar>((a_[k] + std::uint64_t{c} * b.a_[k]) % p);
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(errc::dimension_mismatch, "product of " + a.shape() + " and " + b.shape());
    Matrix c(a.f_, a.rows_, b.cols_);
    const std::uint32_t p = a.f_.p();
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      unsigned pending = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) continue;
        const scalar* brow = b.a_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
        if (++pending == (1u << 20)) {
          for (auto& v : acc) v %= p;
          pending = 0;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<scalar>(acc[j] % p);
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) fail(errc::dimension_mismatch, "matrix-vector product");
    Vector out(a.rows_);
    const std::uint32_t p = a.f_.p();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::uint64_t s = 0;
      const scalar* r = a.a_.data() + i * a.cols_;
      for (std::size_t j = 0; j < a.cols_; ++j) s += std::uint64_t{r[j]} * v[j];
      out[i] = static_cast<scalar>(s % p);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      fail(errc::dimension_mismatch, "shapes " + shape() + " and " + b.shape());
  }

  PrimeField f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<scalar> a_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const PrimeField& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      scalar aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = f.mul(aij, b(r, c));
    }
  return k;
}

inline Matrix hstack(const std::vector<Matrix>& parts, PrimeField f, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows) fail(errc::dimension_mismatch, "hstack row count");
    cols += m.cols();
  }
  Matrix out(f, rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

inline Matrix vstack(const std::vector<Matrix>& parts, PrimeField f, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols) fail(errc::dimension_mismatch, "vstack column count");
    rows += m.rows();
  }
  Matrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

inline Matrix block_diagonal(const std::vector<Matrix>& parts, PrimeField f) {
  std::size_t r = 0, c = 0;
  for (const auto& m : parts) {
    r += m.rows();
    c += m.cols();
  }
  Matrix out(f, r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, c0, m);
    r0 += m.rows();
    c0 += m.cols();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector helpers

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](scalar x) { return x == 0; });
}

/// y += c * x
inline void axpy(const PrimeField& f, Vector& y, scalar c, const Vector& x) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

inline Vector scaled(const PrimeField& f, Vector v, scalar c) {
  for (auto& x : v) x = f.mul(x, c);
  return v;
}

inline Vector vadd(const PrimeField& f, Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

inline Vector vsub(const PrimeField& f, Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return a;
}

// ---------------------------------------------------------------------------
// Elimination kernel

namespace detail {

/// In-place Gauss-Jordan elimination on a row-major buffer with lazy modular
/// reduction: rows accumulate unreduced multiples of pivot rows and are
/// reduced only when their entries are inspected or when the accumulated
/// bound approaches 2^32. Pivots are the first nonzero entry in column order
/// among the remaining rows, so results are reproducible.
///
/// Only columns < `pivot_limit` may carry pivots. When `full` is false only
/// rows below the pivot are cleared (enough for rank). Returns the pivot
/// columns; the first `rank` rows of the buffer are the pivot rows in order,
/// fully reduced with a leading 1.
inline std::vector<std::size_t> eliminate(const PrimeField& f, std::vector<scalar>& buf, std::size_t rows,
                                          std::size_t cols, std::size_t pivot_limit, bool full) {
  const std::uint32_t p = f.p();
  const std::uint64_t step = std::uint64_t{p - 1} * (p - 1);
  const std::uint64_t budget = step == 0 ? std::numeric_limits<std::uint32_t>::max()
                                         : (std::numeric_limits<std::uint32_t>::max() - p) / step;
  std::vector<std::uint64_t> load(rows, 0);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;

  auto reduce_row = [&](std::size_t r) {
    scalar* row = buf.data() + r * cols;
    for (std::size_t j = 0; j < cols; ++j) row[j] %= p;
    load[r] = 0;
  };

  for (std::size_t c = 0; c < pivot_limit && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      scalar& v = buf[r * cols + c];
      v %= p;
      if (v != 0) {
        piv = r;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap_ranges(buf.begin() + piv * cols, buf.begin() + (piv + 1) * cols, buf.begin() + rank * cols);
      std::swap(load[piv], load[rank]);
    }
    reduce_row(rank);
    scalar* prow = buf.data() + rank * cols;
    const scalar lead_inv = f.inv(prow[c]);
    if (lead_inv != 1)
      for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], lead_inv);

    const std::size_t first = full ? 0 : rank + 1;
    for (std::size_t r = first; r < rows; ++r) {
      if (r == rank) continue;
      scalar* row = buf.data() + r * cols;
      const scalar m = row[c] % p;
      if (m == 0) {
        row[c] = 0;
        continue;
      }
      if (load[r] + 1 > budget) reduce_row(r);
      const scalar factor = p - m;
      for (std::size_t j = c; j < cols; ++j) row[j] += factor * prow[j];
      ++load[r];
      row[c] = 0;
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = 0; r < rows; ++r)
    if (load[r]) reduce_row(r);
  return pivots;
}

}  // namespace detail

inline std::size_t rank(const Matrix& m) {
  std::vector<scalar> buf = m.data();
  return detail::eliminate(m.field(), buf, m.rows(), m.cols(), m.cols(), false).size();
}

struct Rref {
  Matrix reduced;  // rank x cols, pivot rows with leading ones
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

inline Rref rref(const Matrix& m) {
  std::vector<scalar> buf = m.data();
  auto piv = detail::eliminate(m.field(), buf, m.rows(), m.cols(), m.cols(), true);
  Matrix r(m.field(), piv.size(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = buf[i * m.cols() + j];
  return {std::move(r), std::move(piv)};
}

/// Kernel basis as columns (cols x nullity), one vector per free column.
inline Matrix kernel(const Matrix& m) {
  const PrimeField& f = m.field();
  Rref r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : r.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(f, m.cols(), free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(free[t], t) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], t) = f.neg(r.reduced(i, free[t]));
  }
  return k;
}

/// Basis of the column space: the columns of m at its pivot positions.
inline Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

/// Solves m x = b for many right-hand sides. Keeps the transform T with
/// T m = rref(m), so each solve is a matrix-vector product.
class Solver {
 public:
  Solver() = default;
  explicit Solver(const Matrix& m) : f_(m.field()), rows_(m.rows()), cols_(m.cols()) {
    const std::size_t w = cols_ + rows_;
    std::vector<scalar> buf(rows_ * w, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) buf[i * w + j] = m(i, j);
      buf[i * w + cols_ + i] = 1;
    }
    pivots_ = detail::eliminate(f_, buf, rows_, w, cols_, true);
    transform_ = Matrix(f_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) transform_(i, j) = buf[i * w + cols_ + j];
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  std::optional<Vector> solve(const Vector& b) const {
    if (b.size() != rows_)
      fail(errc::dimension_mismatch, "rhs length " + std::to_string(b.size()) + ", expected " + std::to_string(rows_));
    Vector y = transform_ * b;
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
      if (y[i] != 0) return std::nullopt;
    Vector x(cols_, 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
  }

  Vector solve_or_throw(const Vector& b, errc code = errc::no_solution) const {
    auto x = solve(b);
    if (!x) fail(code, "linear system has no solution");
    return *x;
  }

  /// Column-by-column solve of m X = B.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.rows() != rows_) fail(errc::dimension_mismatch, "rhs rows");
    Matrix y = transform_ * b;
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (y(i, j) != 0) return std::nullopt;
    Matrix x(f_, cols_, b.cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) x(pivots_[i], j) = y(i, j);
    return x;
  }

 private:
  PrimeField f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> pivots_;
  Matrix transform_;
};

/// Everything the row reduction of one matrix yields.
struct RowReduction {
  std::size_t rank = 0;
  Matrix kernel_basis;  // columns
  Matrix image_basis;   // columns
  Solver solver;
};

inline RowReduction row_reduce(const Matrix& m) {
  RowReduction r;
  r.solver = Solver(m);
  r.rank = r.solver.rank();
  r.kernel_basis = kernel(m);
  r.image_basis = m.select_columns(r.solver.pivots());
  return r;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  Solver s(m);
  if (s.rank() != m.rows()) return std::nullopt;
  return s.solve(Matrix::identity(m.field(), m.rows()));
}

// ---------------------------------------------------------------------------
// Subspaces

/// Growing echelon basis of a subspace; supports membership tests and
/// coordinates relative to the vectors in insertion order.
class SubspaceBuilder {
 public:
  SubspaceBuilder(PrimeField f, std::size_t dim) : f_(f), dim_(dim) {}

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return dim_; }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  /// Reduces v against the echelon rows; returns the residue.
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
      scalar c = v[lead_[i]];
      if (c) axpy(f_, v, f_.neg(c), echelon_[i]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v if independent; returns whether it was added.
  bool add(const Vector& v) {
    if (v.size() != dim_) fail(errc::dimension_mismatch, "vector length");
    Vector r = reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && r[lead] == 0) ++lead;
    if (lead == dim_) return false;
    r = scaled(f_, std::move(r), f_.inv(r[lead]));
    for (auto& row : echelon_) {
      scalar c = row[lead];
      if (c) axpy(f_, row, f_.neg(c), r);
    }
    echelon_.push_back(std::move(r));
    lead_.push_back(lead);
    basis_.push_back(v);
    return true;
  }

  Matrix basis_matrix() const { return Matrix::from_columns(f_, dim_, basis_); }

 private:
  PrimeField f_;
  std::size_t dim_;
  std::vector<Vector> echelon_;
  std::vector<std::size_t> lead_;
  std::vector<Vector> basis_;
};

/// Quotient V / W of coordinate space V = F^n by the span of given vectors.
/// Pivots are taken at the highest coordinate index, so the surviving
/// coordinates (the representatives) are the lowest-index basis vectors not
/// eliminated; this makes quotients of monomial spaces read like normal forms.
class QuotientSpace {
 public:
  QuotientSpace(PrimeField f, std::size_t n, const std::vector<Vector>& relations) : f_(f), n_(n) {
    std::vector<scalar> buf(relations.size() * n, 0);
    for (std::size_t r = 0; r < relations.size(); ++r) {
      if (relations[r].size() != n) fail(errc::dimension_mismatch, "relation length");
      for (std::size_t j = 0; j < n; ++j) buf[r * n + j] = relations[r][n - 1 - j];
    }
    auto piv = detail::eliminate(f, buf, relations.size(), n, n, true);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::size_t orig = n - 1 - piv[i];
      is_pivot[orig] = 1;
      Vector row(n);
      for (std::size_t j = 0; j < n; ++j) row[n - 1 - j] = buf[i * n + j];
      rows_.push_back(std::move(row));
      pivot_.push_back(orig);
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) reps_.push_back(j);
    index_.assign(n, SIZE_MAX);
    for (std::size_t k = 0; k < reps_.size(); ++k) index_[reps_[k]] = k;

    projection_ = Matrix(f, reps_.size(), n);
    for (std::size_t k = 0; k < reps_.size(); ++k) projection_(k, reps_[k]) = 1;
    for (std::size_t i = 0; i < pivot_.size(); ++i)
      for (std::size_t k = 0; k < reps_.size(); ++k) projection_(k, pivot_[i]) = f.neg(rows_[i][reps_[k]]);
    section_ = Matrix(f, n, reps_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k) section_(reps_[k], k) = 1;
  }

  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t relation_rank() const noexcept { return pivot_.size(); }
  /// Ambient coordinates kept as representatives, ascending.
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  /// dim x n, maps a vector to its class.
  const Matrix& projection() const noexcept { return projection_; }
  /// n x dim, maps a class to its representative.
  const Matrix& section() const noexcept { return section_; }

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> index_;
  Matrix projection_, section_;
};

/// Basis (columns) of the intersection of two column spaces.
inline Matrix intersect_column_spaces(const Matrix& a, const Matrix& b) {
  const PrimeField& f = a.field();
  Matrix ab = hstack({a, b.scaled(f.neg(1))}, f, a.rows());
  Matrix k = kernel(ab);
  Matrix coeffs = k.block(0, 0, a.cols(), k.cols());
  return image_basis(a * coeffs);
}

}  // namespace hopfrank
