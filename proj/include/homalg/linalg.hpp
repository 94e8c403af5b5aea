#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  /// Matrix-vector product M·v.
  Vector apply(std::span<const Rational> v) const;

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix power(const Matrix& m, unsigned exponent);

/// Throws InvalidArgument when the matrix is singular or not square.
Matrix inverse(const Matrix& m);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. Pivots are the first nonzero entry in column
/// order; zero rows are kept at the bottom so the shape is preserved.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Coordinates c with c·rows = v, where `rref_rows` is already reduced.
/// Zero rows of `rref_rows` receive coordinate 0.
std::optional<Vector> in_span(const Matrix& rref_rows, std::span<const Rational> v);

/// Non-pivot columns of a subspace given in RREF: indices of the standard
/// coset representatives of the quotient.
std::vector<std::size_t> quotient_basis(std::size_t ambient_dim, const Matrix& subspace_rref);

/// Sparse vector: (index, value) pairs, indices strictly increasing, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(std::span<const Rational> dense);
Vector to_dense(const SparseVector& v, std::size_t dim);

/// Incrementally maintained row echelon basis of a subspace of Q^dim.
///
/// Columns are eliminated in a caller-chosen priority order: the pivot of a
/// row is its nonzero entry of highest priority. Rows are never modified
/// after insertion, so a row whose pivot has lower priority than every
/// column of a set C has all of its C-entries equal to zero. That makes the
/// intersection of the span with a coordinate subspace readable directly
/// from the pivots when the excluded columns are ranked first.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim);
  /// priority[r] is the column ranked r-th (0 = eliminated first).
  EchelonBasis(std::size_t dim, std::vector<std::size_t> priority);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v to the spanning set. Returns false when v was already in the span.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  /// Remainder of v after full reduction against the basis.
  SparseVector reduce(const SparseVector& v) const;

  /// Basis rows in column coordinates; each row's pivot coefficient is 1.
  SparseVector row(std::size_t i) const;
  std::size_t pivot_column(std::size_t i) const;

  /// Rows whose pivot column is kept by `keep`. When every dropped column
  /// outranks every kept column, these rows span span ∩ {v : v_j = 0 for
  /// dropped j}.
  std::vector<SparseVector> rows_with_pivot_in(const std::vector<bool>& keep) const;

  /// Fully reduced echelon rows, ordered by pivot priority.
  std::vector<SparseVector> reduced_rows() const;

 private:
  using Row = SparseVector;  // positions in priority order
  Row to_positions(const SparseVector& v) const;
  SparseVector to_columns(const Row& r) const;

  std::size_t dim_;
  std::vector<std::size_t> priority_;  // position -> column
  std::vector<std::size_t> position_;  // column -> position
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> row_at_;  // position -> row index or -1
};

/// Basis of span(rows) ∩ {v : v_j = 0 whenever keep[j] is false}.
std::vector<SparseVector> intersect_coordinate_subspace(const std::vector<SparseVector>& rows,
                                                        std::size_t dim,
                                                        const std::vector<bool>& keep);

}  // namespace homalg
