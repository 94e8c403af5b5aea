#include "homalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homalg/errors.hpp"

namespace homalg {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const { return homalg::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix power(const Matrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  for (unsigned i = 0; i < exponent; ++i) result = result * m;
  return result;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && sgn(m(r, c)) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead_row, j));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw InvalidArgument("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> in_span(const Matrix& rref_rows, std::span<const Rational> v) {
  if (v.size() != rref_rows.cols()) throw DimensionMismatch("vector length differs from row length");
  Vector coords(rref_rows.rows(), Rational(0));
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
    auto row = rref_rows.row(r);
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead == row.end()) continue;
    std::size_t p = static_cast<std::size_t>(lead - row.begin());
    Rational c = residual[p] / *lead;
    coords[r] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = p; j < row.size(); ++j) residual[j] -= c * row[j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

std::vector<std::size_t> quotient_basis(std::size_t ambient_dim, const Matrix& subspace_rref) {
  if (subspace_rref.rows() > 0 && subspace_rref.cols() != ambient_dim) {
    throw DimensionMismatch("subspace rows do not live in the ambient space");
  }
  std::vector<bool> pivot(ambient_dim, false);
  for (std::size_t r = 0; r < subspace_rref.rows(); ++r) {
    auto row = subspace_rref.row(r);
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead != row.end()) pivot[static_cast<std::size_t>(lead - row.begin())] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim, Rational(0));
  for (const auto& [i, x] : v) {
    if (i >= dim) throw DimensionMismatch("sparse index out of range");
    out[i] = x;
  }
  return out;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t dim) : EchelonBasis(dim, {}) {}

EchelonBasis::EchelonBasis(std::size_t dim, std::vector<std::size_t> priority)
    : dim_(dim), priority_(std::move(priority)), position_(dim), row_at_(dim, -1) {
  if (priority_.empty()) {
    priority_.resize(dim);
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
  }
  if (priority_.size() != dim) throw DimensionMismatch("priority order has the wrong length");
  std::vector<bool> seen(dim, false);
  for (std::size_t p = 0; p < dim; ++p) {
    std::size_t c = priority_[p];
    if (c >= dim || seen[c]) throw InvalidArgument("priority order is not a permutation");
    seen[c] = true;
    position_[c] = p;
  }
}

EchelonBasis::Row EchelonBasis::to_positions(const SparseVector& v) const {
  Row r;
  r.reserve(v.size());
  for (const auto& [c, x] : v) {
    if (c >= dim_) throw DimensionMismatch("vector index out of range");
    if (sgn(x) != 0) r.emplace_back(position_[c], x);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

SparseVector EchelonBasis::to_columns(const Row& r) const {
  SparseVector v;
  v.reserve(r.size());
  for (const auto& [p, x] : r) v.emplace_back(priority_[p], x);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

namespace {

using Workspace = std::map<std::size_t, Rational>;

void subtract_scaled(Workspace& work, const SparseVector& row, const Rational& factor) {
  for (const auto& [p, x] : row) {
    auto [it, inserted] = work.try_emplace(p, 0);
    it->second -= factor * x;
    if (sgn(it->second) == 0) work.erase(it);
  }
}

}  // namespace

bool EchelonBasis::insert(const SparseVector& v) {
  Row r = to_positions(v);
  Workspace work(r.begin(), r.end());
  while (!work.empty()) {
    auto it = work.begin();
    std::ptrdiff_t owner = row_at_[it->first];
    if (owner < 0) break;
    Rational factor = it->second;
    subtract_scaled(work, rows_[static_cast<std::size_t>(owner)], factor);
  }
  if (work.empty()) return false;
  Rational inv = 1 / work.begin()->second;
  Row fresh;
  fresh.reserve(work.size());
  for (auto& [p, x] : work) fresh.emplace_back(p, x * inv);
  row_at_[fresh.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(fresh));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const {
  Row r = to_positions(v);
  Workspace work(r.begin(), r.end());
  while (!work.empty()) {
    auto it = work.begin();
    std::ptrdiff_t owner = row_at_[it->first];
    if (owner < 0) return false;
    Rational factor = it->second;
    subtract_scaled(work, rows_[static_cast<std::size_t>(owner)], factor);
  }
  return true;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  Row r = to_positions(v);
  Workspace work(r.begin(), r.end());
  Row remainder;
  while (!work.empty()) {
    auto it = work.begin();
    std::ptrdiff_t owner = row_at_[it->first];
    if (owner < 0) {
      remainder.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    Rational factor = it->second;
    subtract_scaled(work, rows_[static_cast<std::size_t>(owner)], factor);
  }
  return to_columns(remainder);
}

SparseVector EchelonBasis::row(std::size_t i) const { return to_columns(rows_.at(i)); }

std::size_t EchelonBasis::pivot_column(std::size_t i) const { return priority_[rows_.at(i).front().first]; }

std::vector<SparseVector> EchelonBasis::rows_with_pivot_in(const std::vector<bool>& keep) const {
  if (keep.size() != dim_) throw DimensionMismatch("mask length differs from dimension");
  std::vector<SparseVector> out;
  for (const Row& r : rows_)
    if (keep[priority_[r.front().first]]) out.push_back(to_columns(r));
  return out;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  std::vector<const Row*> order;
  order.reserve(rows_.size());
  for (const Row& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const Row* a, const Row* b) { return a->front().first < b->front().first; });

  // Back substitution: clear each pivot position from every other row,
  // working from the lowest-priority pivot upwards.
  std::vector<Workspace> work;
  work.reserve(order.size());
  for (const Row* r : order) work.emplace_back(r->begin(), r->end());
  for (std::size_t i = order.size(); i-- > 0;) {
    std::size_t pivot = order[i]->front().first;
    SparseVector pivot_row(work[i].begin(), work[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      auto it = work[j].find(pivot);
      if (it == work[j].end()) continue;
      Rational factor = it->second;
      subtract_scaled(work[j], pivot_row, factor);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(work.size());
  for (const Workspace& w : work) out.push_back(to_columns(Row(w.begin(), w.end())));
  return out;
}

std::vector<SparseVector> intersect_coordinate_subspace(const std::vector<SparseVector>& rows,
                                                        std::size_t dim,
                                                        const std::vector<bool>& keep) {
  if (keep.size() != dim) throw DimensionMismatch("mask length differs from dimension");
  std::vector<std::size_t> priority;
  priority.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c)
    if (!keep[c]) priority.push_back(c);
  for (std::size_t c = 0; c < dim; ++c)
    if (keep[c]) priority.push_back(c);
  EchelonBasis basis(dim, std::move(priority));
  for (const SparseVector& r : rows) basis.insert(r);
  return basis.rows_with_pivot_in(keep);
}

}  // namespace homalg
