#include "intertwine/linalg.hpp"

#include <cassert>

#include "intertwine/error.hpp"

namespace intertwine {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const Rational& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const Rational& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Matrix multiply(const FieldSpec& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Vector apply(const FieldSpec& field, const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DomainError("matrix/vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0 || x[k] == 0) continue;
      out[i] = field.add(out[i], field.mul(a(i, k), x[k]));
    }
  }
  return out;
}

namespace {

// Eliminates `m` in place, mirroring every row operation on `companion`
// (which may have zero columns). Returns pivot columns.
std::vector<std::size_t> eliminate(const FieldSpec& field, Matrix& m, Matrix& companion) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  const bool track = companion.cols() > 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
      if (track) {
        for (std::size_t c = 0; c < companion.cols(); ++c) std::swap(companion(found, c), companion(pivot_row, c));
      }
    }
    Rational scale = field.inv(m(pivot_row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(pivot_row, c) != 0) m(pivot_row, c) = field.mul(m(pivot_row, c), scale);
    }
    if (track) {
      for (std::size_t c = 0; c < companion.cols(); ++c) {
        if (companion(pivot_row, c) != 0) companion(pivot_row, c) = field.mul(companion(pivot_row, c), scale);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(pivot_row, c) == 0) continue;
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(pivot_row, c)));
      }
      if (track) {
        for (std::size_t c = 0; c < companion.cols(); ++c) {
          if (companion(pivot_row, c) == 0) continue;
          companion(r, c) = field.sub(companion(r, c), field.mul(factor, companion(pivot_row, c)));
        }
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

EchelonForm row_reduce(const FieldSpec& field, Matrix m) {
  Matrix none(m.rows(), 0);
  std::vector<std::size_t> pivots = eliminate(field, m, none);
  return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const FieldSpec& field, const Matrix& m) { return row_reduce(field, m).rank(); }

std::vector<Vector> null_space(const FieldSpec& field, const Matrix& m) {
  EchelonForm ef = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) {
      const Rational& entry = ef.reduced(i, free);
      if (entry != 0) v[ef.pivot_columns[i]] = field.neg(entry);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const FieldSpec& field, const Matrix& m, std::span<const Rational> b) {
  return LinearSolver(field, m).solve(b);
}

LinearSolver::LinearSolver(const FieldSpec& field, const Matrix& m)
    : field_(field), cols_(m.cols()), transform_(Matrix::identity(m.rows())) {
  Matrix work = m;
  pivots_ = eliminate(field_, work, transform_);
}

std::optional<Vector> LinearSolver::solve(std::span<const Rational> b) const {
  if (b.size() != transform_.cols()) throw DomainError("right-hand side length mismatch");
  Vector y = apply(field_, transform_, b);
  for (std::size_t r = pivots_.size(); r < y.size(); ++r) {
    if (y[r] != 0) return std::nullopt;
  }
  Vector x(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  return x;
}

}  // namespace intertwine
