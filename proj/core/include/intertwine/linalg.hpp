#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "intertwine/field.hpp"
#include "intertwine/rational.hpp"

namespace intertwine {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix multiply(const FieldSpec& field, const Matrix& a, const Matrix& b);
Vector apply(const FieldSpec& field, const Matrix& a, std::span<const Rational> x);

struct EchelonForm {
  Matrix reduced;                          // reduced row-echelon form
  std::vector<std::size_t> pivot_columns;  // increasing
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination with leftmost pivots; deterministic.
EchelonForm row_reduce(const FieldSpec& field, Matrix m);

std::size_t rank(const FieldSpec& field, const Matrix& m);

/// Basis of {x : m x = 0}: one vector per free column, free entry 1.
std::vector<Vector> null_space(const FieldSpec& field, const Matrix& m);

/// Some solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const FieldSpec& field, const Matrix& m, std::span<const Rational> b);

/// Precomputed elimination for repeated solves against one matrix.
class LinearSolver {
 public:
  LinearSolver(const FieldSpec& field, const Matrix& m);

  /// Solution with free variables zero, or nullopt if b is not in the column space.
  std::optional<Vector> solve(std::span<const Rational> b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  FieldSpec field_;
  std::size_t cols_;
  Matrix transform_;  // transform_ * m is in reduced row-echelon form
  std::vector<std::size_t> pivots_;
};

bool is_zero(std::span<const Rational> v);

}  // namespace intertwine
