#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skewroos/field.hpp"

namespace skewroos {

/// Dense row-major matrix over a Field. Vectors are row vectors throughout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
/// v * M for a row vector v.
std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m);

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};
Echelon rref(Matrix m);
std::size_t rank(Matrix m);

/// Basis (as rows) of {x : M x^T = 0}; one vector per free column, with a 1
/// in that column, listed in increasing free-column order.
Matrix right_kernel(const Matrix& m);
/// Basis (as rows) of {v : v M = 0}.
Matrix left_kernel(const Matrix& m);

/// Coordinate expansion over the base field: each entry of `v` becomes a
/// column of `field.degree()` base codes (row i = coordinate i).
Matrix expand_columns(const Field& field, const FieldPtr& base, std::span<const Elem> v);

}  // namespace skewroos
