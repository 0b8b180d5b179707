#include "skewroos/linalg.hpp"

#include <utility>

#include "skewroos/error.hpp"

namespace skewroos {

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::InvalidInput, "linalg", "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (auto e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "linalg", "dimension mismatch in multiply");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  }
  return out;
}

std::vector<Elem> vec_mul(std::span<const Elem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::InvalidInput, "linalg", "dimension mismatch in vec_mul");
  const Field& f = *m.field();
  std::vector<Elem> out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
  }
  return out;
}

Echelon rref(Matrix m) {
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Elem factor = f.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(m.field(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(Matrix m) { return rref(std::move(m)).pivots.size(); }

Matrix right_kernel(const Matrix& m) {
  const Field& f = *m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    out.append_row(v);
  }
  return out;
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

Matrix expand_columns(const Field& field, const FieldPtr& base, std::span<const Elem> v) {
  Matrix out(base, field.degree(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = field.coords(v[i]);
    for (unsigned j = 0; j < field.degree(); ++j) out(j, i) = Elem{c[j]};
  }
  return out;
}

}  // namespace skewroos
