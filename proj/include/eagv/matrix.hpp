#pragma once

#include "eagv/error.hpp"
#include "eagv/galois_field.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eagv {

/// Dense row-major matrix over GF(q). The field is passed to each operation.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Throws InvalidParameters on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Element>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw InvalidParameters("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                                " entries, expected " + std::to_string(cols));
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  static Matrix identity(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InvalidParameters("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  std::vector<std::vector<Element>> to_rows() const {
    std::vector<std::vector<Element>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  void check_entries(const Field& f) const {
    for (auto v : data_)
      if (!f.contains(v))
        throw InvalidParameters("entry " + std::to_string(v) + " not in [0," + std::to_string(f.q()) + ")");
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameters("matrix shape mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  return out;
}

inline Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidParameters("matrix shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.sub(a(i, j), b(i, j));
  return out;
}

/// Reduced row-echelon form: the nonzero rows only, with their pivot columns.
struct RowEchelon {
  Matrix basis;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with exact field arithmetic.
inline RowEchelon rref(const Field& f, Matrix m) {
  m.check_entries(f);
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(lead, j));
    const Element scale = f.inv(m(lead, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Element factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead, j)));
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix basis(0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.append_row(m.row(r));
  return {std::move(basis), std::move(pivots)};
}

inline std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

/// Reduces v against an echelon basis; returns the residual (zero iff v lies
/// in the row space).
inline std::vector<Element> reduce(const Field& f, const RowEchelon& e, std::span<const Element> v) {
  std::vector<Element> residual(v.begin(), v.end());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Element coef = residual[e.pivots[i]];
    if (coef == 0) continue;
    const auto row = e.basis.row(i);
    for (std::size_t j = 0; j < residual.size(); ++j)
      if (row[j] != 0) residual[j] = f.sub(residual[j], f.mul(coef, row[j]));
  }
  return residual;
}

inline bool in_row_space(const Field& f, const RowEchelon& e, std::span<const Element> v) {
  if (v.size() != e.basis.cols()) throw InvalidParameters("vector length mismatch");
  const auto residual = reduce(f, e, v);
  return std::all_of(residual.begin(), residual.end(), [](Element x) { return x == 0; });
}

/// Basis (as rows) of the right kernel {x : A x = 0}.
inline Matrix kernel(const Field& f, const Matrix& a) {
  const auto e = rref(f, a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.basis(i, free));
    out.append_row(x);
  }
  return out;
}

/// Row space equality by mutual membership.
inline bool same_row_space(const Field& f, const Matrix& a, const Matrix& b) {
  const auto ea = rref(f, a), eb = rref(f, b);
  if (ea.rank() != eb.rank()) return false;
  for (std::size_t r = 0; r < eb.basis.rows(); ++r)
    if (!in_row_space(f, ea, eb.basis.row(r))) return false;
  for (std::size_t r = 0; r < ea.basis.rows(); ++r)
    if (!in_row_space(f, eb, ea.basis.row(r))) return false;
  return true;
}

} // namespace eagv
