#pragma once

/// Dense matrices over GF(q) with canonical echelon forms.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "flagforge/error.hpp"
#include "flagforge/galois.hpp"

namespace flagforge {

class Matrix {
 public:
  Matrix() = default;

  /// rows x cols zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw Error(ErrorKind::FieldMismatch, "matrix needs a field");
  }

  /// Takes ownership of a row-major grid; every entry must lie in the field.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (!field_) throw Error(ErrorKind::FieldMismatch, "matrix needs a field");
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    }
    for (Element x : data_) {
      if (!field_->contains(x)) throw Error(ErrorKind::FieldMismatch, "entry outside field");
    }
  }

  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Element>> rows) {
    std::vector<std::vector<Element>> grid;
    for (const auto& r : rows) grid.emplace_back(r);
    return from_rows(std::move(field), grid);
  }

  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Element> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v) {
    if (!field_->contains(v)) throw Error(ErrorKind::FieldMismatch, "entry outside field");
    data_[r * cols_ + c] = v;
  }

  std::span<const Element> row(std::size_t r) const {
    return std::span<const Element>(data_).subspan(r * cols_, cols_);
  }
  std::span<const Element> data() const noexcept { return data_; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Element x) { return x == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           same_field(a.field_, b.field_);
  }

  /// Lexicographic order on (rows, cols, entries); for deterministic sorting.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  Matrix operator+(const Matrix& other) const { return combine(other, false); }
  Matrix operator-(const Matrix& other) const { return combine(other, true); }

  Matrix scaled(Element s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = field_->mul(x, s);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    require_same_field(other);
    if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "product shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    const Field& k = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t l = 0; l < cols_; ++l) {
        const Element a = at(i, l);
        if (a == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out.data_[i * out.cols_ + j] = k.add(out.data_[i * out.cols_ + j], k.mul(a, other.at(l, j)));
        }
      }
    }
    return out;
  }

  Matrix reversed_columns() const {
    Matrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::reverse(out.data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   out.data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    return out;
  }

  /// Keeps the listed columns in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] >= cols_) throw Error(ErrorKind::DimensionMismatch, "column out of range");
        out.data_[r * columns.size() + j] = at(r, columns[j]);
      }
    }
    return out;
  }

  void require_same_field(const Matrix& other) const {
    if (!same_field(field_, other.field_)) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
  }

 private:
  friend struct MatrixAccess;

  Matrix combine(const Matrix& other, bool subtract) const {
    require_same_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "shape mismatch");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = subtract ? field_->sub(data_[i], other.data_[i]) : field_->add(data_[i], other.data_[i]);
    }
    return out;
  }

  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Row-operation access used by elimination; keeps Matrix's public surface value-like.
struct MatrixAccess {
  static std::vector<Element>& data(Matrix& m) { return m.data_; }
};

struct EchelonResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form with zero rows dropped.
inline EchelonResult rref(const Matrix& input) {
  Matrix m = input;
  auto& d = MatrixAccess::data(m);
  const Field& k = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && d[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row) {
      std::swap_ranges(d.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       d.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       d.begin() + static_cast<std::ptrdiff_t>(lead_row * cols));
    }
    const Element scale = k.inv(d[lead_row * cols + c]);
    for (std::size_t j = c; j < cols; ++j) d[lead_row * cols + j] = k.mul(d[lead_row * cols + j], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row) continue;
      const Element factor = d[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        d[r * cols + j] = k.sub(d[r * cols + j], k.mul(factor, d[lead_row * cols + j]));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  std::vector<Element> kept(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(lead_row * cols));
  return {Matrix(m.field(), lead_row, cols, std::move(kept)), std::move(pivots)};
}

/// Inverse reduced row echelon form: column reversal conjugating rref. Pivots
/// are reported in original column coordinates, one per row (so decreasing).
inline EchelonResult inv_rref(const Matrix& input) {
  EchelonResult flipped = rref(input.reversed_columns());
  for (auto& p : flipped.pivots) p = input.cols() - 1 - p;
  return {flipped.matrix.reversed_columns(), std::move(flipped.pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Rows of `top` followed by rows of `bottom`.
inline Matrix stack(const Matrix& top, const Matrix& bottom) {
  top.require_same_field(bottom);
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "stack needs equal column counts");
  std::vector<Element> data(top.data().begin(), top.data().end());
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

/// The top j x cols submatrix.
inline Matrix top_rows(const Matrix& m, std::size_t j) {
  if (j < 1 || j > m.rows()) throw Error(ErrorKind::DimensionMismatch, "top_rows index out of range");
  std::vector<Element> data(m.data().begin(), m.data().begin() + static_cast<std::ptrdiff_t>(j * m.cols()));
  return Matrix(m.field(), j, m.cols(), std::move(data));
}

/// Rows [begin, begin + count); count may be zero.
inline Matrix row_slice(const Matrix& m, std::size_t begin, std::size_t count) {
  if (begin + count > m.rows()) throw Error(ErrorKind::DimensionMismatch, "row slice out of range");
  const auto first = m.data().begin() + static_cast<std::ptrdiff_t>(begin * m.cols());
  std::vector<Element> data(first, first + static_cast<std::ptrdiff_t>(count * m.cols()));
  return Matrix(m.field(), count, m.cols(), std::move(data));
}

/// Concatenates a grid of blocks. Blocks in a layout row share a height and
/// blocks in a layout column share a width; empty (0-row or 0-col) blocks are
/// allowed and must still agree.
inline Matrix block_assemble(const std::vector<std::vector<Matrix>>& layout) {
  if (layout.empty() || layout.front().empty()) throw Error(ErrorKind::DimensionMismatch, "empty layout");
  const std::size_t block_cols = layout.front().size();
  const FieldPtr& field = layout.front().front().field();
  std::vector<std::size_t> widths(block_cols);
  for (std::size_t j = 0; j < block_cols; ++j) widths[j] = layout.front()[j].cols();
  std::size_t total_rows = 0;
  for (const auto& brow : layout) {
    if (brow.size() != block_cols) throw Error(ErrorKind::DimensionMismatch, "ragged block layout");
    const std::size_t h = brow.front().rows();
    for (std::size_t j = 0; j < block_cols; ++j) {
      if (!same_field(brow[j].field(), field)) throw Error(ErrorKind::FieldMismatch, "blocks over different fields");
      if (brow[j].rows() != h) throw Error(ErrorKind::DimensionMismatch, "block heights disagree within a row");
      if (brow[j].cols() != widths[j]) throw Error(ErrorKind::DimensionMismatch, "block widths disagree within a column");
    }
    total_rows += h;
  }
  std::size_t total_cols = 0;
  for (std::size_t w : widths) total_cols += w;
  Matrix out(field, total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& brow : layout) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < block_cols; ++j) {
      const Matrix& b = brow[j];
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b.at(r, c));
      }
      c0 += widths[j];
    }
    r0 += brow.front().rows();
  }
  return out;
}

}  // namespace flagforge
