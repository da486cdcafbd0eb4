#pragma once

/// Square Gabidulin codes and rank-distance utilities.
///
/// A codeword is the GF(q)-linear map x -> sum_j a_j x^{q^j} on GF(q^m),
/// written as an m x m matrix M over GF(q) acting on row vectors: row i holds
/// the coordinates of the image of alpha^i in the polynomial basis
/// (1, alpha, ..., alpha^{m-1}).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagforge/error.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/matrix.hpp"

namespace flagforge {

inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 20;

inline std::size_t rank_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "rank distance needs equal shapes");
  }
  return rank(a - b);
}

class MrdCode {
 public:
  MrdCode(FieldPtr field, std::size_t m, std::size_t delta);

  const FieldPtr& field() const noexcept { return field_; }
  /// GF(q^m) over GF(q).
  const FieldPtr& extension() const noexcept { return extension_; }
  std::size_t side() const noexcept { return m_; }
  std::size_t delta() const noexcept { return delta_; }
  /// Dimension over GF(q): m(m - delta + 1).
  std::size_t dimension() const noexcept { return m_ * (m_ - delta_ + 1); }
  /// Number of linearized coefficients a_0..a_{m-delta}.
  std::size_t coefficient_count() const noexcept { return m_ - delta_ + 1; }

  /// q^dimension, or 0 if that exceeds 2^64.
  std::uint64_t size() const noexcept {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (out > UINT64_MAX / field_->order()) return 0;
      out *= field_->order();
    }
    return out;
  }

  /// Codeword for coefficients (a_0, ..., a_{m-delta}) in GF(q^m).
  Matrix codeword(std::span<const Element> coefficients) const {
    if (coefficients.size() != coefficient_count()) {
      throw Error(ErrorKind::DimensionMismatch, "wrong number of linearized coefficients");
    }
    const Field& ext = *extension_;
    Matrix out(field_, m_, m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Element value = 0;
      for (std::size_t j = 0; j < coefficients.size(); ++j) {
        value = ext.add(value, ext.mul(coefficients[j], frobenius_[j][i]));
      }
      const auto coords = ext.coordinates(value);
      for (std::size_t c = 0; c < m_; ++c) out.set(i, c, coords[c]);
    }
    return out;
  }

  /// Codeword whose coefficient vector has integer encoding `index`, i.e.
  /// a_j is the j-th base-q^m digit of `index`.
  Matrix codeword_at(std::uint64_t index) const {
    std::vector<Element> coeffs(coefficient_count());
    for (auto& a : coeffs) {
      a = static_cast<Element>(index % extension_->order());
      index /= extension_->order();
    }
    return codeword(coeffs);
  }

 private:
  FieldPtr field_;
  FieldPtr extension_;
  std::size_t m_;
  std::size_t delta_;
  // frobenius_[j][i] = (alpha^i)^{q^j}
  std::vector<std::vector<Element>> frobenius_;
};

inline MrdCode::MrdCode(FieldPtr field, std::size_t m, std::size_t delta)
    : field_(std::move(field)), m_(m), delta_(delta) {
  if (!field_) throw Error(ErrorKind::BadParams, "code needs a field");
  if (m < 1 || delta < 1 || delta > m) {
    throw Error(ErrorKind::InvalidDelta, "need 1 <= delta <= m (m=" + std::to_string(m) +
                                             ", delta=" + std::to_string(delta) + ")");
  }
  std::uint64_t ext_order = 1;
  for (std::size_t i = 0; i < m; ++i) {
    ext_order *= field_->order();
    if (ext_order > kMaxExtensionOrder) throw Error(ErrorKind::TooLarge, "q^m exceeds extension cap");
  }
  extension_ = Field::extension(field_, poly::smallest_irreducible(*field_, m));
  const Field& ext = *extension_;
  std::vector<Element> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Element> coords(m, 0);
    coords[i] = 1;
    basis[i] = ext.from_coordinates(coords);
  }
  frobenius_.push_back(basis);
  for (std::size_t j = 1; j < coefficient_count(); ++j) {
    auto next = frobenius_.back();
    for (auto& b : next) b = ext.pow(b, field_->order());
    frobenius_.push_back(std::move(next));
  }
}

inline MrdCode gabidulin_square(std::size_t m, std::size_t delta, FieldPtr field) {
  return MrdCode(std::move(field), m, delta);
}

/// All codewords ordered by coefficient-vector encoding; the zero codeword is first.
inline std::vector<Matrix> enumerate_codewords(const MrdCode& code, std::uint64_t cap = kMaxCodewords) {
  const std::uint64_t count = code.size();
  if (count == 0 || count > cap) throw Error(ErrorKind::TooLarge, "codeword count exceeds enumeration cap");
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(code.codeword_at(i));
  return out;
}

inline void require_uniform_shape(const std::vector<Matrix>& code) {
  if (code.empty()) throw Error(ErrorKind::DimensionMismatch, "empty code");
  for (const auto& c : code) {
    if (c.rows() != code.front().rows() || c.cols() != code.front().cols()) {
      throw Error(ErrorKind::DimensionMismatch, "codewords differ in shape");
    }
  }
}

/// Top t rows of each codeword.
inline std::vector<Matrix> truncate_code(const std::vector<Matrix>& code, std::size_t t) {
  require_uniform_shape(code);
  if (t < 1 || t > code.front().rows()) {
    throw Error(ErrorKind::InvalidT, "truncation t=" + std::to_string(t) + " out of range");
  }
  std::vector<Matrix> out;
  out.reserve(code.size());
  for (const auto& c : code) out.push_back(top_rows(c, t));
  return out;
}

/// Minimum rank distance over distinct index pairs; nullopt for a single codeword.
inline std::optional<std::size_t> min_rank_distance(const std::vector<Matrix>& code) {
  require_uniform_shape(code);
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const std::size_t d = rank_distance(code[i], code[j]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

inline bool verify_mrd(const std::vector<Matrix>& code, std::size_t delta) {
  const auto d = min_rank_distance(code);
  return !d || *d >= delta;
}

}  // namespace flagforge
