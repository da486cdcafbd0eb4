#pragma once

/// Subspaces of GF(q)^n in canonical form, the subspace metric, and
/// identifying vectors.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "flagforge/error.hpp"
#include "flagforge/matrix.hpp"

namespace flagforge {

enum class EchelonVariant { Reduced, Inverse };

class Subspace {
 public:
  /// Row space of `generators`; throws ZeroMatrix for the zero space.
  explicit Subspace(const Matrix& generators) : memo_(std::make_shared<InverseMemo>()) {
    EchelonResult echelon = rref(generators);
    if (echelon.rank() == 0) throw Error(ErrorKind::ZeroMatrix, "subspace of a zero matrix");
    basis_ = std::move(echelon.matrix);
    pivots_ = std::move(echelon.pivots);
  }

  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dimension() const noexcept { return basis_.rows(); }
  const FieldPtr& field() const noexcept { return basis_.field(); }

  /// RREF basis, no zero rows.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Inverse RREF form, computed on first use and shared between copies.
  const EchelonResult& inverse_form() const {
    std::call_once(memo_->once, [this] { memo_->form = inv_rref(basis_); });
    return memo_->form;
  }

  const Matrix& basis(EchelonVariant v) const {
    return v == EchelonVariant::Reduced ? basis_ : inverse_form().matrix;
  }
  const std::vector<std::size_t>& pivots(EchelonVariant v) const {
    return v == EchelonVariant::Reduced ? pivots_ : inverse_form().pivots;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  struct InverseMemo {
    std::once_flag once;
    EchelonResult form;
  };

  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<InverseMemo> memo_;
};

inline Subspace subspace_from_matrix(const Matrix& m) { return Subspace(m); }

inline void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !same_field(u.field(), v.field())) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

/// dim U + dim V - rank of the stacked bases.
inline std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return u.dimension() + v.dimension() - rank(stack(u.basis(), v.basis()));
}

/// d_S(U, V) = dim U + dim V - 2 dim(U ∩ V) = 2 rank[U; V] - dim U - dim V.
inline std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return 2 * rank(stack(u.basis(), v.basis())) - u.dimension() - v.dimension();
}

struct IdVector {
  std::vector<std::uint8_t> bits;

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto b : bits) w += b;
    return w;
  }
  friend bool operator==(const IdVector&, const IdVector&) = default;
};

inline IdVector identifying_vector(const Subspace& u, EchelonVariant v = EchelonVariant::Reduced) {
  IdVector out{std::vector<std::uint8_t>(u.ambient(), 0)};
  for (std::size_t p : u.pivots(v)) out.bits[p] = 1;
  return out;
}

inline IdVector inverse_identifying_vector(const Subspace& u) {
  return identifying_vector(u, EchelonVariant::Inverse);
}

inline std::size_t hamming_distance(const IdVector& a, const IdVector& b) {
  if (a.bits.size() != b.bits.size()) throw Error(ErrorKind::LengthMismatch, "identifying vectors differ in length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) d += a.bits[i] != b.bits[i];
  return d;
}

/// The (inverse) echelon basis with its pivot columns removed, column order kept.
inline Matrix pivot_complement(const Subspace& u, EchelonVariant v = EchelonVariant::Reduced) {
  const auto& piv = u.pivots(v);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < u.ambient(); ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) keep.push_back(c);
  }
  return u.basis(v).select_columns(keep);
}

}  // namespace flagforge
