#pragma once

/// Flags, flag codes, and the MRD-based multilevel flag code construction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagforge/bounds.hpp"
#include "flagforge/error.hpp"
#include "flagforge/matrix.hpp"
#include "flagforge/rank_metric.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge {

class FlagType {
 public:
  FlagType() = default;
  /// ticks must satisfy 0 < t_1 < ... < t_r < n.
  FlagType(std::uint64_t n, std::vector<std::uint64_t> ticks) : n_(n), ticks_(std::move(ticks)) {
    if (ticks_.empty()) throw Error(ErrorKind::BadParams, "flag type needs at least one tick");
    for (std::size_t i = 0; i < ticks_.size(); ++i) {
      if (ticks_[i] == 0 || ticks_[i] >= n_) throw Error(ErrorKind::BadParams, "tick out of range (0, n)");
      if (i > 0 && ticks_[i] <= ticks_[i - 1]) throw Error(ErrorKind::BadParams, "ticks must strictly increase");
    }
  }

  static FlagType full(std::uint64_t n) {
    std::vector<std::uint64_t> t;
    for (std::uint64_t i = 1; i < n; ++i) t.push_back(i);
    return FlagType(n, std::move(t));
  }

  std::uint64_t n() const noexcept { return n_; }
  const std::vector<std::uint64_t>& ticks() const noexcept { return ticks_; }
  std::size_t length() const noexcept { return ticks_.size(); }

  bool contains(std::uint64_t t) const { return std::binary_search(ticks_.begin(), ticks_.end(), t); }
  std::size_t position(std::uint64_t t) const {
    auto it = std::lower_bound(ticks_.begin(), ticks_.end(), t);
    if (it == ticks_.end() || *it != t) throw Error(ErrorKind::BadTick, "tick " + std::to_string(t) + " not in type");
    return static_cast<std::size_t>(it - ticks_.begin());
  }

  friend bool operator==(const FlagType&, const FlagType&) = default;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> ticks_;
};

/// {1..k} ∪ {n-k..n-1}; the full type when n = 2k.
inline FlagType flag_type_set(std::uint64_t n, std::uint64_t k) { return FlagType(n, allowed_ticks(n, k)); }

class Flag {
 public:
  Flag(FlagType type, std::vector<Subspace> subspaces, std::optional<Matrix> generator = std::nullopt)
      : type_(std::move(type)), subspaces_(std::move(subspaces)), generator_(std::move(generator)) {
    if (subspaces_.size() != type_.length()) throw Error(ErrorKind::TypeMismatch, "subspace count differs from type");
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
      if (subspaces_[i].ambient() != type_.n()) throw Error(ErrorKind::AmbientMismatch, "flag component in wrong ambient");
      if (subspaces_[i].dimension() != type_.ticks()[i]) {
        throw Error(ErrorKind::TypeMismatch, "flag component has wrong dimension");
      }
      if (i > 0 && intersection_dim(subspaces_[i - 1], subspaces_[i]) != subspaces_[i - 1].dimension()) {
        throw Error(ErrorKind::TypeMismatch, "flag components are not nested");
      }
    }
  }

  const FlagType& type() const noexcept { return type_; }
  const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
  const Subspace& component(std::size_t i) const { return subspaces_.at(i); }
  const std::optional<Matrix>& generator() const noexcept { return generator_; }
  const FieldPtr& field() const { return subspaces_.front().field(); }

  /// The projection onto a sub-type.
  Flag restricted(const FlagType& sub) const {
    if (sub.n() != type_.n()) throw Error(ErrorKind::TypeMismatch, "restriction to a different ambient");
    std::vector<Subspace> kept;
    for (auto t : sub.ticks()) kept.push_back(subspaces_[type_.position(t)]);
    return Flag(sub, std::move(kept), generator_);
  }

  friend bool operator==(const Flag& a, const Flag& b) { return a.type_ == b.type_ && a.subspaces_ == b.subspaces_; }
  friend bool operator<(const Flag& a, const Flag& b) { return a.subspaces_ < b.subspaces_; }

 private:
  FlagType type_;
  std::vector<Subspace> subspaces_;
  std::optional<Matrix> generator_;
};

/// Sum of component subspace distances.
inline std::uint64_t flag_distance(const Flag& f, const Flag& g) {
  if (!(f.type() == g.type())) throw Error(ErrorKind::TypeMismatch, "flags of different types");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < f.type().length(); ++i) d += subspace_distance(f.component(i), g.component(i));
  return d;
}

/// Flag whose i-th component is the row space of the top t_i rows of `m`.
inline Flag flag_from_matrix(const Matrix& m, const FlagType& type) {
  if (m.rows() != type.n() || m.cols() != type.n()) throw Error(ErrorKind::DimensionMismatch, "generator must be n x n");
  if (!is_invertible(m)) throw Error(ErrorKind::NotInvertible, "flag generator is singular");
  std::vector<Subspace> parts;
  parts.reserve(type.length());
  for (auto t : type.ticks()) parts.emplace_back(top_rows(m, t));
  return Flag(type, std::move(parts), m);
}

/// Which template of the construction produced a generator.
struct Provenance {
  enum class Family { D, G, O, Ma, MaPlus1 };

  Family family = Family::D;
  /// The i of D_i for the G and O families.
  std::size_t level = 0;
  /// Codeword index in enumeration order (0 for O, M(a), M(a+1)).
  std::uint64_t index = 0;

  std::string label() const {
    switch (family) {
      case Family::D: return "D";
      case Family::G: return "G" + std::to_string(level);
      case Family::O: return "O" + std::to_string(level);
      case Family::Ma: return "M(a)";
      case Family::MaPlus1: return "M(a+1)";
    }
    return "?";
  }

  static Provenance parse(std::string_view label, std::uint64_t index) {
    Provenance p;
    p.index = index;
    auto level_of = [&](std::string_view digits) {
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::Malformed, "bad provenance label '" + std::string(label) + "'");
      }
      return static_cast<std::size_t>(std::stoul(std::string(digits)));
    };
    if (label == "D") {
      p.family = Family::D;
    } else if (label == "M(a)") {
      p.family = Family::Ma;
    } else if (label == "M(a+1)") {
      p.family = Family::MaPlus1;
    } else if (!label.empty() && label.front() == 'G') {
      p.family = Family::G;
      p.level = level_of(label.substr(1));
    } else if (!label.empty() && label.front() == 'O') {
      p.family = Family::O;
      p.level = level_of(label.substr(1));
    } else {
      throw Error(ErrorKind::Malformed, "bad provenance label '" + std::string(label) + "'");
    }
    return p;
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct GeneratorMatrix {
  Matrix matrix;
  Provenance provenance;
};

struct CodeParams {
  FieldPtr field;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t a = 0;
  std::uint64_t r = 0;

  static CodeParams make(FieldPtr field, std::uint64_t n, std::uint64_t k) {
    const auto div = divide_length(n, k);
    return {std::move(field), n, k, div.a, div.r};
  }
  std::uint64_t q() const { return field->order(); }
};

class FlagCode {
 public:
  /// Validates shared type and field and the absence of duplicate flags.
  FlagCode(CodeParams params, FlagType type, std::vector<Flag> flags, std::vector<Provenance> provenance = {})
      : params_(std::move(params)), type_(std::move(type)), flags_(std::move(flags)), provenance_(std::move(provenance)) {
    if (!provenance_.empty() && provenance_.size() != flags_.size()) {
      throw Error(ErrorKind::BadParams, "provenance count differs from flag count");
    }
    for (const auto& f : flags_) {
      if (!(f.type() == type_)) throw Error(ErrorKind::TypeMismatch, "flag type differs from code type");
      if (!same_field(f.field(), params_.field)) throw Error(ErrorKind::FieldMismatch, "flag over a different field");
    }
    std::vector<const Flag*> sorted;
    for (const auto& f : flags_) sorted.push_back(&f);
    std::sort(sorted.begin(), sorted.end(), [](const Flag* x, const Flag* y) { return *x < *y; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (*sorted[i - 1] == *sorted[i]) throw Error(ErrorKind::BadParams, "duplicate flag in code");
    }
  }

  const CodeParams& params() const noexcept { return params_; }
  const FlagType& type() const noexcept { return type_; }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  const std::vector<Provenance>& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return flags_.size(); }

 private:
  CodeParams params_;
  FlagType type_;
  std::vector<Flag> flags_;
  std::vector<Provenance> provenance_;
};

namespace detail {

inline Matrix zeros(const FieldPtr& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }
inline Matrix eye(const FieldPtr& f, std::size_t n) { return Matrix::identity(f, n); }

inline void assert_invertible(const Matrix& m, const Provenance& p) {
  if (!is_invertible(m)) throw Error(ErrorKind::InternalAssert, "template " + p.label() + " is singular");
}

}  // namespace detail

/// The generator matrices of the construction, in provenance order: nonzero
/// codewords of D_{a-1}; then for i = 0..a-2 the codewords of D_i (zero first,
/// as M(O)); then M(a) and M(a+1).
inline std::vector<GeneratorMatrix> build_matrix_set(std::uint64_t n, std::uint64_t k, const FieldPtr& f) {
  using detail::eye;
  using detail::zeros;
  using Family = Provenance::Family;
  const CodeParams params = CodeParams::make(f, n, k);
  const std::size_t a = params.a;
  std::vector<GeneratorMatrix> out;

  // M(D) = [A I_k; B O; A O] for D = [A; B] in an [(n-k) x (n-k), n-k] MRD code.
  {
    const auto code = enumerate_codewords(gabidulin_square(n - k, n - k, f));
    for (std::uint64_t idx = 1; idx < code.size(); ++idx) {
      const Matrix& d = code[idx];
      const Matrix top = row_slice(d, 0, k);
      const Matrix rest = row_slice(d, k, n - 2 * k);
      Provenance p{Family::D, a - 1, idx};
      if (rank(top) != k) throw Error(ErrorKind::InternalAssert, "top k rows of an MRD codeword lost rank");
      Matrix m = block_assemble({{top, eye(f, k)}, {rest, zeros(f, n - 2 * k, k)}, {top, zeros(f, k, k)}});
      detail::assert_invertible(m, p);
      out.push_back({std::move(m), p});
    }
  }

  for (std::size_t i = 0; a >= 2 && i + 2 <= a; ++i) {
    const std::size_t side = n - (i + 2) * k;  // D_i is side x side
    const std::size_t lower = side - k;         // n - (i+3)k
    const std::size_t ik = i * k;
    const auto code = enumerate_codewords(gabidulin_square(side, side, f));
    for (std::uint64_t idx = 0; idx < code.size(); ++idx) {
      Matrix m;
      Provenance p;
      if (idx == 0) {
        // Column blocks (ik, k, k, n-(i+3)k, k).
        p = {Family::O, i, 0};
        m = block_assemble({
            {zeros(f, k, ik), eye(f, k), zeros(f, k, k), zeros(f, k, lower), zeros(f, k, k)},
            {zeros(f, lower, ik), zeros(f, lower, k), zeros(f, lower, k), eye(f, lower), zeros(f, lower, k)},
            {eye(f, ik), zeros(f, ik, k), zeros(f, ik, k), zeros(f, ik, lower), zeros(f, ik, k)},
            {zeros(f, k, ik), zeros(f, k, k), zeros(f, k, k), zeros(f, k, lower), eye(f, k)},
            {zeros(f, k, ik), zeros(f, k, k), eye(f, k), zeros(f, k, lower), zeros(f, k, k)},
        });
      } else {
        // Column blocks (ik, k, n-(i+2)k, k).
        p = {Family::G, i, idx};
        const Matrix c = row_slice(code[idx], 0, k);
        const Matrix d = row_slice(code[idx], k, lower);
        if (rank(c) != k) throw Error(ErrorKind::InternalAssert, "top k rows of an MRD codeword lost rank");
        m = block_assemble({
            {zeros(f, k, ik), eye(f, k), c, zeros(f, k, k)},
            {zeros(f, lower, ik), zeros(f, lower, k), d, zeros(f, lower, k)},
            {eye(f, ik), zeros(f, ik, k), zeros(f, ik, side), zeros(f, ik, k)},
            {zeros(f, k, ik), zeros(f, k, k), zeros(f, k, side), eye(f, k)},
            {zeros(f, k, ik), zeros(f, k, k), c, zeros(f, k, k)},
        });
      }
      detail::assert_invertible(m, p);
      out.push_back({std::move(m), p});
    }
  }

  const std::size_t mid = n - 2 * k;
  {
    // Column blocks (k, n-2k, k).
    Provenance p{Family::Ma, a, 0};
    Matrix m = block_assemble({
        {zeros(f, k, k), zeros(f, k, mid), eye(f, k)},
        {zeros(f, mid, k), eye(f, mid), zeros(f, mid, k)},
        {eye(f, k), zeros(f, k, mid), zeros(f, k, k)},
    });
    detail::assert_invertible(m, p);
    out.push_back({std::move(m), p});
  }
  {
    // Column blocks (n-2k, k, k).
    Provenance p{Family::MaPlus1, a + 1, 0};
    Matrix m = block_assemble({
        {zeros(f, k, mid), eye(f, k), zeros(f, k, k)},
        {eye(f, mid), zeros(f, mid, k), zeros(f, mid, k)},
        {zeros(f, k, mid), zeros(f, k, k), eye(f, k)},
    });
    detail::assert_invertible(m, p);
    out.push_back({std::move(m), p});
  }

  if (BigInt(out.size()) != odfc_size_formula(n, k, f->order())) {
    throw Error(ErrorKind::InternalAssert, "generator count disagrees with the size formula");
  }
  return out;
}

/// The optimum distance flag code of type `ticks` (a subset of {1..k} ∪ {n-k..n-1}).
inline FlagCode construct_odfc(std::uint64_t n, std::uint64_t k, std::vector<std::uint64_t> ticks, const FieldPtr& f) {
  const CodeParams params = CodeParams::make(f, n, k);
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
  require_allowed_ticks(n, k, ticks);
  const FlagType full = flag_type_set(n, k);
  const FlagType type(n, std::move(ticks));

  std::vector<Flag> flags;
  std::vector<Provenance> provenance;
  for (auto& g : build_matrix_set(n, k, f)) {
    flags.push_back(flag_from_matrix(g.matrix, full).restricted(type));
    provenance.push_back(g.provenance);
  }
  return FlagCode(params, type, std::move(flags), std::move(provenance));
}

}  // namespace flagforge
