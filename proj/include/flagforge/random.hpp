#pragma once

/// Seeded generators for property suites and corrupted-code fixtures.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "flagforge/flag.hpp"
#include "flagforge/matrix.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge {

/// Plain modulo reduction of mt19937_64 output keeps streams identical
/// across standard libraries (distribution objects are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline Matrix random_matrix(Rng& rng, const FieldPtr& f, std::size_t rows, std::size_t cols) {
  std::vector<Element> data(rows * cols);
  for (auto& x : data) x = static_cast<Element>(rng.below(f->order()));
  return Matrix(f, rows, cols, std::move(data));
}

inline Matrix random_invertible(Rng& rng, const FieldPtr& f, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, f, n, n);
    if (is_invertible(m)) return m;
  }
}

/// Random k x n matrix, retried until it has rank k.
inline Subspace random_subspace(Rng& rng, const FieldPtr& f, std::size_t n, std::size_t k) {
  for (;;) {
    Matrix m = random_matrix(rng, f, k, n);
    if (rank(m) == k) return Subspace(m);
  }
}

/// Random subspace whose RREF has exactly the given pivot columns.
inline Subspace random_subspace_with_pivots(Rng& rng, const FieldPtr& f, std::size_t n,
                                            const std::vector<std::size_t>& pivots) {
  Matrix m(f, pivots.size(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    m.set(r, pivots[r], 1);
    for (std::size_t c = pivots[r] + 1; c < n; ++c) {
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
        m.set(r, c, static_cast<Element>(rng.below(f->order())));
      }
    }
  }
  return Subspace(m);
}

/// Random nonempty type for ambient n >= 2.
inline FlagType random_flag_type(Rng& rng, std::uint64_t n) {
  std::vector<std::uint64_t> ticks;
  while (ticks.empty()) {
    for (std::uint64_t t = 1; t < n; ++t) {
      if (rng.coin()) ticks.push_back(t);
    }
  }
  return FlagType(n, std::move(ticks));
}

/// Copy of `code` with the flag at `victim` replaced by the flag of a random
/// invertible generator that is not already in the code.
inline FlagCode corrupt_code(const FlagCode& code, std::size_t victim, std::uint64_t seed) {
  Rng rng(seed);
  const auto& f = code.params().field;
  std::vector<Flag> flags = code.flags();
  for (;;) {
    Flag replacement = flag_from_matrix(random_invertible(rng, f, code.type().n()), code.type());
    if (std::find(flags.begin(), flags.end(), replacement) != flags.end()) continue;
    flags.at(victim) = std::move(replacement);
    return FlagCode(code.params(), code.type(), std::move(flags), code.provenance());
  }
}

}  // namespace flagforge
