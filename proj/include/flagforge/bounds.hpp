#pragma once

/// Closed-form sizes and upper bounds for partial spreads and optimum
/// distance flag codes, in exact integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagforge/error.hpp"

namespace flagforge {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

/// Largest s with s^2 <= x.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw Error(ErrorKind::BadParams, "isqrt of a negative number");
  return boost::multiprecision::sqrt(x);
}

/// floor(a / b) for b > 0, rounding toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt quotient = a / b;
  if ((a % b != 0) && (a < 0)) quotient -= 1;
  return quotient;
}

/// [r; 1]_q = (q^r - 1)/(q - 1), the number of points of PG(r-1, q).
inline BigInt gaussian_binomial_1(std::uint64_t r, std::uint64_t q) {
  BigInt sum = 0;
  for (std::uint64_t j = 0; j < r; ++j) sum += big_pow(q, j);
  return sum;
}

/// n = (a + 1) k + r with 0 <= r < k.
struct Division {
  std::uint64_t a;
  std::uint64_t r;
};

inline Division divide_length(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || n < 2 * k) {
    throw Error(ErrorKind::BadParams, "need n >= 2k >= 2 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  return {n / k - 1, n % k};
}

/// (q^n - q^{k+r})/(q^k - 1) + 1, the size of the MRD-based flag code.
inline BigInt odfc_size_formula(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  const std::uint64_t r = divide_length(n, k).r;
  return (big_pow(q, n) - big_pow(q, k + r)) / (big_pow(q, k) - 1) + 1;
}

/// The Drake-Freeman style bound on partial k-spreads when k does not divide n.
inline BigInt drake_freeman_bound(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  const std::uint64_t r = divide_length(n, k).r;
  if (r == 0) throw Error(ErrorKind::BadParams, "bound needs k not dividing n");
  const BigInt qk = big_pow(q, k);
  const BigInt qr = big_pow(q, r);
  const BigInt root = isqrt(4 * qk * (qk - qr) + 1);
  // floor((sqrt(x) - c) / 2) == floor((isqrt(x) - c) / 2) for integer c.
  const BigInt correction = floor_div(root - (2 * qk - 2 * qr + 1), 2);
  return (big_pow(q, n) - qr) / (qk - 1) - correction - 1;
}

struct CdcBound {
  BigInt bound;
  /// The bound is the exact maximum size of a partial k-spread.
  bool exact = false;
  /// Set when k does not divide n, even if the exact branch also applies.
  std::optional<BigInt> drake_freeman;
};

/// Upper bound on A_q(n, 2k, k), the largest partial k-spread in GF(q)^n.
inline CdcBound cdc_upper_bound(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::BadParams, "q must be >= 2");
  const std::uint64_t r = divide_length(n, k).r;
  CdcBound out;
  if (r != 0) out.drake_freeman = drake_freeman_bound(n, k, q);
  if (BigInt(k) > gaussian_binomial_1(r, q)) {
    out.bound = odfc_size_formula(n, k, q);
    out.exact = true;
  } else {
    out.bound = *out.drake_freeman;
  }
  return out;
}

/// Ceiling on the minimum distance of a flag code of the given type:
/// 2 (sum_{t <= n/2} t + sum_{t > n/2} (n - t)).
inline std::uint64_t max_flag_distance_bound(std::uint64_t n, std::span<const std::uint64_t> ticks) {
  std::uint64_t sum = 0;
  for (auto t : ticks) sum += (t <= n / 2) ? t : n - t;
  return 2 * sum;
}

enum class Optimality { Optimal, NotProvenOptimal, BoundInapplicable };

constexpr std::string_view to_string(Optimality o) noexcept {
  switch (o) {
    case Optimality::Optimal: return "optimal";
    case Optimality::NotProvenOptimal: return "not-proven-optimal";
    case Optimality::BoundInapplicable: return "bound-inapplicable";
  }
  return "unknown";
}

struct OdfcBounds {
  BigInt size_formula;
  std::optional<BigInt> upper_bound;
  /// Both numbers when k does not divide n and the exact branch also applies.
  std::optional<BigInt> drake_freeman;
  BigInt gaussian_r;  // [r; 1]_q
  Optimality verdict = Optimality::BoundInapplicable;
};

/// {1..k} ∪ {n-k..n-1}, sorted and deduplicated.
inline std::vector<std::uint64_t> allowed_ticks(std::uint64_t n, std::uint64_t k) {
  divide_length(n, k);
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t <= k; ++t) out.push_back(t);
  for (std::uint64_t t = n - k; t < n; ++t) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void require_allowed_ticks(std::uint64_t n, std::uint64_t k, std::span<const std::uint64_t> ticks) {
  const auto allowed = allowed_ticks(n, k);
  if (ticks.empty()) throw Error(ErrorKind::BadTypeSet, "type set is empty");
  for (auto t : ticks) {
    if (!std::binary_search(allowed.begin(), allowed.end(), t)) {
      throw Error(ErrorKind::BadTypeSet, "tick " + std::to_string(t) + " not in {1..k} ∪ {n-k..n-1}");
    }
  }
}

/// Size of the construction against the flag-code upper bound for type set `ticks`.
inline OdfcBounds odfc_bounds(std::uint64_t n, std::uint64_t k, std::uint64_t q,
                              std::span<const std::uint64_t> ticks) {
  require_allowed_ticks(n, k, ticks);
  const std::uint64_t r = divide_length(n, k).r;
  OdfcBounds out;
  out.size_formula = odfc_size_formula(n, k, q);
  out.gaussian_r = gaussian_binomial_1(r, q);
  const bool anchored = std::any_of(ticks.begin(), ticks.end(), [&](auto t) { return t == k || t == n - k; });
  if (!anchored) return out;
  const CdcBound cdc = cdc_upper_bound(n, k, q);
  out.upper_bound = cdc.bound;
  out.drake_freeman = cdc.drake_freeman;
  out.verdict = BigInt(k) > out.gaussian_r ? Optimality::Optimal : Optimality::NotProvenOptimal;
  return out;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace flagforge
